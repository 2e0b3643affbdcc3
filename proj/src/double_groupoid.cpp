#include "mgt/double_groupoid.hpp"

#include "check_runner.hpp"
#include "mgt/error.hpp"

namespace mgt {

namespace {

void check_square(const MatchedPairData& mp, Square s, const char* name) {
  if (s.m < 0 || s.m >= mp.msize() || s.n < 0 || s.n >= mp.nsize())
    throw ArgumentError(std::string("square ") + name + " has out-of-range edges");
}

std::string square_str(const MatchedPairData& mp, Square s) {
  return "(" + mp.Mtab.render(s.m) + ", " + mp.Ntab.render(s.n) + ")";
}

}  // namespace

std::int32_t top_edge(const MatchedPairData& mp, Square s) { return mp.left(s.m, s.n); }

std::int32_t right_edge(const MatchedPairData& mp, Square s) { return mp.right(s.m, s.n); }

Square compose_h(const MatchedPairData& mp, Square s1, Square s2) {
  check_square(mp, s1, "s1");
  check_square(mp, s2, "s2");
  if (s2.m != right_edge(mp, s1))
    throw NotComposableError("horizontal composition undefined: left edge of " +
                             square_str(mp, s2) + " is not the right edge " +
                             mp.Mtab.render(right_edge(mp, s1)) + " of " + square_str(mp, s1));
  return Square{s1.m, mp.Ntab.at(s1.n, s2.n)};
}

Square compose_v(const MatchedPairData& mp, Square s1, Square s2) {
  check_square(mp, s1, "s1");
  check_square(mp, s2, "s2");
  if (s1.n != top_edge(mp, s2))
    throw NotComposableError("vertical composition undefined: bottom edge of " +
                             square_str(mp, s1) + " is not the top edge " +
                             mp.Ntab.render(top_edge(mp, s2)) + " of " + square_str(mp, s2));
  return Square{mp.Mtab.at(s1.m, s2.m), s2.n};
}

VerificationReport verify_interchange(const MatchedPairData& mp, const VerifyOptions& opt) {
  validate_shape(mp);
  const std::int32_t ms = mp.msize(), ns = mp.nsize();
  const std::int64_t grids = static_cast<std::int64_t>(ms) * ms * ns * ns;
  auto decode = [ms, ns](std::int64_t i) {
    return std::array<std::int32_t, 4>{
        static_cast<std::int32_t>(i / (static_cast<std::int64_t>(ms) * ns * ns)),
        static_cast<std::int32_t>((i / (static_cast<std::int64_t>(ns) * ns)) % ms),
        static_cast<std::int32_t>((i / ns) % ns), static_cast<std::int32_t>(i % ns)};
  };
  // Grid layout: z bottom-left, w bottom-right, x top-left, y top-right;
  // the free parameters are x.m = l and z = (m, n), w's bottom edge p.
  auto build = [&](std::int32_t l, std::int32_t m, std::int32_t n, std::int32_t p) {
    const Square z{m, n};
    const Square w{right_edge(mp, z), p};
    const Square x{l, top_edge(mp, z)};
    const Square y{right_edge(mp, x), top_edge(mp, w)};
    return std::array<Square, 4>{x, y, z, w};
  };
  auto evaluate = [&](std::int64_t i, Square& lhs, Square& rhs) {
    const auto [l, m, n, p] = decode(i);
    const auto [x, y, z, w] = build(l, m, n, p);
    lhs = compose_h(mp, compose_v(mp, x, z), compose_v(mp, y, w));
    rhs = compose_v(mp, compose_h(mp, x, y), compose_h(mp, z, w));
    return lhs != rhs;
  };
  VerificationReport report;
  report.subject = "interchange";
  report.add(detail::run_check(
      "interchange_law", grids,
      [&](std::int64_t i) {
        Square lhs, rhs;
        try {
          return evaluate(i, lhs, rhs);
        } catch (const NotComposableError&) {
          return true;
        }
      },
      [&](std::int64_t i) {
        const auto [l, m, n, p] = decode(i);
        Witness w{{{"l", mp.Mtab.render(l)},
                   {"m", mp.Mtab.render(m)},
                   {"n", mp.Ntab.render(n)},
                   {"p", mp.Ntab.render(p)}},
                  "",
                  ""};
        Square lhs, rhs;
        try {
          evaluate(i, lhs, rhs);
          w.lhs = square_str(mp, lhs);
          w.rhs = square_str(mp, rhs);
        } catch (const NotComposableError& e) {
          w.lhs = "undefined";
          w.rhs = e.what();
        }
        return w;
      },
      opt.counterexample_cap, opt.exec));
  return report;
}

Square fill_square(const MatchedPairData& mp, EdgeQuery query, bool checked) {
  validate_shape(mp);
  const std::int32_t ms = mp.msize(), ns = mp.nsize();
  const bool first_is_m = query.kind == EdgePair::LeftBottom || query.kind == EdgePair::LeftTop;
  const bool second_is_m =
      query.kind == EdgePair::BottomRight || query.kind == EdgePair::TopRight;
  if (query.first < 0 || query.first >= (first_is_m ? ms : ns))
    throw ArgumentError("first edge value out of range");
  if (query.second < 0 || query.second >= (second_is_m ? ms : ns))
    throw ArgumentError("second edge value out of range");

  auto matches = [&](Square s) {
    switch (query.kind) {
      case EdgePair::LeftBottom: return s.m == query.first && s.n == query.second;
      case EdgePair::LeftTop: return s.m == query.first && top_edge(mp, s) == query.second;
      case EdgePair::BottomRight:
        return s.n == query.first && right_edge(mp, s) == query.second;
      case EdgePair::TopRight:
        return top_edge(mp, s) == query.first && right_edge(mp, s) == query.second;
    }
    return false;
  };

  std::vector<Square> found;
  if (checked) {
    // Exhaustive uniqueness scan.
    for (std::int32_t m = 0; m < ms && found.size() < 2; ++m)
      for (std::int32_t n = 0; n < ns; ++n)
        if (matches(Square{m, n})) {
          found.push_back(Square{m, n});
          if (found.size() >= 2) break;
        }
  } else {
    switch (query.kind) {
      case EdgePair::LeftBottom:
        found.push_back(Square{query.first, query.second});
        break;
      case EdgePair::LeftTop:
        // Invert n -> ^m n within row m.
        for (std::int32_t n = 0; n < ns && found.size() < 2; ++n)
          if (mp.left(query.first, n) == query.second) found.push_back(Square{query.first, n});
        break;
      case EdgePair::BottomRight:
        // Invert m -> m^n within column n.
        for (std::int32_t m = 0; m < ms && found.size() < 2; ++m)
          if (mp.right(m, query.first) == query.second) found.push_back(Square{m, query.first});
        break;
      case EdgePair::TopRight:
        for (std::int32_t m = 0; m < ms && found.size() < 2; ++m)
          for (std::int32_t n = 0; n < ns; ++n)
            if (matches(Square{m, n})) {
              found.push_back(Square{m, n});
              if (found.size() >= 2) break;
            }
        break;
    }
  }
  if (found.empty()) throw FillerError("no square fills the given edges");
  if (found.size() > 1)
    throw FillerError("edges filled by more than one square: " + square_str(mp, found[0]) +
                      " and " + square_str(mp, found[1]));
  return found[0];
}

BicrossCell derived_composition(const MatchedPairData& mp, BicrossCell a, BicrossCell b,
                                bool checked) {
  check_square(mp, Square{a.m, a.n}, "a");
  check_square(mp, Square{b.m, b.n}, "b");
  // The dashed square of the composite diagram: top edge a.n, right edge
  // b.m; its left and bottom edges splice the two factors together.
  const Square s = fill_square(mp, EdgeQuery{EdgePair::TopRight, a.n, b.m}, checked);
  return BicrossCell{mp.Mtab.at(a.m, s.m), mp.Ntab.at(s.n, b.n)};
}

}  // namespace mgt
