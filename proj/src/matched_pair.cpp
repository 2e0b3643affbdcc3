#include "mgt/matched_pair.hpp"

#include "check_runner.hpp"
#include "mgt/error.hpp"

namespace mgt {

void validate_shape(const MatchedPairData& mp) {
  const std::int64_t cells = static_cast<std::int64_t>(mp.msize()) * mp.nsize();
  if (static_cast<std::int64_t>(mp.left_act.size()) != cells ||
      static_cast<std::int64_t>(mp.right_act.size()) != cells)
    throw ArgumentError("action tables have the wrong shape");
  for (std::int32_t v : mp.left_act)
    if (v < 0 || v >= mp.nsize()) throw ArgumentError("left action entry out of range");
  for (std::int32_t v : mp.right_act)
    if (v < 0 || v >= mp.msize()) throw ArgumentError("right action entry out of range");
}

MatchedPairData derive_matched_pair(const PairFactorization& pf) {
  MatchedPairData mp;
  mp.Mtab = subgroup_table(pf.M);
  mp.Ntab = subgroup_table(pf.N);
  mp.origin = &pf;
  const std::int32_t msize = pf.M.size(), nsize = pf.N.size();
  mp.left_act.resize(static_cast<std::size_t>(msize) * nsize);
  mp.right_act.resize(static_cast<std::size_t>(msize) * nsize);
  const GroupTable& G = *pf.G;
  for (std::int32_t i = 0; i < msize; ++i)
    for (std::int32_t j = 0; j < nsize; ++j) {
      const Elem g = G.at(pf.M.elements[i], pf.N.elements[j]);
      const NMParts rev = pf.decomp_rev[g];
      mp.left_act[static_cast<std::size_t>(i) * nsize + j] = rev.n;
      mp.right_act[static_cast<std::size_t>(i) * nsize + j] = rev.m;
    }
  return mp;
}

namespace {

std::string mstr(const MatchedPairData& mp, std::int32_t m) { return mp.Mtab.render(m); }
std::string nstr(const MatchedPairData& mp, std::int32_t n) { return mp.Ntab.render(n); }

}  // namespace

VerificationReport verify_pair_axioms(const MatchedPairData& mp, const VerifyOptions& opt) {
  validate_shape(mp);
  const std::int32_t ms = mp.msize(), ns = mp.nsize();
  VerificationReport report;
  report.subject = "pair axioms";

  // Unit laws, one instance per element of M and of N.
  report.add(detail::run_check(
      "unit_laws", static_cast<std::int64_t>(ms) + ns,
      [&](std::int64_t i) {
        if (i < ms) {
          const auto m = static_cast<std::int32_t>(i);
          return mp.right(m, 0) != m || mp.left(m, 0) != 0;
        }
        const auto n = static_cast<std::int32_t>(i - ms);
        return mp.left(0, n) != n || mp.right(0, n) != 0;
      },
      [&](std::int64_t i) {
        Witness w;
        if (i < ms) {
          const auto m = static_cast<std::int32_t>(i);
          w.inputs = {{"m", mstr(mp, m)}};
          w.lhs = "m^1=" + mstr(mp, mp.right(m, 0));
          w.rhs = "^m1=" + nstr(mp, mp.left(m, 0));
        } else {
          const auto n = static_cast<std::int32_t>(i - ms);
          w.inputs = {{"n", nstr(mp, n)}};
          w.lhs = "^1n=" + nstr(mp, mp.left(0, n));
          w.rhs = "1^n=" + mstr(mp, mp.right(0, n));
        }
        return w;
      },
      opt.counterexample_cap, opt.exec));

  // m^(np) = (m^n)^p over M x N x N.
  const std::int64_t mnn = static_cast<std::int64_t>(ms) * ns * ns;
  auto decode_mnn = [ms, ns](std::int64_t i) {
    return std::array<std::int32_t, 3>{static_cast<std::int32_t>(i / (ns * ns)),
                                       static_cast<std::int32_t>((i / ns) % ns),
                                       static_cast<std::int32_t>(i % ns)};
  };
  report.add(detail::run_check(
      "right_action_product", mnn,
      [&](std::int64_t i) {
        const auto [m, n, p] = decode_mnn(i);
        return mp.right(m, mp.Ntab.at(n, p)) != mp.right(mp.right(m, n), p);
      },
      [&](std::int64_t i) {
        const auto [m, n, p] = decode_mnn(i);
        return Witness{{{"m", mstr(mp, m)}, {"n", nstr(mp, n)}, {"p", nstr(mp, p)}},
                       mstr(mp, mp.right(m, mp.Ntab.at(n, p))),
                       mstr(mp, mp.right(mp.right(m, n), p))};
      },
      opt.counterexample_cap, opt.exec));

  // ^m(np) = ^mn * ^(m^n)p over M x N x N.
  report.add(detail::run_check(
      "left_action_product", mnn,
      [&](std::int64_t i) {
        const auto [m, n, p] = decode_mnn(i);
        return mp.left(m, mp.Ntab.at(n, p)) !=
               mp.Ntab.at(mp.left(m, n), mp.left(mp.right(m, n), p));
      },
      [&](std::int64_t i) {
        const auto [m, n, p] = decode_mnn(i);
        return Witness{{{"m", mstr(mp, m)}, {"n", nstr(mp, n)}, {"p", nstr(mp, p)}},
                       nstr(mp, mp.left(m, mp.Ntab.at(n, p))),
                       nstr(mp, mp.Ntab.at(mp.left(m, n), mp.left(mp.right(m, n), p)))};
      },
      opt.counterexample_cap, opt.exec));

  // ^(lm)n = ^l(^mn) over M x M x N.
  const std::int64_t mmn = static_cast<std::int64_t>(ms) * ms * ns;
  auto decode_mmn = [ms, ns](std::int64_t i) {
    return std::array<std::int32_t, 3>{static_cast<std::int32_t>(i / (ms * ns)),
                                       static_cast<std::int32_t>((i / ns) % ms),
                                       static_cast<std::int32_t>(i % ns)};
  };
  report.add(detail::run_check(
      "left_action_composition", mmn,
      [&](std::int64_t i) {
        const auto [l, m, n] = decode_mmn(i);
        return mp.left(mp.Mtab.at(l, m), n) != mp.left(l, mp.left(m, n));
      },
      [&](std::int64_t i) {
        const auto [l, m, n] = decode_mmn(i);
        return Witness{{{"l", mstr(mp, l)}, {"m", mstr(mp, m)}, {"n", nstr(mp, n)}},
                       nstr(mp, mp.left(mp.Mtab.at(l, m), n)),
                       nstr(mp, mp.left(l, mp.left(m, n)))};
      },
      opt.counterexample_cap, opt.exec));

  // (lm)^n = (l^(^mn)) * m^n over M x M x N.
  report.add(detail::run_check(
      "right_action_composition", mmn,
      [&](std::int64_t i) {
        const auto [l, m, n] = decode_mmn(i);
        return mp.right(mp.Mtab.at(l, m), n) !=
               mp.Mtab.at(mp.right(l, mp.left(m, n)), mp.right(m, n));
      },
      [&](std::int64_t i) {
        const auto [l, m, n] = decode_mmn(i);
        return Witness{{{"l", mstr(mp, l)}, {"m", mstr(mp, m)}, {"n", nstr(mp, n)}},
                       mstr(mp, mp.right(mp.Mtab.at(l, m), n)),
                       mstr(mp, mp.Mtab.at(mp.right(l, mp.left(m, n)), mp.right(m, n)))};
      },
      opt.counterexample_cap, opt.exec));

  return report;
}

VerificationReport verify_inverse_identities(const MatchedPairData& mp, const VerifyOptions& opt) {
  validate_shape(mp);
  const std::int32_t ns = mp.nsize();
  const std::int64_t total = static_cast<std::int64_t>(mp.msize()) * ns;
  VerificationReport report;
  report.subject = "inverse identities";

  // (^mn)^-1 = ^(m^n)(n^-1) over M x N.
  report.add(detail::run_check(
      "inverse_left_action", total,
      [&](std::int64_t i) {
        const auto [m, n] = kernels::decode2(i, ns);
        return mp.Ntab.inv(mp.left(m, n)) != mp.left(mp.right(m, n), mp.Ntab.inv(n));
      },
      [&](std::int64_t i) {
        const auto [m, n] = kernels::decode2(i, ns);
        return Witness{{{"m", mstr(mp, m)}, {"n", nstr(mp, n)}},
                       nstr(mp, mp.Ntab.inv(mp.left(m, n))),
                       nstr(mp, mp.left(mp.right(m, n), mp.Ntab.inv(n)))};
      },
      opt.counterexample_cap, opt.exec));

  // (m^n)^-1 = (m^-1)^(^mn) over M x N.
  report.add(detail::run_check(
      "inverse_right_action", total,
      [&](std::int64_t i) {
        const auto [m, n] = kernels::decode2(i, ns);
        return mp.Mtab.inv(mp.right(m, n)) != mp.right(mp.Mtab.inv(m), mp.left(m, n));
      },
      [&](std::int64_t i) {
        const auto [m, n] = kernels::decode2(i, ns);
        return Witness{{{"m", mstr(mp, m)}, {"n", nstr(mp, n)}},
                       mstr(mp, mp.Mtab.inv(mp.right(m, n))),
                       mstr(mp, mp.right(mp.Mtab.inv(m), mp.left(m, n)))};
      },
      opt.counterexample_cap, opt.exec));

  return report;
}

std::int32_t pairing_ne(const MatchedPairData& mp, std::int32_t m, std::int32_t n) {
  return mp.right(m, mp.left(mp.Mtab.inv(m), mp.Ntab.inv(n)));
}

std::int32_t pairing_nw(const MatchedPairData& mp, std::int32_t m, std::int32_t n) {
  return mp.left(mp.right(mp.Mtab.inv(m), mp.Ntab.inv(n)), n);
}

BicrossCell bicross_multiply(const MatchedPairData& mp, std::int32_t m, std::int32_t n,
                             std::int32_t l, std::int32_t p) {
  return BicrossCell{mp.Mtab.at(m, pairing_ne(mp, l, n)), mp.Ntab.at(pairing_nw(mp, l, n), p)};
}

GroupTable bicrossproduct(const MatchedPairData& mp) {
  validate_shape(mp);
  const std::int32_t ms = mp.msize(), ns = mp.nsize();
  const std::int32_t order = ms * ns;
  std::vector<std::int32_t> mul(static_cast<std::size_t>(order) * order);
  for (std::int32_t m = 0; m < ms; ++m)
    for (std::int32_t n = 0; n < ns; ++n)
      for (std::int32_t l = 0; l < ms; ++l)
        for (std::int32_t p = 0; p < ns; ++p) {
          const BicrossCell c = bicross_multiply(mp, m, n, l, p);
          mul[static_cast<std::size_t>(m * ns + n) * order + (l * ns + p)] = c.m * ns + c.n;
        }
  return GroupTable::from_mul_table(order, std::move(mul));
}

VerificationReport verify_canonical_map(const MatchedPairData& mp, const PairFactorization& pf,
                                        const VerifyOptions& opt) {
  validate_shape(mp);
  if (mp.msize() != pf.M.size() || mp.nsize() != pf.N.size())
    throw ArgumentError("matched pair does not match the factorization's factor sizes");
  const GroupTable& G = *pf.G;
  const std::int32_t ms = mp.msize(), ns = mp.nsize();
  const std::int64_t cells = static_cast<std::int64_t>(ms) * ns;
  auto phi = [&](std::int32_t m, std::int32_t n) {
    return G.at(pf.M.elements[m], pf.N.elements[n]);
  };
  VerificationReport report;
  report.subject = "canonical map";
  report.group_order = G.order();

  // Bijectivity of (m, n) -> m*n, by counting hits.
  {
    CheckTimer timer;
    CheckResult check;
    check.id = "canonical_map_bijective";
    check.instances = cells;
    std::vector<std::int32_t> hit(G.order(), -1);
    for (std::int32_t m = 0; m < ms && static_cast<int>(check.counterexamples.size()) <
                                           opt.counterexample_cap;
         ++m)
      for (std::int32_t n = 0; n < ns; ++n) {
        const Elem g = phi(m, n);
        if (hit[g] >= 0) {
          check.counterexamples.push_back(
              Witness{{{"m", mstr(mp, m)}, {"n", nstr(mp, n)}},
                      G.render(g),
                      "already reached from (m,n) index " + std::to_string(hit[g])});
          if (static_cast<int>(check.counterexamples.size()) >= opt.counterexample_cap) break;
        } else {
          hit[g] = m * ns + n;
        }
      }
    check.status = check.counterexamples.empty() ? CheckStatus::Pass : CheckStatus::Fail;
    check.ms = timer.elapsed_ms();
    report.add(std::move(check));
  }

  // Homomorphism: phi((m,n)(l,p)) = phi(m,n) * phi(l,p) over all cell pairs.
  report.add(detail::run_check(
      "canonical_map_homomorphism", cells * cells,
      [&](std::int64_t i) {
        const auto [x, y] = kernels::decode2(i, static_cast<std::int32_t>(cells));
        const auto [m, n] = kernels::decode2(x, ns);
        const auto [l, p] = kernels::decode2(y, ns);
        const BicrossCell c = bicross_multiply(mp, m, n, l, p);
        return phi(c.m, c.n) != G.at(phi(m, n), phi(l, p));
      },
      [&](std::int64_t i) {
        const auto [x, y] = kernels::decode2(i, static_cast<std::int32_t>(cells));
        const auto [m, n] = kernels::decode2(x, ns);
        const auto [l, p] = kernels::decode2(y, ns);
        const BicrossCell c = bicross_multiply(mp, m, n, l, p);
        return Witness{
            {{"m", mstr(mp, m)}, {"n", nstr(mp, n)}, {"l", mstr(mp, l)}, {"p", nstr(mp, p)}},
            G.render(phi(c.m, c.n)),
            G.render(G.at(phi(m, n), phi(l, p)))};
      },
      opt.counterexample_cap, opt.exec));

  // Reversed product in G: n*m = (m NE n)(m NW n) over M x N.
  report.add(detail::run_check(
      "reversed_product", cells,
      [&](std::int64_t i) {
        const auto [m, n] = kernels::decode2(i, ns);
        const Elem lhs = G.at(pf.N.elements[n], pf.M.elements[m]);
        return lhs != phi(pairing_ne(mp, m, n), pairing_nw(mp, m, n));
      },
      [&](std::int64_t i) {
        const auto [m, n] = kernels::decode2(i, ns);
        return Witness{{{"m", mstr(mp, m)}, {"n", nstr(mp, n)}},
                       G.render(G.at(pf.N.elements[n], pf.M.elements[m])),
                       G.render(phi(pairing_ne(mp, m, n), pairing_nw(mp, m, n)))};
      },
      opt.counterexample_cap, opt.exec));

  return report;
}

}  // namespace mgt
