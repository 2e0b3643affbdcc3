#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mgt {

// A permutation of {0, ..., degree-1}, stored as its image sequence:
// the permutation maps point i to images[i].
//
// Composition convention (used everywhere in this project): the product
// a * b means "apply a first, then b", so (a * b)(i) = b(a(i)).
struct Perm {
  std::vector<std::int32_t> images;

  Perm() = default;
  explicit Perm(std::vector<std::int32_t> imgs) : images(std::move(imgs)) {}

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images.size()); }
  std::int32_t operator[](int i) const { return images[i]; }

  bool is_identity() const;
  // True iff images is a bijection on {0,...,degree-1}.
  bool is_valid() const;

  // Apply-first composition: result(i) = other(this(i)).
  Perm compose(const Perm& other) const;
  Perm inverse() const;

  auto operator<=>(const Perm&) const = default;
};

inline Perm operator*(const Perm& a, const Perm& b) { return a.compose(b); }

// Cycle-notation text format, 1-based externally.  "(1 2 3)(4 5)" maps
// point 1 to 2, 2 to 3, 3 to 1 and swaps 4 and 5; the identity is "()".
// Cycles must be disjoint and points must lie in 1..degree.
Perm parse_cycles(const std::string& text, int degree);

// Comma-separated list of permutations in cycle notation, e.g.
// "(1 2)(3 4),(1 3)(2 4)".  An empty string yields an empty list.
std::vector<Perm> parse_cycle_list(const std::string& text, int degree);

// Canonical disjoint-cycle rendering: cycles ordered by smallest moved
// point, each cycle starting at its smallest point, fixed points omitted,
// identity rendered "()".
std::string format_cycles(const Perm& p);

}  // namespace mgt
