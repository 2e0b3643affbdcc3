#pragma once

#include <compare>
#include <cstdint>

#include "mgt/matched_pair.hpp"

namespace mgt {

// A square of the matched pair's double groupoid.  The pair (m, n) is a
// complete coordinate: left edge m, bottom edge n, and the derived top edge
// ^m n and right edge m^n are never stored (the unique-filler property
// would otherwise allow inconsistent squares).
//
// Direction 1 is vertical (left/right edges in M), direction 2 horizontal
// (top/bottom edges in N).
struct Square {
  std::int32_t m = 0, n = 0;
  auto operator<=>(const Square&) const = default;
};

std::int32_t top_edge(const MatchedPairData& mp, Square s);    // ^m n
std::int32_t right_edge(const MatchedPairData& mp, Square s);  // m^n

// Horizontal composition (direction 2): (m, n) o2 (m^n, p) = (m, n*p).
// Throws NotComposableError unless s2's left edge equals s1's right edge.
Square compose_h(const MatchedPairData& mp, Square s1, Square s2);

// Vertical composition (direction 1): (l, ^m n) o1 (m, n) = (l*m, n).
// Throws NotComposableError unless s1's bottom edge equals s2's top edge.
Square compose_v(const MatchedPairData& mp, Square s1, Square s2);

// Exhaustively enumerates every composable 2x2 grid (parameterized freely
// by (l, m, n, p), the fourth square being forced) and checks the
// interchange law (x o1 z) o2 (y o1 w) = (x o2 y) o1 (z o2 w).
// Check id: "interchange_law", |M|^2 |N|^2 grids.
VerificationReport verify_interchange(const MatchedPairData& mp, const VerifyOptions& opt = {});

// Two adjacent edges determine a unique square.
enum class EdgePair { LeftBottom, LeftTop, BottomRight, TopRight };

struct EdgeQuery {
  EdgePair kind = EdgePair::LeftBottom;
  // Edge values in the order named by the kind: e.g. for BottomRight,
  // first = bottom (N element), second = right (M element).
  std::int32_t first = 0, second = 0;
};

// Returns the unique square with the two given edges.  Left+bottom is the
// direct construction; the other three invert the action bijections.
// In checked mode an exhaustive scan verifies uniqueness.  Throws
// FillerError when no square or more than one square matches (possible
// only for corrupted action tables).
Square fill_square(const MatchedPairData& mp, EdgeQuery query, bool checked = false);

// The derived group composition (m,n)(l,p), computed independently of the
// bicrossproduct formula by filling the square with top edge n and right
// edge l and reading off its left and bottom edges.
BicrossCell derived_composition(const MatchedPairData& mp, BicrossCell a, BicrossCell b,
                                bool checked = false);

}  // namespace mgt
