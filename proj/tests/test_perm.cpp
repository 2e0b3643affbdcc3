#include <doctest.h>

#include "mgt/error.hpp"
#include "mgt/perm.hpp"

using namespace mgt;

TEST_CASE("cycle parsing and formatting") {
  const Perm p = parse_cycles("(1 2 3)(4 5)", 6);
  CHECK(p.images == std::vector<std::int32_t>{1, 2, 0, 4, 3, 5});
  CHECK(format_cycles(p) == "(1 2 3)(4 5)");

  CHECK(parse_cycles("()", 4) == Perm::identity(4));
  CHECK(format_cycles(Perm::identity(4)) == "()");

  // Canonical form starts each cycle at its smallest point.
  CHECK(format_cycles(parse_cycles("(3 1 2)", 3)) == "(1 3 2)");

  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), ParseError);  // repeated point
  CHECK_THROWS_AS(parse_cycles("(1 5)", 4), ParseError);       // out of range
  CHECK_THROWS_AS(parse_cycles("(1)", 3), ParseError);         // singleton cycle
  CHECK_THROWS_AS(parse_cycles("", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2", 3), ParseError);
}

TEST_CASE("apply-first composition convention") {
  const Perm a = parse_cycles("(1 2 3)", 3);
  const Perm b = parse_cycles("(1 2)", 3);
  // apply a first, then b: 1->2->1, 2->3->3, 3->1->2
  CHECK(format_cycles(a.compose(b)) == "(2 3)");
  CHECK(format_cycles(b.compose(a)) == "(1 3)");
  CHECK(a.compose(a.inverse()).is_identity());
  CHECK(a.inverse() == parse_cycles("(1 3 2)", 3));
  CHECK_THROWS_AS(a.compose(Perm::identity(4)), ArgumentError);
}

TEST_CASE("cycle list parsing") {
  const auto gens = parse_cycle_list("(1 2)(3 4),(1 3)(2 4)", 4);
  REQUIRE(gens.size() == 2);
  CHECK(format_cycles(gens[0]) == "(1 2)(3 4)");
  CHECK(format_cycles(gens[1]) == "(1 3)(2 4)");
  CHECK(parse_cycle_list("", 4).empty());
  CHECK(parse_cycle_list("()", 4).size() == 1);
  CHECK_THROWS_AS(parse_cycle_list("(1 2),,(1 3)", 4), ParseError);
}

TEST_CASE("perm validity") {
  CHECK(Perm({0, 1, 2}).is_valid());
  CHECK_FALSE(Perm({0, 0, 2}).is_valid());
  CHECK_FALSE(Perm({0, 3, 1}).is_valid());
}
