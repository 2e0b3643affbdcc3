#include <doctest.h>

#include "mgt/error.hpp"
#include "mgt/group_spec.hpp"
#include "test_helpers.hpp"

using namespace mgt;

TEST_CASE("group spec grammar") {
  CHECK(build_group(parse_group_spec("cyclic:6")).order() == 6);
  CHECK(build_group(parse_group_spec("dihedral:5")).order() == 10);
  CHECK(build_group(parse_group_spec("symmetric:4")).order() == 24);
  CHECK(build_group(parse_group_spec("alternating:4")).order() == 12);
  CHECK(build_group(parse_group_spec("klein4")).order() == 4);
  CHECK(build_group(parse_group_spec("quaternion8")).order() == 8);
  CHECK(build_group(parse_group_spec("product:cyclic:2,cyclic:3")).order() == 6);

  // Nested products associate through the recursive first factor.
  const GroupSpec nested = parse_group_spec("product:product:cyclic:2,cyclic:3,cyclic:5");
  CHECK(nested.text() == "product:product:cyclic:2,cyclic:3,cyclic:5");
  CHECK(build_group(nested).order() == 30);

  const GroupSpec perm = parse_group_spec("perm:4:(1 2)(3 4);(1 3)(2 4)");
  CHECK(perm.text() == "perm:4:(1 2)(3 4);(1 3)(2 4)");
  CHECK(build_group(perm).order() == 4);

  CHECK(parse_group_spec("cyclic:12").text() == "cyclic:12");

  CHECK_THROWS_AS(parse_group_spec("cyclic"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("frobnicate:3"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("cyclic:3junk"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("product:cyclic:2"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("perm:3:1 2 3"), ParseError);
  CHECK_THROWS_AS(build_group(parse_group_spec("cyclic:0")), ArgumentError);
}

TEST_CASE("generator list parsing") {
  const GroupTable S4 = build_group(parse_group_spec("symmetric:4"));
  const auto gens = parse_generator_list(S4, "(1 2)(3 4),(1 3)(2 4)");
  REQUIRE(gens.size() == 2);
  CHECK(S4.render(gens[0]) == "(1 2)(3 4)");
  CHECK(S4.render(gens[1]) == "(1 3)(2 4)");

  CHECK(parse_generator_list(S4, "()") == std::vector<Elem>{0});
  CHECK(parse_generator_list(S4, "#5") == std::vector<Elem>{5});
  CHECK(parse_generator_list(S4, "").empty());

  CHECK_THROWS_AS(parse_generator_list(S4, "(1 5)"), ParseError);
  CHECK_THROWS_AS(parse_generator_list(S4, "#99"), ArgumentError);

  // Cycle notation needs labels; the quaternion table has none.
  const GroupTable Q = build_group(parse_group_spec("quaternion8"));
  CHECK_THROWS_AS(parse_generator_list(Q, "(1 2)"), ArgumentError);
  CHECK(parse_generator_list(Q, "#2,#4") == std::vector<Elem>{2, 4});
}
