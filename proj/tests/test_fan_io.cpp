#include <doctest.h>

#include "toric/errors.hpp"
#include "toric/fan_io.hpp"

using namespace toric;

namespace {

const char* kSquareFile = R"({
  "name": "cone-over-square",
  "lattice_rank": 3,
  "rays": [[1, 0, 1], [0, -1, 1], [-1, 0, 1], [0, 1, 1]],
  "maximal_cones": [[0, 1, 2, 3]]
})";

}  // namespace

TEST_CASE("the documented example file parses to 4 rays and 10 cones") {
  ParsedFan pf = parse_fan_text(kSquareFile, "square");
  CHECK(pf.name == "cone-over-square");
  CHECK(pf.fan.rays().size() == 4);
  CHECK(pf.fan.size() == 10);
  CHECK(pf.fan.is_affine());
  CHECK(pf.warnings.empty());
}

TEST_CASE("non-primitive rays are normalized with a warning") {
  ParsedFan pf = parse_fan_text(
      R"({"lattice_rank": 3, "rays": [[2, 0, 2]], "maximal_cones": [[0]]})",
      "test");
  REQUIRE(pf.warnings.size() == 1);
  IntVec expected{1, 0, 1};
  CHECK(pf.fan.rays().at(0) == expected);
}

TEST_CASE("overlapping cones are rejected with the offending pair") {
  const char* bad = R"({
    "lattice_rank": 2,
    "rays": [[1, 0], [0, 1], [1, 1]],
    "maximal_cones": [[0, 1], [2, 0]]
  })";
  CHECK_THROWS_AS(parse_fan_text(bad, "bad"), InvalidFan);
}

TEST_CASE("large integers round-trip through quoted strings") {
  const char* big = R"({
    "lattice_rank": 2,
    "rays": [["123456789012345678901234567890", "1"], [0, -1]],
    "maximal_cones": [[0, 1]]
  })";
  ParsedFan pf = parse_fan_text(big, "big");
  Int expect("123456789012345678901234567890");
  bool found = false;
  for (const IntVec& r : pf.fan.rays())
    if (r[0] == expect) found = true;
  CHECK(found);

  auto j = fan_to_json(pf.fan, pf.name);
  bool as_string = false;
  for (const auto& ray : j["rays"])
    for (const auto& entry : ray)
      if (entry.is_string()) as_string = true;
  CHECK(as_string);
}

TEST_CASE("schema violations carry field diagnostics") {
  CHECK_THROWS_AS(parse_fan_text("{", "x"), ParseError);
  CHECK_THROWS_AS(parse_fan_text(R"({"rays": [], "maximal_cones": []})", "x"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_fan_text(
          R"({"lattice_rank": 2, "rays": [[1]], "maximal_cones": []})", "x"),
      ParseError);
  CHECK_THROWS_AS(
      parse_fan_text(
          R"({"lattice_rank": 1, "rays": [[1]], "maximal_cones": [[4]]})", "x"),
      ParseError);
  CHECK_THROWS_AS(
      parse_fan_text(
          R"({"lattice_rank": 1, "rays": [["7x"]], "maximal_cones": [[0]]})",
          "x"),
      ParseError);
  CHECK_THROWS_AS(
      parse_fan_text(
          R"({"lattice_rank": 1, "rays": [[0]], "maximal_cones": [[0]]})", "x"),
      ParseError);

  try {
    parse_fan_text(
        R"({"lattice_rank": 2, "rays": [[1, 0], [1]], "maximal_cones": [[0]]})",
        "probe");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("rays[1]") != std::string::npos);
  }
}

TEST_CASE("machine output is canonical and reproducible") {
  ParsedFan a = parse_fan_text(kSquareFile, "a");
  ParsedFan b = parse_fan_text(kSquareFile, "b");
  CHECK(fan_to_json(a.fan, "x").dump() == fan_to_json(b.fan, "x").dump());

  auto j = fan_to_json(a.fan, "x");
  // rays sorted lexicographically, cones sorted by ray index set
  for (std::size_t i = 1; i < a.fan.rays().size(); ++i)
    CHECK(lex_less(a.fan.rays()[i - 1], a.fan.rays()[i]));
  for (std::size_t i = 1; i < a.fan.size(); ++i)
    CHECK(a.fan.cone_rays(i - 1) < a.fan.cone_rays(i));
  CHECK(j["is_affine"] == true);
}
