#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hpd/enumerate.hpp"
#include "hpd/io.hpp"
#include "reference_tilings.hpp"

using namespace hpd;
using hpd::testing::drawn_1302;
using hpd::testing::tiling_from_rows;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing " << path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Tiling worked_example() { return tiling_from_rows(Composition{1, 3, 0, 2}, "WEEW", 3, drawn_1302()[0].rows); }

}  // namespace

TEST_CASE("tokens") {
  CHECK(token_of(SubTile::elbow_lt(2)) == "J2");
  CHECK(token_of(SubTile::crossing(3, 5)) == "+3/5");
  CHECK(token_of(SubTile::empty()) == ".");
  CHECK(token_of(SubTile::vertical(4)) == "|4");
  CHECK(token_of(SubTile::horizontal(1)) == "-1");
  CHECK(token_of(SubTile::elbow_rb(1)) == "F1");
  CHECK(token_of(SubTile::elbow_rt(1)) == "L1");
  CHECK(token_of(SubTile::elbow_lb(1)) == "G1");
}

TEST_CASE("document layout") {
  const std::string text = serialize(worked_example());
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "HPD v1");
  std::getline(in, line);
  CHECK(line == "n=4 N=3 tau=WEEW alpha=1,3,0,2");
  std::getline(in, line);
  CHECK(line == "-1 -1 +1/3 -1 J1 F2 -2 -2 -2 -2 -2 +2/4 -2 J2 . .");
}

TEST_CASE("round trip") {
  const auto tau = parse_tau("WEEW");
  for (const Tiling& t : enumerate_tilings(build_boundary(Composition{1, 3, 0, 2}, tau, 3), tau)) {
    const std::string text = serialize(t);
    const Tiling back = parse_tiling(text);
    CHECK(back == t);
    CHECK(serialize(back) == text);
  }
  for (const Tiling& t : enumerate_skew(Composition{1, 3, 0, 2}, Composition{3, 1}, 1, parse_tau("WE"), 3)) {
    CHECK(parse_tiling(serialize(t)) == t);
  }
}

TEST_CASE("parse errors are told apart") {
  const std::string good = serialize(worked_example());

  SUBCASE("unknown token") {
    std::string bad = good;
    bad.replace(bad.find("J1"), 2, "K9");
    try {
      parse_tiling(bad);
      FAIL("accepted");
    } catch (const LexicalError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 15);
    }
  }
  SUBCASE("wrong header") {
    CHECK_THROWS_AS(parse_tiling("HPD v2\n"), LexicalError);
    CHECK_THROWS_AS(parse_tiling(""), LexicalError);
  }
  SUBCASE("row too short") {
    std::string bad = good;
    bad.erase(bad.find(" . .\n"), 2);
    CHECK_THROWS_AS(parse_tiling(bad), DimensionError);
  }
  SUBCASE("missing row") {
    std::string bad = good.substr(0, good.rfind('\n', good.size() - 2) + 1);
    CHECK_THROWS_AS(parse_tiling(bad), DimensionError);
  }
  SUBCASE("header inconsistent with itself") {
    std::string bad = good;
    bad.replace(bad.find("alpha=1,3,0,2"), 13, "alpha=1,3,0");
    CHECK_THROWS_AS(parse_tiling(bad), DimensionError);
  }
  SUBCASE("crossing order broken") {
    std::string bad = good;
    bad.replace(bad.find("+1/3"), 4, "+3/1");
    try {
      parse_tiling(bad);
      FAIL("accepted");
    } catch (const ValidationError& e) {
      CHECK(e.report().has(Rule::CrossingOrder));
      CHECK(std::string(e.what()).find("crossing-order") != std::string::npos);
    }
  }
}

TEST_CASE("ascii drawing marks the weighted walls") {
  const std::string art = render_ascii(worked_example());
  // the first row of tiles has three dotted right walls
  std::istringstream in(art);
  std::string line;
  std::getline(in, line);  // top labels
  std::getline(in, line);  // upper third of row 0
  std::getline(in, line);  // middle third of row 0
  CHECK(std::count(line.begin(), line.end(), '*') == 3);
  CHECK(art == read_file(std::string(HPD_GOLDEN_DIR) + "/worked_example.txt"));
}

TEST_CASE("svg drawing is stable") {
  const std::string svg = render_svg(worked_example());
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg == render_svg(worked_example()));
  CHECK(svg == read_file(std::string(HPD_GOLDEN_DIR) + "/worked_example.svg"));
}

TEST_CASE("a single empty cell") {
  const BoundarySpec b = build_boundary(Composition{0}, parse_tau("W"), 0);
  std::vector<SubTile> cells{SubTile::elbow_lt(1)};
  const Tiling t(b, parse_tau("W"), cells);
  REQUIRE(validate_tiling(t).ok());
  const BoundarySpec e = build_skew_boundary(Composition{0}, Composition{0}, 0, {}, 0);
  const Tiling empty(e, {});
  const std::string art = render_ascii(empty);
  CHECK(art.find('|') == std::string::npos);
  CHECK(parse_tiling(serialize(empty)) == empty);
}
