#include <map>
#include <set>

#include "doctest.h"
#include "hpd/bijection.hpp"
#include "hpd/enumerate.hpp"
#include "hpd/io.hpp"
#include "reference_tilings.hpp"

using namespace hpd;
using namespace hpd::testing;

namespace {

std::vector<int> frozen_list(const StripAnalysis& an) {
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(an.frozen.size()); ++u) {
    if (an.frozen[u]) out.push_back(u);
  }
  return out;
}

std::vector<int> critical_list(const StripAnalysis& an) {
  std::vector<int> out;
  for (const Critical& c : an.criticals) out.push_back(c.subcol);
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int u = lo; u <= hi; ++u) out.push_back(u);
  return out;
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// A two-row grid with the strip's boundary, so the generic enumerator can
// list every filling of it.
BoundarySpec strip_grid(const StripBoundary& b) {
  BoundarySpec g;
  g.n = b.n;
  g.N = b.N;
  g.alpha = Composition(std::vector<int>(b.n, 0));
  g.top = b.top;
  g.bottom = b.bottom;
  g.left = {b.left_of(0), b.left_of(1)};
  g.right = {b.right_of(0), b.right_of(1)};
  return g;
}

std::vector<RowType> strip_tau(StripOrder order) {
  return order == StripOrder::WE ? std::vector<RowType>{RowType::West, RowType::East}
                                 : std::vector<RowType>{RowType::East, RowType::West};
}

Strip strip_of(const Tiling& t, const StripBoundary& b) {
  Strip s;
  s.boundary = b;
  for (int r = 0; r < 2; ++r) {
    for (int u = 0; u < t.width(); ++u) s.rows[r].push_back(t.at(r, u));
  }
  return s;
}

// x_a^{sum j} x_b^{w - sum j} read directly off the last sub-columns of an
// interval: the west row counts a pipe on its right wall, the east row the
// absence of one.
std::pair<int, int> interval_exponents(const Strip& s, const MaximalInterval& iv) {
  const int west = s.boundary.upper_index_of(RowType::West);
  int ea = 0;
  int eb = 0;
  for (int u = iv.first(); u <= iv.last(); ++u) {
    if (!is_last_subcolumn(u, s.boundary.n)) continue;
    if (s.rows[west][u].right() != kNoColor) ++ea;
    if (s.rows[1 - west][u].right() == kNoColor) ++eb;
  }
  return {ea, eb};
}

}  // namespace

TEST_CASE("analysis of the n = 7 strip") {
  const Strip s = strip_n7_we();
  const StripAnalysis an = analyze_strip(s.boundary);
  CHECK(an.source.at(1) == kMinusInfinity);
  CHECK(an.source.at(7) == kPlusInfinity);
  CHECK(an.source.at(3) == 23);
  CHECK(an.source.at(6) == 26);
  CHECK(an.source.at(2) == 36);
  CHECK(an.source.at(4) == 38);
  CHECK(an.source.at(5) == 53);
  CHECK(an.target.at(1) == 7);
  CHECK(an.target.at(3) == 16);
  CHECK(an.target.at(6) == 26);
  CHECK(an.target.at(4) == 31);
  CHECK(an.target.at(2) == 43);
  CHECK(an.target.at(7) == 55);
  CHECK(an.target.at(5) == 60);
  CHECK(frozen_list(an) == concat({range(0, 6), range(17, 22), range(32, 42), range(54, 62)}));
  CHECK(critical_list(an) == std::vector<int>{7, 16, 23, 26, 31, 43, 53});
  REQUIRE(an.intervals.size() == 3);
  CHECK(an.intervals[0].criticals == std::vector<int>{7, 16});
  CHECK(an.intervals[1].criticals == std::vector<int>{23, 26, 31});
  CHECK(an.intervals[2].criticals == std::vector<int>{43, 53});
  CHECK(an.intervals[1].gap_sizes == std::vector<int>{2, 4});
  CHECK(an.intervals[1].bounds == std::vector<int>{0, 0});
  CHECK(an.intervals[0].bounds == std::vector<int>{1});
  CHECK(an.intervals[0].last_subcolumns == 1);  // sub-column 13
  CHECK(an.criticals.front().kind == CriticalKind::LeftEnd);
  CHECK(an.criticals[2].kind == CriticalKind::LeftEnd);
  CHECK(an.criticals[3].kind == CriticalKind::Middle);
  CHECK(an.criticals[4].kind == CriticalKind::RightEnd);
}

TEST_CASE("two-pipe strip") {
  // n = 2, a = 1, b = 2: only the boundary pipes
  StripBoundary b{2, 2, StripOrder::WE, 1, 2, {0, 0, 1, 0, 0, 2}, {0, 0, 0, 0, 0, 0}};
  const StripAnalysis an = analyze_strip(b);
  CHECK(frozen_list(an) == std::vector<int>{0, 1});
  CHECK(critical_list(an) == std::vector<int>{2, 5});
  REQUIRE(an.intervals.size() == 1);
  CHECK(an.intervals[0].bounds == std::vector<int>{1});
}

TEST_CASE("malformed strip boundaries are rejected") {
  StripBoundary b{2, 1, StripOrder::WE, 1, 2, {1, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK_THROWS_AS(analyze_strip(b), StripError);  // color 2 never leaves
  b.top = {1, 0, 0, 2};
  b.bottom = {0, 2, 0, 0};
  CHECK_THROWS_AS(analyze_strip(b), StripError);  // the east label also enters from below
}

TEST_CASE("the n = 7 strip maps to its drawn image") {
  const Strip we = strip_n7_we();
  const Strip ew = strip_n7_ew();
  const SwapCode code = decode_strip(we);
  CHECK(code == SwapCode{{1}, {0, 0}, {1}});
  StripBoundary target = we.boundary;
  target.order = StripOrder::EW;
  CHECK(encode_strip(target, code) == ew);
  CHECK(decode_strip(ew) == code);
  CHECK(encode_strip(we.boundary, decode_strip(ew)) == we);

  // every frozen sub-column keeps its pattern number
  const StripAnalysis an = analyze_strip(we.boundary);
  for (int u = 0; u < we.boundary.width(); ++u) {
    if (!an.frozen[u]) continue;
    const auto src = classify_frozen(we.rows[0][u], we.rows[1][u], StripOrder::WE);
    const auto dst = classify_frozen(ew.rows[0][u], ew.rows[1][u], StripOrder::EW);
    INFO("sub-column " << u);
    REQUIRE(src.has_value());
    REQUIRE(dst.has_value());
    CHECK(src == dst);
    CHECK(*src == frozen_pattern_at(we.boundary, an, u));
  }
}

TEST_CASE("the n = 5 interval decodes to (1,2,1)") {
  const Strip we = strip_n5_we();
  const Strip ew = strip_n5_ew();
  const StripAnalysis an = analyze_strip(we.boundary);
  REQUIRE(an.intervals.size() == 1);
  CHECK(an.intervals[0].criticals == std::vector<int>{2, 13, 29, 36});
  CHECK(decode_strip(we) == SwapCode{{1, 2, 1}});
  StripBoundary target = we.boundary;
  target.order = StripOrder::EW;
  CHECK(encode_strip(target, {{1, 2, 1}}) == ew);
  CHECK(decode_strip(ew) == SwapCode{{1, 2, 1}});
}

TEST_CASE("every code of a boundary is realized exactly once") {
  // Brute force: enumerate all fillings of a strip boundary and compare with
  // the product of the code ranges.
  for (const Strip& s : {strip_n7_we(), strip_n5_we()}) {
    for (StripOrder order : {StripOrder::WE, StripOrder::EW}) {
      StripBoundary b = s.boundary;
      b.order = order;
      const StripAnalysis an = analyze_strip(b);
      std::size_t expected = 1;
      for (const auto& iv : an.intervals) {
        for (int bound : iv.bounds) expected *= static_cast<std::size_t>(bound + 1);
      }
      const auto fillings = enumerate_tilings(strip_grid(b), strip_tau(order));
      CHECK(fillings.size() == expected);
      std::set<SwapCode> codes;
      for (const Tiling& t : fillings) {
        const Strip filled = strip_of(t, b);
        const SwapCode code = decode_strip(filled);
        codes.insert(code);
        CHECK(encode_strip(b, code) == filled);
        for (std::size_t i = 0; i < an.intervals.size(); ++i) {
          int sum = 0;
          for (int j : code[i]) sum += j;
          const auto [ea, eb] = interval_exponents(filled, an.intervals[i]);
          CHECK(ea == sum);
          CHECK(eb == an.intervals[i].last_subcolumns - sum);
        }
      }
      CHECK(codes.size() == expected);
    }
  }
}

TEST_CASE("frozen pattern table") {
  for (StripOrder order : {StripOrder::WE, StripOrder::EW}) {
    const FrozenPattern through{11, 2, 5, 3};
    const auto [tu, tl] = frozen_cells(through, order);
    CHECK(classify_frozen(tu, tl, order) == through);
    CHECK(allowed_in(tu, order == StripOrder::WE ? RowType::West : RowType::East));
    CHECK(allowed_in(tl, order == StripOrder::WE ? RowType::East : RowType::West));
    for (int index = 1; index <= 10; ++index) {
      FrozenPattern p{index, 3, 0};
      if (index <= 3 || index >= 7) p.other = index >= 9 ? 0 : 5;
      if (index >= 4 && index <= 6) p.other = 1;
      const auto [upper, lower] = frozen_cells(p, order);
      CHECK(classify_frozen(upper, lower, order) == p);
    }
  }
  // the two rows trade places: WE item i turns into EW item i
  CHECK(frozen_cells({1, 2, 4}, StripOrder::WE) == std::pair{SubTile::crossing(2, 4), SubTile::elbow_rt(4)});
  CHECK(frozen_cells({1, 2, 4}, StripOrder::EW) == std::pair{SubTile::elbow_rt(4), SubTile::horizontal(2)});
  CHECK(frozen_cells({6, 4, 2}, StripOrder::EW) == std::pair{SubTile::crossing(4, 2), SubTile::elbow_lt(2)});
  CHECK_FALSE(classify_frozen(SubTile::vertical(1), SubTile::vertical(1), StripOrder::WE).has_value());
}

TEST_CASE("flip of a single bottom row") {
  // alpha_2 = 2 with the 2-row at the bottom of WEEEW
  const Composition alpha{0, 2, 0, 0, 0};
  const auto tau = parse_tau("WEEEW");
  bool seen = false;
  for (const Tiling& t : enumerate_tilings(build_boundary(alpha, tau, 5), tau)) {
    std::vector<SubTile> bottom(t.cells().end() - t.width(), t.cells().end());
    if (bottom != tile_row(5, "H2|H2|J2|.|.|.")) continue;
    seen = true;
    const Tiling f = flip_bottom_row(t);
    std::vector<SubTile> flipped(f.cells().end() - f.width(), f.cells().end());
    CHECK(flipped == tile_row(5, ".|.|L2|H2|H2|H2"));
    CHECK(tau_to_string(f.tau()) == "WEEEE");
    CHECK(validate_tiling(f).ok());
    CHECK(weight_subtile_level(f) == weight_subtile_level(t));
    CHECK(flip_bottom_row(f) == t);
  }
  CHECK(seen);
}

TEST_CASE("drawn moves between row-type words") {
  const Composition alpha{2, 1, 2};
  std::map<std::string, std::vector<Tiling>> panel;
  for (const auto& [tau, rows] : drawn_212()) {
    for (const auto& r : rows) panel[tau].push_back(tiling_from_rows(alpha, tau, 2, r));
  }
  auto same_panel = [&](const std::vector<Tiling>& got, const std::string& tau) {
    std::set<std::string> a, b;
    for (const auto& t : got) a.insert(serialize(t));
    for (const auto& t : panel.at(tau)) b.insert(serialize(t));
    return a == b;
  };
  const std::vector<std::pair<std::string, std::string>> flips = {{"WWW", "WWE"}, {"WEE", "WEW"}, {"EWE", "EWW"}, {"EEW", "EEE"}};
  for (const auto& [from, to] : flips) {
    std::vector<Tiling> image;
    for (const Tiling& t : panel.at(from)) image.push_back(flip_bottom_row(t));
    INFO(from << " -> " << to);
    CHECK(same_panel(image, to));
    CHECK(image[0] == panel.at(to)[0]);
    CHECK(image[1] == panel.at(to)[1]);
  }
  struct SwapArrow {
    std::string from, to;
    int row;
  };
  const std::vector<SwapArrow> swaps = {{"WWE", "WEW", 1}, {"WEE", "EWE", 0}, {"WEW", "EWW", 0}, {"EWE", "EEW", 1}};
  for (const auto& s : swaps) {
    std::vector<Tiling> image;
    for (const Tiling& t : panel.at(s.from)) image.push_back(swap_adjacent(t, s.row));
    INFO(s.from << " -> " << s.to);
    CHECK(same_panel(image, s.to));
    for (const Tiling& t : image) CHECK(validate_tiling(t).ok());
  }
}

TEST_CASE("transport along a fixed schedule") {
  const auto from = parse_tau("WWW");
  const auto to = parse_tau("EEE");
  const auto moves = transport_schedule(from, to);
  std::vector<RowType> cur = from;
  for (const Move& m : moves) {
    if (m.kind == Move::Kind::FlipBottom) {
      CHECK(m.row == 2);
      cur[2] = cur[2] == RowType::West ? RowType::East : RowType::West;
    } else {
      CHECK(cur[m.row] != cur[m.row + 1]);
      std::swap(cur[m.row], cur[m.row + 1]);
    }
  }
  CHECK(cur == to);
  CHECK(transport_schedule(to, to).empty());

  const Composition alpha{2, 1, 2};
  const auto source = enumerate_tilings(build_boundary(alpha, from, 2), from);
  const auto target = enumerate_tilings(build_boundary(alpha, to, 2), to);
  std::set<std::string> image;
  for (const Tiling& t : source) {
    const Tiling u = transport(t, to);
    CHECK(validate_tiling(u).ok());
    CHECK(weight_subtile_level(u) == weight_subtile_level(t));
    CHECK(transport(t, from) == t);
    image.insert(serialize(u));
  }
  std::set<std::string> expected;
  for (const Tiling& t : target) expected.insert(serialize(t));
  CHECK(image == expected);
}

TEST_CASE("swap and flip on every tiling for n <= 3") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<int> parts(n, 0);
    while (true) {
      const Composition alpha(parts);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<RowType> tau(n);
        for (int r = 0; r < n; ++r) tau[r] = (mask >> r) & 1 ? RowType::East : RowType::West;
        const auto tilings = enumerate_tilings(build_boundary(alpha, tau, alpha.max_part()), tau);
        for (const Tiling& t : tilings) {
          const Tiling f = flip_bottom_row(t);
          REQUIRE(validate_tiling(f).ok());
          CHECK(flip_bottom_row(f) == t);
          CHECK(weight_subtile_level(f) == weight_subtile_level(t));
          for (int r = 0; r + 1 < n; ++r) {
            if (tau[r] == tau[r + 1]) continue;
            const Tiling s = swap_adjacent(t, r);
            REQUIRE(validate_tiling(s).ok());
            CHECK(swap_adjacent(s, r) == t);
            CHECK(weight_subtile_level(s) == weight_subtile_level(t));
            const StripAnalysis an = analyze_strip(extract_strip(t, r).boundary);
            for (const Critical& c : an.criticals) {
              const bool inner = c.subcol > 0 && c.subcol + 1 < t.width();
              // isolated criticals only ever sit at the grid edge
              CHECK_FALSE((c.kind == CriticalKind::Isolated && inner));
            }
          }
        }
      }
      int i = n - 1;
      while (i >= 0 && parts[i] == 2) parts[i--] = 0;
      if (i < 0) break;
      ++parts[i];
    }
  }
}

TEST_CASE("swap rejects rows of equal type") {
  const auto tau = parse_tau("WWE");
  const auto ts = enumerate_tilings(build_boundary(Composition{1, 0, 1}, tau, 1), tau);
  REQUIRE_FALSE(ts.empty());
  CHECK_THROWS_AS(swap_adjacent(ts[0], 0), StripError);
  CHECK_THROWS_AS(swap_adjacent(ts[0], 2), StripError);
}
