#include <set>

#include "doctest.h"
#include "hpd/enumerate.hpp"
#include "hpd/io.hpp"
#include "reference_tilings.hpp"

using namespace hpd;
using hpd::testing::drawn_1302;
using hpd::testing::drawn_212;
using hpd::testing::tiling_from_rows;

namespace {

std::vector<std::vector<RowType>> all_taus(int n) {
  std::vector<std::vector<RowType>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<RowType> tau(n);
    for (int r = 0; r < n; ++r) tau[r] = (mask >> (n - 1 - r)) & 1 ? RowType::East : RowType::West;
    out.push_back(tau);
  }
  return out;
}

std::set<std::string> texts(const std::vector<Tiling>& ts) {
  std::set<std::string> out;
  for (const Tiling& t : ts) out.insert(serialize(t));
  return out;
}

}  // namespace

TEST_CASE("enumeration of (1,3,0,2), WEEW finds exactly the drawn tilings") {
  const auto found = enumerate_tilings(build_boundary(Composition{1, 3, 0, 2}, parse_tau("WEEW"), 3), parse_tau("WEEW"));
  REQUIRE(found.size() == 13);
  std::set<std::string> drawn;
  for (const auto& d : drawn_1302()) drawn.insert(serialize(tiling_from_rows(Composition{1, 3, 0, 2}, "WEEW", 3, d.rows)));
  CHECK(texts(found) == drawn);
  for (const Tiling& t : found) CHECK(validate_tiling(t).ok());
  CHECK(total_weight(found, 4) == key_polynomial(Composition{1, 3, 0, 2}));
}

TEST_CASE("enumeration of (2,1,2) finds exactly the drawn pairs") {
  for (const auto& [tau, drawn] : drawn_212()) {
    const auto found = enumerate_tilings(build_boundary(Composition{2, 1, 2}, parse_tau(tau), 2), parse_tau(tau));
    std::set<std::string> expected;
    for (const auto& rows : drawn) expected.insert(serialize(tiling_from_rows(Composition{2, 1, 2}, tau, 2, rows)));
    INFO(tau);
    CHECK(texts(found) == expected);
  }
}

TEST_CASE("weighted sums agree with key polynomials for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> parts(n, 0);
    while (true) {
      const Composition alpha(parts);
      const Polynomial key = key_polynomial(alpha);
      for (const auto& tau : all_taus(n)) {
        const int N = alpha.max_part();
        INFO(alpha.to_string() << " " << tau_to_string(tau));
        const auto tilings = enumerate_tilings(build_boundary(alpha, tau, N), tau);
        CHECK(total_weight(tilings, n) == key);
        CHECK(hpd_polynomial_dp(alpha, tau, N) == key);
        for (const Tiling& t : tilings) CHECK(weight_tile_level(t) == weight_subtile_level(t));
      }
      int i = n - 1;
      while (i >= 0 && parts[i] == 2) parts[i--] = 0;
      if (i < 0) break;
      ++parts[i];
    }
  }
}

TEST_CASE("a larger N adds no tilings of nonzero weight") {
  const Composition alpha{0, 2, 1};
  for (const auto& tau : all_taus(3)) {
    const Polynomial at_max = hpd_polynomial(alpha, tau, 2);
    CHECK(hpd_polynomial(alpha, tau, 3) == at_max);
    CHECK(hpd_polynomial(alpha, tau, 4) == at_max);
  }
}

TEST_CASE("skew enumeration") {
  const auto found = enumerate_skew(Composition{1, 3, 0, 2}, Composition{3, 1}, 1, parse_tau("WE"), 3);
  CHECK(found.size() == 2);
  for (const Tiling& t : found) CHECK(validate_tiling(t).ok());
  const BoundarySpec b = build_skew_boundary(Composition{1, 3, 0, 2}, Composition{3, 1}, 1, parse_tau("WE"), 3);
  CHECK(weighted_sum_dp(b, parse_tau("WE")) == total_weight(found, 4));
  CHECK(enumerate_skew(Composition{1, 3, 0, 2}, Composition{3, 3}, 1, parse_tau("WE"), 3).empty());
}

TEST_CASE("empty boundary problems") {
  // color 2 enters below sub-column 3 and must leave above sub-column 1, but
  // pipes in a west row only travel right
  const auto tau = parse_tau("W");
  BoundarySpec b = build_skew_boundary(Composition{0, 0}, Composition{1}, 1, tau, 1);
  CHECK(enumerate_tilings(b, tau).empty());
  CHECK(weighted_sum_dp(b, tau).is_zero());
}

TEST_CASE("state budget") {
  CHECK_THROWS_AS(hpd_polynomial_dp(Composition{1, 3, 0, 2}, parse_tau("WEEW"), 3, 1), StateSpaceOverflow);
}
