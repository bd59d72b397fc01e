// Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hpd/bijection.hpp"
#include "hpd/branching.hpp"
#include "hpd/enumerate.hpp"
#include "hpd/io.hpp"
#include "hpd/verify.hpp"
#include "reference_tilings.hpp"

using namespace hpd;
using namespace hpd::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
  void merge(const CheckResult& r, const std::string& label) {
    require(r.ok, label + ": " + r.detail);
  }
};

int failures = 0;

void run(int number, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %d %s  %s (%.2fs)%s%s\n", number, o.ok ? "PASS" : "FAIL", title.c_str(), secs,
              o.ok ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::multiset<std::string> weight_multiset(const std::vector<Tiling>& ts) {
  std::multiset<std::string> out;
  for (const Tiling& t : ts) out.insert(weight_subtile_level(t).to_string());
  return out;
}

}  // namespace

int main() {
  const int max_n = 4;
  const int max_part = 3;

  run(1, "13 tilings of (1,3,0,2) with tau=WEEW, N=3 and their weights", [] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto tau = parse_tau("WEEW");
    const auto found = enumerate_tilings(build_boundary(Composition{1, 3, 0, 2}, tau, 3), tau);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(found.size() == 13, "found " + std::to_string(found.size()) + " tilings");
    std::multiset<std::string> expected;
    for (const auto& d : drawn_1302()) expected.insert(d.weight);
    o.require(weight_multiset(found) == expected, "weight multiset differs");
    o.require(total_weight(found, 4) == key_polynomial(Composition{1, 3, 0, 2}), "sum differs from the key polynomial");
    o.require(secs < 1.0, "enumeration took " + std::to_string(secs) + "s");
    return o;
  });

  const Sweep sweep(max_n, max_part);
  std::printf("sweep: %zu (alpha, tau) pairs, %zu tilings\n", sweep.cases().size(), sweep.tiling_count());

  run(2, "weighted sums equal key polynomials (n<=4, parts<=3, all tau)", [&] {
    Outcome o;
    o.merge(check_weighted_sums(sweep), "sum");
    return o;
  });

  run(3, "branching coefficient of (1,3,0,2),(3,1) and the branching identity (n<=4, parts<=2)", [] {
    Outcome o;
    const Polynomial c = branch_coefficient(Composition{1, 3, 0, 2}, Composition{3, 1}, 1, parse_tau("WE"), 3);
    o.require(c.to_string() == "x1^2 + x1*x4", "coefficient is " + c.to_string());
    o.merge(check_branching_identity(4, 2), "identity");
    return o;
  });

  run(4, "flip and swap bijections, exhaustive, plus the drawn strips", [&] {
    Outcome o;
    o.merge(check_row_moves(sweep), "exhaustive");

    const Strip n5 = strip_n5_we();
    o.require(decode_strip(n5) == SwapCode{{1, 2, 1}}, "n=5 strip does not decode to (1,2,1)");
    StripBoundary b5 = n5.boundary;
    b5.order = StripOrder::EW;
    o.require(encode_strip(b5, {{1, 2, 1}}) == strip_n5_ew(), "(1,2,1) does not encode to the drawn EW strip");

    const Strip n7 = strip_n7_we();
    StripBoundary b7 = n7.boundary;
    b7.order = StripOrder::EW;
    o.require(encode_strip(b7, decode_strip(n7)) == strip_n7_ew(), "n=7 strip does not map to the drawn image");
    o.require(encode_strip(n7.boundary, decode_strip(strip_n7_ew())) == n7, "n=7 image does not map back");
    return o;
  });

  run(5, "transport between every pair of words (n<=4, parts<=3)", [&] {
    Outcome o;
    o.merge(check_transport(sweep), "transport");
    return o;
  });

  run(6, "sweep evaluator equals enumeration (n<=4, parts<=3)", [&] {
    Outcome o;
    o.merge(check_dp_agreement(sweep), "dp");
    return o;
  });

  run(7, "weighted sums unchanged for N = max, max+1, max+2", [&] {
    Outcome o;
    o.merge(check_n_stability(sweep), "N");
    return o;
  });

  run(8, "serialize/parse round trip on every swept tiling; golden drawings", [&] {
    Outcome o;
    o.merge(check_round_trip(sweep), "round trip");
    const Tiling worked = tiling_from_rows(Composition{1, 3, 0, 2}, "WEEW", 3, drawn_1302()[0].rows);
    const std::string dir = HPD_GOLDEN_DIR;
    o.require(render_ascii(worked) == read_file(dir + "/worked_example.txt"), "ascii golden differs");
    o.require(render_svg(worked) == read_file(dir + "/worked_example.svg"), "svg golden differs");
    o.require(render_svg(worked) == render_svg(parse_tiling(serialize(worked))), "svg not stable across a round trip");
    return o;
  });

  return failures == 0 ? 0 : 1;
}
