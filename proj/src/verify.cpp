#include "hpd/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "hpd/bijection.hpp"
#include "hpd/branching.hpp"
#include "hpd/enumerate.hpp"
#include "hpd/io.hpp"

namespace hpd {

void CheckResult::fail(std::string what) {
  if (ok) detail = std::move(what);
  ok = false;
}

std::vector<Composition> compositions(int n, int max_part) {
  std::vector<Composition> out;
  std::vector<int> parts(n, 0);
  while (true) {
    out.emplace_back(parts);
    int i = n - 1;
    while (i >= 0 && parts[i] == max_part) parts[i--] = 0;
    if (i < 0) break;
    ++parts[i];
  }
  return out;
}

std::vector<std::vector<RowType>> row_type_words(int n) {
  std::vector<std::vector<RowType>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<RowType> tau(n);
    for (int r = 0; r < n; ++r) tau[r] = (mask >> (n - 1 - r)) & 1 ? RowType::East : RowType::West;
    out.push_back(std::move(tau));
  }
  return out;
}

Sweep::Sweep(int max_n, int max_part) {
  for (int n = 1; n <= max_n; ++n) {
    for (const Composition& alpha : compositions(n, max_part)) {
      for (const auto& tau : row_type_words(n)) {
        SweepCase c{alpha, tau, enumerate_tilings(build_boundary(alpha, tau, alpha.max_part()), tau), {}};
        for (const Tiling& t : c.tilings) c.serialized.push_back(serialize(t));
        index_.emplace(std::pair{alpha.to_string(), tau_to_string(tau)}, cases_.size());
        cases_.push_back(std::move(c));
      }
    }
  }
}

const SweepCase& Sweep::at(const Composition& alpha, const std::vector<RowType>& tau) const {
  auto it = index_.find({alpha.to_string(), tau_to_string(tau)});
  if (it == index_.end()) throw std::out_of_range("pair not in the sweep");
  return cases_[it->second];
}

std::size_t Sweep::tiling_count() const {
  std::size_t total = 0;
  for (const auto& c : cases_) total += c.tilings.size();
  return total;
}

namespace {

std::string where(const SweepCase& c) { return "alpha=" + c.alpha.to_string() + " tau=" + tau_to_string(c.tau); }

Polynomial sum_of(const SweepCase& c) { return total_weight(c.tilings, static_cast<int>(c.alpha.size())); }

}  // namespace

CheckResult check_weighted_sums(const Sweep& sweep) {
  CheckResult r;
  std::map<Composition, Polynomial> keys;
  for (const SweepCase& c : sweep.cases()) {
    ++r.cases;
    auto it = keys.find(c.alpha);
    if (it == keys.end()) it = keys.emplace(c.alpha, key_polynomial(c.alpha)).first;
    if (sum_of(c) != it->second) r.fail(where(c) + ": weighted sum " + sum_of(c).to_string() + " != key " + it->second.to_string());
  }
  return r;
}

CheckResult check_dp_agreement(const Sweep& sweep) {
  CheckResult r;
  for (const SweepCase& c : sweep.cases()) {
    ++r.cases;
    const Polynomial dp = hpd_polynomial_dp(c.alpha, c.tau, c.alpha.max_part());
    if (dp != sum_of(c)) r.fail(where(c) + ": sweep evaluator gives " + dp.to_string());
  }
  return r;
}

CheckResult check_n_stability(const Sweep& sweep) {
  CheckResult r;
  for (const SweepCase& c : sweep.cases()) {
    const Polynomial base = sum_of(c);
    for (int extra = 1; extra <= 2; ++extra) {
      ++r.cases;
      const int N = c.alpha.max_part() + extra;
      const Polynomial p = hpd_polynomial(c.alpha, c.tau, N);
      if (p != base) r.fail(where(c) + " N=" + std::to_string(N) + ": " + p.to_string());
    }
  }
  return r;
}

CheckResult check_row_moves(const Sweep& sweep) {
  CheckResult r;
  for (const SweepCase& c : sweep.cases()) {
    const int n = static_cast<int>(c.alpha.size());
    // flip
    {
      std::vector<RowType> flipped = c.tau;
      flipped.back() = flipped.back() == RowType::West ? RowType::East : RowType::West;
      const SweepCase& target = sweep.at(c.alpha, flipped);
      std::vector<std::string> image;
      for (const Tiling& t : c.tilings) {
        ++r.cases;
        const Tiling f = flip_bottom_row(t);
        if (weight_subtile_level(f) != weight_subtile_level(t)) r.fail(where(c) + ": flip changes the weight");
        if (flip_bottom_row(f) != t) r.fail(where(c) + ": flip is not an involution");
        image.push_back(serialize(f));
      }
      std::sort(image.begin(), image.end());
      if (image != target.serialized) r.fail(where(c) + ": flip image differs from HPD_" + tau_to_string(flipped));
    }
    // swaps
    for (int row = 0; row + 1 < n; ++row) {
      if (c.tau[row] == c.tau[row + 1]) continue;
      std::vector<RowType> swapped = c.tau;
      std::swap(swapped[row], swapped[row + 1]);
      const SweepCase& target = sweep.at(c.alpha, swapped);
      std::vector<std::string> image;
      for (const Tiling& t : c.tilings) {
        ++r.cases;
        try {
          const Tiling s = swap_adjacent(t, row);
          if (weight_subtile_level(s) != weight_subtile_level(t)) r.fail(where(c) + ": swap changes the weight");
          if (swap_adjacent(s, row) != t) r.fail(where(c) + ": swap does not undo itself");
          image.push_back(serialize(s));
        } catch (const std::exception& e) {
          r.fail(where(c) + " row " + std::to_string(row) + ": " + e.what());
        }
      }
      std::sort(image.begin(), image.end());
      if (image != target.serialized) r.fail(where(c) + ": swap image differs from HPD_" + tau_to_string(swapped));
    }
  }
  return r;
}

CheckResult check_transport(const Sweep& sweep) {
  CheckResult r;
  for (const SweepCase& c : sweep.cases()) {
    for (const auto& to : row_type_words(static_cast<int>(c.alpha.size()))) {
      ++r.cases;
      const SweepCase& target = sweep.at(c.alpha, to);
      std::vector<std::string> image;
      for (const Tiling& t : c.tilings) {
        try {
          const Tiling u = transport(t, to);
          if (weight_subtile_level(u) != weight_subtile_level(t)) r.fail(where(c) + " -> " + tau_to_string(to) + ": weight changed");
          image.push_back(serialize(u));
        } catch (const std::exception& e) {
          r.fail(where(c) + " -> " + tau_to_string(to) + ": " + e.what());
        }
      }
      std::sort(image.begin(), image.end());
      if (image != target.serialized) r.fail(where(c) + " -> " + tau_to_string(to) + ": image is not the target set");
    }
  }
  return r;
}

CheckResult check_round_trip(const Sweep& sweep) {
  CheckResult r;
  for (const SweepCase& c : sweep.cases()) {
    for (std::size_t i = 0; i < c.tilings.size(); ++i) {
      ++r.cases;
      const Tiling& t = c.tilings[i];
      const std::string text = serialize(t);
      try {
        const Tiling back = parse_tiling(text);
        if (back != t || serialize(back) != text) r.fail(where(c) + ": round trip changed a tiling");
      } catch (const std::exception& e) {
        r.fail(where(c) + ": " + e.what());
      }
    }
  }
  return r;
}

CheckResult check_branching_identity(int max_n, int max_part) {
  CheckResult r;
  for (int n = 2; n <= max_n; ++n) {
    for (const Composition& alpha : compositions(n, max_part)) {
      const Polynomial key = key_polynomial(alpha);
      const int N = alpha.max_part();
      for (int m = 1; m < n; ++m) {
        for (const auto& tau : row_type_words(n - m)) {
          const int a = static_cast<int>(std::count(tau.begin(), tau.end(), RowType::West));
          ++r.cases;
          const BranchTable table = branch_table(alpha, a, m, tau, N);
          Polynomial sum(n);
          for (const auto& [beta, coefficient] : table.entries) {
            for (int v : coefficient.support()) {
              if (v > a && v <= a + m) r.fail("alpha=" + alpha.to_string() + ": coefficient uses x" + std::to_string(v));
            }
            sum += coefficient * shift_vars(key_polynomial(beta), a, n);
          }
          if (sum != key) {
            r.fail("alpha=" + alpha.to_string() + " a=" + std::to_string(a) + " m=" + std::to_string(m) +
                   " tau=" + tau_to_string(tau) + ": expansion gives " + sum.to_string());
          }
        }
      }
    }
  }
  return r;
}

}  // namespace hpd
