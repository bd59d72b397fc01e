#include "hpd/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "column_fill.hpp"
#include "hpd/io.hpp"

namespace hpd {

using detail::ColumnContext;
using detail::WallState;

StateSpaceOverflow::StateSpaceOverflow(int subcol, std::size_t states)
    : std::runtime_error("state space overflow at sub-column " + std::to_string(subcol) + " (" +
                         std::to_string(states) + " states)"),
      subcol_(subcol) {}

namespace {

ColumnContext context_for(const BoundarySpec& b, const std::vector<RowType>& tau, int s) {
  return {s, floor_color(s, b.n), b.top[s], b.bottom[s], &tau};
}

WallState left_state(const BoundarySpec& b) { return b.left; }
WallState right_state(const BoundarySpec& b) { return b.right; }

void check_shapes(const BoundarySpec& b, const std::vector<RowType>& tau) {
  if (static_cast<int>(tau.size()) != b.rows()) throw ModelError("tau length differs from the boundary row count");
  if (static_cast<int>(b.top.size()) != b.width() || static_cast<int>(b.bottom.size()) != b.width()) {
    throw ModelError("boundary top/bottom length differs from (N+1)n");
  }
}

}  // namespace

std::vector<Tiling> enumerate_tilings(const BoundarySpec& boundary, const std::vector<RowType>& tau) {
  check_shapes(boundary, tau);
  const int width = boundary.width();
  const int rows = boundary.rows();

  // Forward reachability of wall states, then prune to the states that can
  // still reach the right boundary.
  std::vector<std::set<WallState>> live(width + 1);
  live[0].insert(left_state(boundary));
  for (int s = 0; s < width; ++s) {
    const ColumnContext ctx = context_for(boundary, tau, s);
    for (const WallState& st : live[s]) {
      detail::for_each_column_fill(ctx, st, [&](const std::vector<SubTile>&, const WallState& next) {
        live[s + 1].insert(next);
      });
    }
  }
  const WallState goal = right_state(boundary);
  live[width] = live[width].count(goal) ? std::set<WallState>{goal} : std::set<WallState>{};
  for (int s = width - 1; s >= 0; --s) {
    const ColumnContext ctx = context_for(boundary, tau, s);
    std::set<WallState> keep;
    for (const WallState& st : live[s]) {
      bool viable = false;
      detail::for_each_column_fill(ctx, st, [&](const std::vector<SubTile>&, const WallState& next) {
        viable = viable || live[s + 1].count(next) > 0;
      });
      if (viable) keep.insert(st);
    }
    live[s] = std::move(keep);
  }

  std::vector<Tiling> result;
  if (live[0].empty()) return result;

  Tiling current(boundary, tau);
  auto dfs = [&](auto&& self, int s, const WallState& st) -> void {
    if (s == width) {
      result.push_back(current);
      return;
    }
    const ColumnContext ctx = context_for(boundary, tau, s);
    detail::for_each_column_fill(ctx, st, [&](const std::vector<SubTile>& cells, const WallState& next) {
      if (!live[s + 1].count(next)) return;
      for (int r = 0; r < rows; ++r) current.at(r, s) = cells[r];
      WallState copy = next;
      self(self, s + 1, copy);
    });
  };
  dfs(dfs, 0, left_state(boundary));

  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(result.size());
  for (std::size_t i = 0; i < result.size(); ++i) keys.emplace_back(serialize(result[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Tiling> sorted;
  sorted.reserve(result.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(result[i]));
  return sorted;
}

std::vector<Tiling> enumerate_skew(const Composition& alpha, const Composition& beta, int a,
                                   const std::vector<RowType>& tau, int N) {
  return enumerate_tilings(build_skew_boundary(alpha, beta, a, tau, N), tau);
}

Polynomial total_weight(const std::vector<Tiling>& tilings, int num_vars) {
  Polynomial sum(num_vars);
  for (const Tiling& t : tilings) sum += weight_subtile_level(t);
  return sum;
}

Polynomial hpd_polynomial(const Composition& alpha, const std::vector<RowType>& tau, int N) {
  BoundarySpec b = build_boundary(alpha, tau, N);
  return total_weight(enumerate_tilings(b, tau), b.n);
}

Polynomial weighted_sum_dp(const BoundarySpec& boundary, const std::vector<RowType>& tau, std::size_t state_budget) {
  check_shapes(boundary, tau);
  const int n = boundary.n;
  const int rows = boundary.rows();
  std::vector<Color> label(rows);
  for (int r = 0; r < rows; ++r) label[r] = tau[r] == RowType::West ? boundary.left[r] : boundary.right[r];

  std::map<WallState, Polynomial> frontier;
  frontier.emplace(left_state(boundary), Polynomial::constant(n, 1));
  ExponentVector step(n, 0);
  for (int s = 0; s < boundary.width(); ++s) {
    const ColumnContext ctx = context_for(boundary, tau, s);
    const bool last = is_last_subcolumn(s, n);
    std::map<WallState, Polynomial> next_frontier;
    for (const auto& [st, poly] : frontier) {
      detail::for_each_column_fill(ctx, st, [&](const std::vector<SubTile>&, const WallState& next) {
        auto [it, inserted] = next_frontier.try_emplace(next, n);
        if (!last) {
          it->second += poly;
          return;
        }
        std::fill(step.begin(), step.end(), 0);
        for (int r = 0; r < rows; ++r) {
          const bool touched = next[r] != kNoColor;
          if (touched == (tau[r] == RowType::West)) ++step[label[r] - 1];
        }
        it->second += poly.times_monomial(step);
      });
    }
    if (next_frontier.size() > state_budget) throw StateSpaceOverflow(s, next_frontier.size());
    frontier = std::move(next_frontier);
  }
  auto it = frontier.find(right_state(boundary));
  return it == frontier.end() ? Polynomial::zero(n) : it->second;
}

Polynomial hpd_polynomial_dp(const Composition& alpha, const std::vector<RowType>& tau, int N,
                             std::size_t state_budget) {
  return weighted_sum_dp(build_boundary(alpha, tau, N), tau, state_budget);
}

}  // namespace hpd
