#include "hpd/branching.hpp"

#include <algorithm>
#include <string>

#include "hpd/enumerate.hpp"

namespace hpd {

Polynomial branch_coefficient(const Composition& alpha, const Composition& beta, int a,
                              const std::vector<RowType>& tau, int N) {
  return total_weight(enumerate_skew(alpha, beta, a, tau, N), static_cast<int>(alpha.size()));
}

BranchTable branch_table(const Composition& alpha, int a, int m, const std::vector<RowType>& tau, int N) {
  BranchTable table{alpha, a, m, tau, N, {}};
  std::vector<int> parts(m, 0);
  // Odometer over [0, N]^m.
  while (true) {
    const Composition beta(parts);
    Polynomial c = branch_coefficient(alpha, beta, a, tau, N);
    if (!c.is_zero()) table.entries.emplace(beta, std::move(c));
    int i = m - 1;
    while (i >= 0 && parts[i] == N) parts[i--] = 0;
    if (i < 0) break;
    ++parts[i];
  }
  return table;
}

namespace {

SubTile shift_colors(SubTile cell, int by) {
  if (cell.h != kNoColor) cell.h += by;
  if (cell.v != kNoColor) cell.v += by;
  return cell;
}

SubTile horizontal_or_empty(Color c) { return c == kNoColor ? SubTile::empty() : SubTile::horizontal(c); }

}  // namespace

Tiling stack(const Tiling& upper, const Tiling& lower) {
  const BoundarySpec& ub = upper.boundary();
  if (!ub.is_skew()) throw ModelError("upper tiling must live on a skew grid");
  if (lower.boundary().is_skew()) throw ModelError("lower tiling must not be skew");
  if (upper.N() != lower.N()) throw ModelError("stacked tilings need the same N");
  if (*ub.beta != lower.boundary().alpha) throw ModelError("seam mismatch: upper beta differs from lower alpha");
  const int n = upper.n();
  const int m = lower.n();
  const int a = ub.offset;

  std::vector<RowType> tau = upper.tau();
  tau.insert(tau.end(), lower.tau().begin(), lower.tau().end());
  Tiling out(build_boundary(ub.alpha, tau, upper.N()), tau);
  for (int r = 0; r < upper.rows(); ++r) {
    for (int u = 0; u < upper.width(); ++u) out.at(r, u) = upper.at(r, u);
  }
  for (int r = 0; r < lower.rows(); ++r) {
    const int row = upper.rows() + r;
    for (int u = 0; u < out.width(); ++u) {
      const int col = column_of(u, n);
      const int j = subposition_of(u, n);
      SubTile cell;
      if (j <= a) {
        const Color c = lower.at(r, col * m).left();
        cell = horizontal_or_empty(c == kNoColor ? c : c + a);
      } else if (j > a + m) {
        const Color c = lower.at(r, col * m + m - 1).right();
        cell = horizontal_or_empty(c == kNoColor ? c : c + a);
      } else {
        cell = shift_colors(lower.at(r, col * m + j - a - 1), a);
      }
      out.at(row, u) = cell;
    }
  }
  return out;
}

std::pair<Tiling, Tiling> unstack(const Tiling& t, int m) {
  if (t.boundary().is_skew()) throw ModelError("cannot unstack a skew tiling");
  const int n = t.n();
  if (m < 1 || m > n) throw ModelError("need 1 <= m <= n");
  const int upper_rows = n - m;
  std::vector<RowType> upper_tau(t.tau().begin(), t.tau().begin() + upper_rows);
  std::vector<RowType> lower_tau(t.tau().begin() + upper_rows, t.tau().end());
  const int a = static_cast<int>(std::count(upper_tau.begin(), upper_tau.end(), RowType::West));

  std::vector<int> beta(m, -1);
  for (int u = 0; u < t.width(); ++u) {
    const Color c = upper_rows == 0 ? t.boundary().top[u] : t.at(upper_rows - 1, u).bottom();
    if (c == kNoColor) continue;
    if (c <= a || c > a + m || beta[c - a - 1] >= 0) throw ModelError("unexpected color " + std::to_string(c) + " on the seam");
    beta[c - a - 1] = column_of(u, n);
  }
  if (std::count(beta.begin(), beta.end(), -1) > 0) throw ModelError("seam misses a lower color");
  const Composition b(beta);

  Tiling upper(build_skew_boundary(t.boundary().alpha, b, a, upper_tau, t.N()), upper_tau);
  for (int r = 0; r < upper_rows; ++r) {
    for (int u = 0; u < t.width(); ++u) upper.at(r, u) = t.at(r, u);
  }
  Tiling lower(build_boundary(b, lower_tau, t.N()), lower_tau);
  for (int r = 0; r < m; ++r) {
    for (int u = 0; u < lower.width(); ++u) {
      const int col = column_of(u, m);
      const int i = subposition_of(u, m);
      lower.at(r, u) = shift_colors(t.at(upper_rows + r, col * n + a + i - 1), -a);
    }
  }
  if (stack(upper, lower) != t) throw ModelError("tiling does not split along the seam");
  return {std::move(upper), std::move(lower)};
}

}  // namespace hpd
