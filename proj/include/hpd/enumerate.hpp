// Enumeration of tilings and their weighted sums.
#ifndef HPD_ENUMERATE_HPP
#define HPD_ENUMERATE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hpd/polynomial.hpp"
#include "hpd/tiling.hpp"

namespace hpd {

/// Thrown by the sweep evaluator when the number of live wall states at a
/// sub-column exceeds its budget.
class StateSpaceOverflow : public std::runtime_error {
 public:
  StateSpaceOverflow(int subcol, std::size_t states);
  int subcol() const { return subcol_; }

 private:
  int subcol_;
};

inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 20;

/// Every tiling with the given boundary, sorted by serialized text.
std::vector<Tiling> enumerate_tilings(const BoundarySpec& boundary, const std::vector<RowType>& tau);

/// HPD_tau(alpha/beta).
std::vector<Tiling> enumerate_skew(const Composition& alpha, const Composition& beta, int a,
                                   const std::vector<RowType>& tau, int N);

/// Sum of weights over enumerate_tilings(build_boundary(alpha, tau, N), tau).
Polynomial hpd_polynomial(const Composition& alpha, const std::vector<RowType>& tau, int N);

/// Same polynomial, computed by sweeping sub-columns left to right over the
/// horizontal colors crossing each vertical wall. Never builds a tiling.
Polynomial hpd_polynomial_dp(const Composition& alpha, const std::vector<RowType>& tau, int N,
                             std::size_t state_budget = kDefaultStateBudget);

/// Sweep evaluator for an arbitrary boundary (skew grids included).
Polynomial weighted_sum_dp(const BoundarySpec& boundary, const std::vector<RowType>& tau,
                           std::size_t state_budget = kDefaultStateBudget);

/// Sum of weight_subtile_level over a set of tilings.
Polynomial total_weight(const std::vector<Tiling>& tilings, int num_vars);

}  // namespace hpd

#endif  // HPD_ENUMERATE_HPP
