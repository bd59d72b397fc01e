// Two-side branching of key polynomials through skew tilings, and the
// stacking of a skew tiling over a tiling on fewer colors.
#ifndef HPD_BRANCHING_HPP
#define HPD_BRANCHING_HPP

#include <map>
#include <utility>
#include <vector>

#include "hpd/polynomial.hpp"
#include "hpd/tiling.hpp"

namespace hpd {

/// Coefficient of key(beta)(x_{a+1}, ..., x_{a+m}) in key(alpha): the weighted
/// sum over the skew grid alpha/beta with a west rows.
Polynomial branch_coefficient(const Composition& alpha, const Composition& beta, int a,
                              const std::vector<RowType>& tau, int N);

struct BranchTable {
  Composition alpha;
  int a = 0;
  int m = 0;
  std::vector<RowType> tau;
  int N = 0;
  std::map<Composition, Polynomial> entries;  // nonzero coefficients only
};

/// All nonzero coefficients over beta of length m with parts <= N.
BranchTable branch_table(const Composition& alpha, int a, int m, const std::vector<RowType>& tau, int N);

/// Glues a skew tiling (upper) onto a tiling over its bottom composition
/// (lower). Lower colors become a+1..a+m; the remaining sub-positions of each
/// lower column carry whatever crosses that column's side walls.
Tiling stack(const Tiling& upper, const Tiling& lower);

/// Inverse of stack for a tiling whose first `rows - m` rows contain a west
/// rows.
std::pair<Tiling, Tiling> unstack(const Tiling& t, int m);

}  // namespace hpd

#endif  // HPD_BRANCHING_HPP
