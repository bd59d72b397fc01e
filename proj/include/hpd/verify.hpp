// Exhaustive identity sweeps over small compositions, shared by the command
// line `verify` command and the acceptance suite.
#ifndef HPD_VERIFY_HPP
#define HPD_VERIFY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hpd/polynomial.hpp"
#include "hpd/tiling.hpp"

namespace hpd {

struct SweepCase {
  Composition alpha;
  std::vector<RowType> tau;
  std::vector<Tiling> tilings;        // N = max part of alpha
  std::vector<std::string> serialized;  // same order, sorted
};

/// Every alpha of length 1..max_n with parts <= max_part, every tau, and the
/// tilings of each pair.
class Sweep {
 public:
  Sweep(int max_n, int max_part);

  const std::vector<SweepCase>& cases() const { return cases_; }
  const SweepCase& at(const Composition& alpha, const std::vector<RowType>& tau) const;
  std::size_t tiling_count() const;

 private:
  std::vector<SweepCase> cases_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

struct CheckResult {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, empty when ok

  void fail(std::string what);
};

/// All compositions of length n with parts in [0, max_part], in
/// lexicographic order.
std::vector<Composition> compositions(int n, int max_part);

/// All words in {W,E}^n, W before E at each position.
std::vector<std::vector<RowType>> row_type_words(int n);

/// The weighted sum of every swept pair equals key_polynomial(alpha).
CheckResult check_weighted_sums(const Sweep& sweep);

/// The sweep evaluator agrees with enumeration.
CheckResult check_dp_agreement(const Sweep& sweep);

/// Raising N by one or two leaves the weighted sum unchanged.
CheckResult check_n_stability(const Sweep& sweep);

/// flip_bottom_row is a weight-preserving involution and swap_adjacent a
/// weight-preserving bijection onto the swapped word, on every tiling.
CheckResult check_row_moves(const Sweep& sweep);

/// transport maps each HPD_tau(alpha) onto HPD_tau'(alpha) for every pair of
/// words, preserving weights.
CheckResult check_transport(const Sweep& sweep);

/// parse(serialize(t)) == t and serialize is a fixpoint.
CheckResult check_round_trip(const Sweep& sweep);

/// key(alpha) = sum over beta of c_{alpha beta} * key(beta) shifted by a, for
/// n <= max_n, parts <= max_part, every split (a, m) and every legal word.
CheckResult check_branching_identity(int max_n, int max_part);

}  // namespace hpd

#endif  // HPD_VERIFY_HPP
