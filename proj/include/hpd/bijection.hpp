// Weight-preserving bijections between tilings of different row types:
// flipping the type of the bottom row and exchanging two adjacent rows of
// different types.
//
// Two adjacent rows form a strip. Its west row carries label `a` on the left
// boundary and its east row carries `b` on the right. For each color c in the
// strip, s(c) is the sub-column where c enters through the strip's floor and
// t(c) the sub-column where it leaves through the ceiling; by convention
// s(a) = -infinity and s(b) = +infinity. A sub-column strictly between s(c)
// and t(c) for some c is frozen. An unfrozen sub-column equal to some s(c) or
// t(c) is critical. Maximal runs of unfrozen sub-columns start and end at
// critical sub-columns.
#ifndef HPD_BIJECTION_HPP
#define HPD_BIJECTION_HPP

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hpd/tiling.hpp"

namespace hpd {

class StripError : public ModelError {
 public:
  using ModelError::ModelError;
};

inline constexpr long kMinusInfinity = std::numeric_limits<long>::min();
inline constexpr long kPlusInfinity = std::numeric_limits<long>::max();

/// Row order of a strip: WE has the west row on top.
enum class StripOrder : std::uint8_t { WE, EW };

StripOrder opposite(StripOrder order);
const char* to_string(StripOrder order);

struct StripBoundary {
  int n = 0;
  int N = 0;
  StripOrder order = StripOrder::WE;
  Color a = kNoColor;  // west row label, enters on the left
  Color b = kNoColor;  // east row label, enters on the right
  std::vector<Color> top;
  std::vector<Color> bottom;

  int width() const { return (N + 1) * n; }
  int upper_index_of(RowType type) const;
  /// Left/right boundary colors of the upper (0) or lower (1) row.
  Color left_of(int row) const;
  Color right_of(int row) const;

  friend bool operator==(const StripBoundary&, const StripBoundary&) = default;
};

struct Strip {
  StripBoundary boundary;
  std::array<std::vector<SubTile>, 2> rows;  // [0] upper, [1] lower

  friend bool operator==(const Strip&, const Strip&) = default;
};

/// Rows `row` and `row + 1` of t, which must have different types.
Strip extract_strip(const Tiling& t, int row);

enum class CriticalKind : std::uint8_t {
  LeftEnd,   // only the right neighbor is unfrozen
  Middle,    // both neighbors unfrozen
  RightEnd,  // only the left neighbor is unfrozen
  Isolated,  // neither neighbor is unfrozen
};

struct Critical {
  int subcol;
  CriticalKind kind;
  Color color;
};

struct MaximalInterval {
  std::vector<int> criticals;  // m_0 < m_1 < ... < m_k
  std::vector<int> gap_sizes;  // |I_i| for i = 1..k, the open gaps between criticals
  std::vector<int> bounds;     // N_i = floor(|I_i| / n)
  int last_subcolumns = 0;     // w: last sub-columns of a column in I minus m_k

  int first() const { return criticals.front(); }
  int last() const { return criticals.back(); }
  int k() const { return static_cast<int>(criticals.size()) - 1; }
};

struct StripAnalysis {
  std::map<Color, long> source;  // s(c)
  std::map<Color, long> target;  // t(c)
  std::vector<bool> frozen;
  std::vector<Critical> criticals;
  std::vector<MaximalInterval> intervals;
};

StripAnalysis analyze_strip(const StripBoundary& boundary);

/// One tuple (j_1, ..., j_k) per maximal interval, with 0 <= j_i <= N_i.
using SwapCode = std::vector<std::vector<int>>;

/// Reads off the U-turn offsets of every interval. Throws StripError if the
/// strip does not have the frozen/interval structure its boundary forces.
SwapCode decode_strip(const Strip& strip);

/// Builds the unique strip with this boundary and code.
Strip encode_strip(const StripBoundary& boundary, const SwapCode& code);

/// The shapes a frozen sub-column can take. Items 1..10: `c` is the pipe
/// running across the sub-column, `other` the second pipe (0 for 9, 10).
/// Item 11 has horizontals in both rows crossed by a vertical pipe: `c` runs
/// in the west row, `other` in the east row and `through` passes straight up,
/// with c < through < other.
struct FrozenPattern {
  int index = 0;
  Color c = kNoColor;
  Color other = kNoColor;
  Color through = kNoColor;
  friend bool operator==(const FrozenPattern&, const FrozenPattern&) = default;
};

/// Cells (upper, lower) of a frozen pattern in the given row order.
std::pair<SubTile, SubTile> frozen_cells(const FrozenPattern& p, StripOrder order);

/// Recognizes a frozen sub-column from its two cells.
std::optional<FrozenPattern> classify_frozen(const SubTile& upper, const SubTile& lower, StripOrder order);

/// The pattern forced at frozen sub-column `u` by the boundary.
FrozenPattern frozen_pattern_at(const StripBoundary& boundary, const StripAnalysis& analysis, int u);

/// Changes the type of the bottom row by rerouting its single pipe.
Tiling flip_bottom_row(const Tiling& t);

/// Exchanges rows `row` and `row + 1`, which must have different types.
Tiling swap_adjacent(const Tiling& t, int row);

struct Move {
  enum class Kind : std::uint8_t { FlipBottom, Swap };
  Kind kind;
  int row;  // upper row of a swap; the bottom row for a flip
  friend bool operator==(const Move&, const Move&) = default;
};

/// Fixed schedule turning `from` into `to`: rows are settled top to bottom;
/// the nearest lower row of the wanted type is bubbled up by adjacent swaps,
/// and when none exists the bottom row is flipped first.
std::vector<Move> transport_schedule(const std::vector<RowType>& from, const std::vector<RowType>& to);

Tiling apply_move(const Tiling& t, const Move& move);
Tiling transport(const Tiling& t, const std::vector<RowType>& target_tau);

}  // namespace hpd

#endif  // HPD_BIJECTION_HPP
