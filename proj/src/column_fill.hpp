// Local rule shared by the enumerator and the sweep evaluator: the ways to
// fill one sub-column given the horizontal colors entering from the left.
#ifndef HPD_SRC_COLUMN_FILL_HPP
#define HPD_SRC_COLUMN_FILL_HPP

#include <vector>

#include "hpd/tiling.hpp"

namespace hpd::detail {

/// Horizontal color on the vertical wall of each row, kNoColor for none.
using WallState = std::vector<Color>;

struct ColumnContext {
  int subcol;
  Color floor;   // the only color that may cross a floor in this sub-column
  Color top;     // boundary label above row 0 (kNoColor or floor)
  Color bottom;  // boundary label below the last row
  const std::vector<RowType>* tau;
};

/// Calls visit(cells, next_state) for every legal filling. Cells run top to
/// bottom.
template <class Visit>
void for_each_column_fill(const ColumnContext& ctx, const WallState& in, Visit&& visit) {
  const int rows = static_cast<int>(in.size());
  std::vector<SubTile> cells(rows);
  WallState out(rows, kNoColor);
  const Color q = ctx.floor;

  // above: color on the ceiling of row r.
  auto recurse = [&](auto&& self, int r, Color above) -> void {
    if (r == rows) {
      if (above == ctx.bottom) visit(static_cast<const std::vector<SubTile>&>(cells), static_cast<const WallState&>(out));
      return;
    }
    const bool west = (*ctx.tau)[r] == RowType::West;
    const Color h = in[r];
    auto emit = [&](SubTile cell, Color right, Color below) {
      cells[r] = cell;
      out[r] = right;
      self(self, r + 1, below);
    };
    if (h == kNoColor && above == kNoColor) {
      emit(SubTile::empty(), kNoColor, kNoColor);
      if (west) emit(SubTile::elbow_rb(q), q, q);
    } else if (h == kNoColor) {
      emit(SubTile::vertical(q), kNoColor, q);
      if (!west) emit(SubTile::elbow_rt(q), q, kNoColor);
    } else if (above == kNoColor) {
      emit(SubTile::horizontal(h), h, kNoColor);
      if (!west && h == q) emit(SubTile::elbow_lb(q), kNoColor, q);
    } else {
      if (west && h == q) emit(SubTile::elbow_lt(q), kNoColor, kNoColor);
      if (west ? h < q : h > q) emit(SubTile::crossing(h, q), h, q);
    }
  };
  recurse(recurse, 0, ctx.top);
}

}  // namespace hpd::detail

#endif  // HPD_SRC_COLUMN_FILL_HPP
