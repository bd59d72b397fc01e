// Grids of west/east sub-tiles, their boundary data, validation, pipe tracing
// and weights.
//
// A grid with R rows and N+1 columns is stored as an R x (N+1)n matrix of
// sub-tiles. Sub-column s lies in column s / n at sub-position (s mod n) + 1,
// and only the pipe of color (s mod n) + 1 may cross the floor or ceiling of
// a sub-tile in that sub-column.
#ifndef HPD_TILING_HPP
#define HPD_TILING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hpd/polynomial.hpp"

namespace hpd {

/// Pipe color in 1..n; 0 means "no pipe".
using Color = int;
inline constexpr Color kNoColor = 0;

enum class RowType : std::uint8_t { West, East };

char to_char(RowType t);
std::vector<RowType> parse_tau(std::string_view text);
std::string tau_to_string(const std::vector<RowType>& tau);

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sub-tile shapes, named by the walls they connect:
///   ElbowLT  left wall to ceiling   (west only)
///   ElbowRB  right wall to floor    (west only)
///   ElbowRT  right wall to ceiling  (east only)
///   ElbowLB  left wall to floor     (east only)
enum class TileKind : std::uint8_t { Empty, Vertical, Horizontal, Crossing, ElbowLT, ElbowRB, ElbowRT, ElbowLB };

/// One sub-tile. For Crossing, `h` is the horizontal pipe and `v` the
/// vertical one; single-pipe shapes keep their color in `h`.
struct SubTile {
  TileKind kind = TileKind::Empty;
  Color h = kNoColor;
  Color v = kNoColor;

  static SubTile empty() { return {}; }
  static SubTile vertical(Color c) { return {TileKind::Vertical, c, kNoColor}; }
  static SubTile horizontal(Color c) { return {TileKind::Horizontal, c, kNoColor}; }
  static SubTile crossing(Color h, Color v) { return {TileKind::Crossing, h, v}; }
  static SubTile elbow_lt(Color c) { return {TileKind::ElbowLT, c, kNoColor}; }
  static SubTile elbow_rb(Color c) { return {TileKind::ElbowRB, c, kNoColor}; }
  static SubTile elbow_rt(Color c) { return {TileKind::ElbowRT, c, kNoColor}; }
  static SubTile elbow_lb(Color c) { return {TileKind::ElbowLB, c, kNoColor}; }

  /// Builds the sub-tile whose four walls carry the given colors, or nullopt
  /// if no single shape has that footprint.
  static std::optional<SubTile> from_walls(Color left, Color right, Color top, Color bottom);

  Color left() const;
  Color right() const;
  Color top() const;
  Color bottom() const;

  bool is_empty() const { return kind == TileKind::Empty; }

  friend bool operator==(const SubTile&, const SubTile&) = default;
};

/// Whether the shape may appear in a row of the given type at all.
bool allowed_in(const SubTile& t, RowType type);

/// Boundary labels of a grid. Top and bottom are indexed by sub-column and
/// hold kNoColor where the boundary is empty; left and right are per row.
struct BoundarySpec {
  int n = 0;
  int N = 0;
  Composition alpha;
  /// Present for skew grids.
  std::optional<Composition> beta;
  int offset = 0;  // the number a of west rows in a skew grid
  std::vector<Color> top;
  std::vector<Color> bottom;
  std::vector<Color> left;
  std::vector<Color> right;

  int width() const { return (N + 1) * n; }
  int rows() const { return static_cast<int>(left.size()); }
  bool is_skew() const { return beta.has_value(); }

  friend bool operator==(const BoundarySpec&, const BoundarySpec&) = default;
};

inline int column_of(int subcol, int n) { return subcol / n; }
inline int subposition_of(int subcol, int n) { return subcol % n + 1; }
inline Color floor_color(int subcol, int n) { return subcol % n + 1; }
inline bool is_last_subcolumn(int subcol, int n) { return subcol % n == n - 1; }

/// Boundary for HPD_tau(alpha).
BoundarySpec build_boundary(const Composition& alpha, const std::vector<RowType>& tau, int N);

/// Boundary for HPD_tau(alpha/beta) on an (n-m)-row grid; color a+i enters
/// the bottom at sub-position a+i of column beta_i.
BoundarySpec build_skew_boundary(const Composition& alpha, const Composition& beta, int a,
                                 const std::vector<RowType>& tau, int N);

struct RowLabeling {
  int k = 0;  // number of west rows
  std::vector<Color> label_of_row;
  std::map<Color, int> row_of_label;
};

/// West rows get labels 1..k from the top down, east rows n..k+1.
RowLabeling row_labeling(const std::vector<RowType>& tau);

class Tiling {
 public:
  Tiling() = default;
  Tiling(BoundarySpec boundary, std::vector<RowType> tau);
  Tiling(BoundarySpec boundary, std::vector<RowType> tau, std::vector<SubTile> cells);

  int n() const { return boundary_.n; }
  int N() const { return boundary_.N; }
  int rows() const { return static_cast<int>(tau_.size()); }
  int width() const { return boundary_.width(); }
  const std::vector<RowType>& tau() const { return tau_; }
  const BoundarySpec& boundary() const { return boundary_; }
  const std::vector<SubTile>& cells() const { return cells_; }

  const SubTile& at(int row, int subcol) const { return cells_[index(row, subcol)]; }
  SubTile& at(int row, int subcol) { return cells_[index(row, subcol)]; }

  /// Label (color) carried on the left or right boundary of the row.
  Color row_label(int row) const;

  friend bool operator==(const Tiling&, const Tiling&) = default;

 private:
  std::size_t index(int row, int subcol) const { return static_cast<std::size_t>(row) * width() + subcol; }

  BoundarySpec boundary_;
  std::vector<RowType> tau_;
  std::vector<SubTile> cells_;
};

enum class Rule {
  Dimensions,
  WallMismatch,
  BoundaryMismatch,
  RowTypeShape,
  FloorColor,
  CrossingOrder,
  PipeIncomplete,
};

std::string to_string(Rule rule);

struct Violation {
  Rule rule;
  int row;     // -1 when the violation is not tied to a cell
  int subcol;  // -1 likewise
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(Rule rule) const;
  std::string to_string() const;
};

/// Checks wall consistency, boundary labels, the per-shape rules and pipe
/// completeness.
ValidationReport validate_tiling(const Tiling& t);

/// A wall crossed by a pipe. Vertical walls sit between sub-columns x-1 and x
/// of `row` (x = 0 is the left boundary, x = width the right one). Horizontal
/// walls sit above `row` in sub-column x (row = rows() is the bottom boundary).
struct WallCrossing {
  enum class Kind : std::uint8_t { Vertical, Horizontal };
  Kind kind;
  int row;
  int x;
  friend bool operator==(const WallCrossing&, const WallCrossing&) = default;
  friend auto operator<=>(const WallCrossing&, const WallCrossing&) = default;
};

using PipePath = std::vector<WallCrossing>;

class TraceError : public ModelError {
 public:
  TraceError(const std::string& what, int row, int subcol) : ModelError(what), row_(row), subcol_(subcol) {}
  int row() const { return row_; }
  int subcol() const { return subcol_; }

 private:
  int row_;
  int subcol_;
};

/// Follows every pipe from its source wall to the top boundary. Throws
/// TraceError if a strand ends inside the grid or is not reached by any pipe.
std::map<Color, PipePath> trace_pipes(const Tiling& t);

/// Weight counted tile by tile from the traced pipes: a west row gains its
/// variable for each tile whose right wall a pipe crosses, an east row for
/// each tile whose right wall no pipe crosses.
Polynomial weight_tile_level(const Tiling& t);

/// Weight as a product over sub-tiles in the last sub-column of each column.
Polynomial weight_subtile_level(const Tiling& t);

/// Sub-tile weight factor: the variable index (row label) or 0 for weight 1.
Color subtile_weight_variable(const Tiling& t, int row, int subcol);

}  // namespace hpd

#endif  // HPD_TILING_HPP
