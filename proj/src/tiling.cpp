#include "hpd/tiling.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hpd {

char to_char(RowType t) { return t == RowType::West ? 'W' : 'E'; }

std::vector<RowType> parse_tau(std::string_view text) {
  std::vector<RowType> tau;
  tau.reserve(text.size());
  for (char ch : text) {
    if (ch == 'W' || ch == 'w') {
      tau.push_back(RowType::West);
    } else if (ch == 'E' || ch == 'e') {
      tau.push_back(RowType::East);
    } else {
      throw ModelError("row types must be W or E, got '" + std::string(text) + "'");
    }
  }
  return tau;
}

std::string tau_to_string(const std::vector<RowType>& tau) {
  std::string s;
  for (RowType t : tau) s += to_char(t);
  return s;
}

// ---------------------------------------------------------------------------
// SubTile

std::optional<SubTile> SubTile::from_walls(Color left, Color right, Color top, Color bottom) {
  const bool l = left != kNoColor, r = right != kNoColor, t = top != kNoColor, b = bottom != kNoColor;
  if (!l && !r && !t && !b) return empty();
  if (l && r && !t && !b && left == right) return horizontal(left);
  if (!l && !r && t && b && top == bottom) return vertical(top);
  if (l && r && t && b && left == right && top == bottom && left != top) return crossing(left, top);
  if (l && t && !r && !b && left == top) return elbow_lt(left);
  if (r && b && !l && !t && right == bottom) return elbow_rb(right);
  if (r && t && !l && !b && right == top) return elbow_rt(right);
  if (l && b && !r && !t && left == bottom) return elbow_lb(left);
  return std::nullopt;
}

Color SubTile::left() const {
  switch (kind) {
    case TileKind::Horizontal:
    case TileKind::Crossing:
    case TileKind::ElbowLT:
    case TileKind::ElbowLB:
      return h;
    default:
      return kNoColor;
  }
}

Color SubTile::right() const {
  switch (kind) {
    case TileKind::Horizontal:
    case TileKind::Crossing:
    case TileKind::ElbowRB:
    case TileKind::ElbowRT:
      return h;
    default:
      return kNoColor;
  }
}

Color SubTile::top() const {
  switch (kind) {
    case TileKind::Vertical:
    case TileKind::ElbowLT:
    case TileKind::ElbowRT:
      return h;
    case TileKind::Crossing:
      return v;
    default:
      return kNoColor;
  }
}

Color SubTile::bottom() const {
  switch (kind) {
    case TileKind::Vertical:
    case TileKind::ElbowRB:
    case TileKind::ElbowLB:
      return h;
    case TileKind::Crossing:
      return v;
    default:
      return kNoColor;
  }
}

bool allowed_in(const SubTile& t, RowType type) {
  switch (t.kind) {
    case TileKind::ElbowLT:
    case TileKind::ElbowRB:
      return type == RowType::West;
    case TileKind::ElbowRT:
    case TileKind::ElbowLB:
      return type == RowType::East;
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------
// Boundaries and labels

RowLabeling row_labeling(const std::vector<RowType>& tau) {
  const int n = static_cast<int>(tau.size());
  RowLabeling lab;
  lab.k = static_cast<int>(std::count(tau.begin(), tau.end(), RowType::West));
  lab.label_of_row.resize(n);
  int next_west = 1;
  int next_east = n;
  for (int r = 0; r < n; ++r) {
    Color c = tau[r] == RowType::West ? next_west++ : next_east--;
    lab.label_of_row[r] = c;
    lab.row_of_label[c] = r;
  }
  return lab;
}

namespace {

void place_top_labels(BoundarySpec& b) {
  const int n = b.n;
  for (int c = 1; c <= n; ++c) b.top[b.alpha[c - 1] * n + c - 1] = c;
}

}  // namespace

BoundarySpec build_boundary(const Composition& alpha, const std::vector<RowType>& tau, int N) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1) throw ModelError("alpha must have at least one part");
  if (static_cast<int>(tau.size()) != n) throw ModelError("tau and alpha must have the same length");
  if (N < alpha.max_part()) throw ModelError("N = " + std::to_string(N) + " is smaller than max(alpha)");

  BoundarySpec b;
  b.n = n;
  b.N = N;
  b.alpha = alpha;
  b.top.assign(b.width(), kNoColor);
  b.bottom.assign(b.width(), kNoColor);
  b.left.assign(n, kNoColor);
  b.right.assign(n, kNoColor);
  RowLabeling lab = row_labeling(tau);
  for (int r = 0; r < n; ++r) {
    (tau[r] == RowType::West ? b.left : b.right)[r] = lab.label_of_row[r];
  }
  place_top_labels(b);
  return b;
}

BoundarySpec build_skew_boundary(const Composition& alpha, const Composition& beta, int a,
                                 const std::vector<RowType>& tau, int N) {
  const int n = static_cast<int>(alpha.size());
  const int m = static_cast<int>(beta.size());
  if (n < 1) throw ModelError("alpha must have at least one part");
  if (a < 0 || a + m > n) throw ModelError("need 0 <= a and a + len(beta) <= len(alpha)");
  if (static_cast<int>(tau.size()) != n - m) throw ModelError("tau must have len(alpha) - len(beta) entries");
  if (std::count(tau.begin(), tau.end(), RowType::West) != a) {
    throw ModelError("tau must contain exactly a = " + std::to_string(a) + " west rows");
  }
  if (N < alpha.max_part() || N < beta.max_part()) throw ModelError("N is smaller than a part of alpha or beta");

  BoundarySpec b;
  b.n = n;
  b.N = N;
  b.alpha = alpha;
  b.beta = beta;
  b.offset = a;
  b.top.assign(b.width(), kNoColor);
  b.bottom.assign(b.width(), kNoColor);
  b.left.assign(n - m, kNoColor);
  b.right.assign(n - m, kNoColor);
  int next_west = 1;
  int next_east = n;
  for (int r = 0; r < n - m; ++r) {
    if (tau[r] == RowType::West) {
      b.left[r] = next_west++;
    } else {
      b.right[r] = next_east--;
    }
  }
  place_top_labels(b);
  for (int i = 1; i <= m; ++i) b.bottom[beta[i - 1] * n + a + i - 1] = a + i;
  return b;
}

// ---------------------------------------------------------------------------
// Tiling

Tiling::Tiling(BoundarySpec boundary, std::vector<RowType> tau)
    : boundary_(std::move(boundary)), tau_(std::move(tau)) {
  cells_.assign(static_cast<std::size_t>(rows()) * width(), SubTile::empty());
}

Tiling::Tiling(BoundarySpec boundary, std::vector<RowType> tau, std::vector<SubTile> cells)
    : boundary_(std::move(boundary)), tau_(std::move(tau)), cells_(std::move(cells)) {}

Color Tiling::row_label(int row) const {
  return tau_[row] == RowType::West ? boundary_.left[row] : boundary_.right[row];
}

// ---------------------------------------------------------------------------
// Validation

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::Dimensions: return "dimensions";
    case Rule::WallMismatch: return "wall-mismatch";
    case Rule::BoundaryMismatch: return "boundary-mismatch";
    case Rule::RowTypeShape: return "row-type-shape";
    case Rule::FloorColor: return "floor-color";
    case Rule::CrossingOrder: return "crossing-order";
    case Rule::PipeIncomplete: return "pipe-incomplete";
  }
  return "unknown";
}

bool ValidationReport::has(Rule rule) const {
  return std::any_of(violations.begin(), violations.end(), [rule](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << hpd::to_string(v.rule);
    if (v.row >= 0) out << " at row " << v.row + 1 << ", sub-column " << v.subcol;
    out << ": " << v.message << '\n';
  }
  return out.str();
}

namespace {

void check_dimensions(const Tiling& t, ValidationReport& report) {
  const BoundarySpec& b = t.boundary();
  auto fail = [&](const std::string& msg) { report.violations.push_back({Rule::Dimensions, -1, -1, msg}); };
  if (b.n < 1 || b.N < 0) fail("n must be positive and N nonnegative");
  if (static_cast<int>(b.top.size()) != b.width() || static_cast<int>(b.bottom.size()) != b.width()) {
    fail("top/bottom boundary length differs from (N+1)n");
  }
  if (static_cast<int>(b.left.size()) != t.rows() || static_cast<int>(b.right.size()) != t.rows()) {
    fail("left/right boundary length differs from the row count");
  }
  if (t.cells().size() != static_cast<std::size_t>(t.rows()) * t.width()) fail("cell matrix has the wrong size");
}

void check_cells(const Tiling& t, ValidationReport& report) {
  const int n = t.n();
  for (int r = 0; r < t.rows(); ++r) {
    const RowType type = t.tau()[r];
    for (int s = 0; s < t.width(); ++s) {
      const SubTile& cell = t.at(r, s);
      auto fail = [&](Rule rule, const std::string& msg) { report.violations.push_back({rule, r, s, msg}); };
      if (!allowed_in(cell, type)) {
        fail(Rule::RowTypeShape, std::string("shape not allowed in a ") + (type == RowType::West ? "west" : "east") +
                                     " row");
      }
      for (Color c : {cell.h, cell.v}) {
        if (c < kNoColor || c > n) fail(Rule::FloorColor, "color " + std::to_string(c) + " outside 1..n");
      }
      const Color expected = floor_color(s, n);
      if ((cell.top() != kNoColor && cell.top() != expected) ||
          (cell.bottom() != kNoColor && cell.bottom() != expected)) {
        fail(Rule::FloorColor, "only color " + std::to_string(expected) + " may touch this floor or ceiling");
      }
      if (cell.kind == TileKind::Crossing) {
        const bool ok = type == RowType::West ? cell.h < cell.v : cell.h > cell.v;
        if (!ok) {
          fail(Rule::CrossingOrder, "crossing " + std::to_string(cell.h) + "/" + std::to_string(cell.v) +
                                        (type == RowType::West ? " needs horizontal < vertical in a west row"
                                                               : " needs horizontal > vertical in an east row"));
        }
      }
    }
  }
}

void check_walls(const Tiling& t, ValidationReport& report) {
  const BoundarySpec& b = t.boundary();
  const int rows = t.rows();
  const int width = t.width();
  for (int r = 0; r < rows; ++r) {
    for (int s = 1; s < width; ++s) {
      if (t.at(r, s - 1).right() != t.at(r, s).left()) {
        report.violations.push_back({Rule::WallMismatch, r, s, "left wall disagrees with the neighbor's right wall"});
      }
    }
    if (t.at(r, 0).left() != b.left[r]) {
      report.violations.push_back({Rule::BoundaryMismatch, r, 0, "left boundary label not matched"});
    }
    if (t.at(r, width - 1).right() != b.right[r]) {
      report.violations.push_back({Rule::BoundaryMismatch, r, width - 1, "right boundary label not matched"});
    }
  }
  for (int r = 1; r < rows; ++r) {
    for (int s = 0; s < width; ++s) {
      if (t.at(r - 1, s).bottom() != t.at(r, s).top()) {
        report.violations.push_back({Rule::WallMismatch, r, s, "ceiling disagrees with the floor above"});
      }
    }
  }
  if (rows == 0) {
    if (b.top != b.bottom) {
      report.violations.push_back({Rule::BoundaryMismatch, -1, -1, "empty grid needs identical top and bottom labels"});
    }
    return;
  }
  for (int s = 0; s < width; ++s) {
    if (t.at(0, s).top() != b.top[s]) {
      report.violations.push_back({Rule::BoundaryMismatch, 0, s, "top boundary label not matched"});
    }
    if (t.at(rows - 1, s).bottom() != b.bottom[s]) {
      report.violations.push_back({Rule::BoundaryMismatch, rows - 1, s, "bottom boundary label not matched"});
    }
  }
}

enum class Side : std::uint8_t { Left, Right, Top, Bottom };

// The side a strand entering through `in` leaves from, or nullopt when the
// sub-tile has no strand on that side.
std::optional<Side> exit_side(const SubTile& cell, Side in) {
  switch (cell.kind) {
    case TileKind::Empty: return std::nullopt;
    case TileKind::Horizontal:
      if (in == Side::Left) return Side::Right;
      if (in == Side::Right) return Side::Left;
      return std::nullopt;
    case TileKind::Vertical:
      if (in == Side::Top) return Side::Bottom;
      if (in == Side::Bottom) return Side::Top;
      return std::nullopt;
    case TileKind::Crossing:
      switch (in) {
        case Side::Left: return Side::Right;
        case Side::Right: return Side::Left;
        case Side::Top: return Side::Bottom;
        case Side::Bottom: return Side::Top;
      }
      return std::nullopt;
    case TileKind::ElbowLT:
      if (in == Side::Left) return Side::Top;
      if (in == Side::Top) return Side::Left;
      return std::nullopt;
    case TileKind::ElbowRB:
      if (in == Side::Right) return Side::Bottom;
      if (in == Side::Bottom) return Side::Right;
      return std::nullopt;
    case TileKind::ElbowRT:
      if (in == Side::Right) return Side::Top;
      if (in == Side::Top) return Side::Right;
      return std::nullopt;
    case TileKind::ElbowLB:
      if (in == Side::Left) return Side::Bottom;
      if (in == Side::Bottom) return Side::Left;
      return std::nullopt;
  }
  return std::nullopt;
}

Color wall_color(const SubTile& cell, Side side) {
  switch (side) {
    case Side::Left: return cell.left();
    case Side::Right: return cell.right();
    case Side::Top: return cell.top();
    case Side::Bottom: return cell.bottom();
  }
  return kNoColor;
}

bool is_horizontal_strand(const SubTile& cell, Side in) {
  return cell.kind == TileKind::Crossing && (in == Side::Left || in == Side::Right);
}

}  // namespace

std::map<Color, PipePath> trace_pipes(const Tiling& t) {
  const int rows = t.rows();
  const int width = t.width();
  const BoundarySpec& b = t.boundary();

  struct Start {
    Color color;
    int row;
    int subcol;
    Side in;
    WallCrossing wall;
  };
  std::vector<Start> starts;
  for (int r = 0; r < rows; ++r) {
    if (b.left[r] != kNoColor) starts.push_back({b.left[r], r, 0, Side::Left, {WallCrossing::Kind::Vertical, r, 0}});
    if (b.right[r] != kNoColor) {
      starts.push_back({b.right[r], r, width - 1, Side::Right, {WallCrossing::Kind::Vertical, r, width}});
    }
  }
  for (int s = 0; s < width; ++s) {
    if (b.bottom[s] != kNoColor && rows > 0) {
      starts.push_back({b.bottom[s], rows - 1, s, Side::Bottom, {WallCrossing::Kind::Horizontal, rows, s}});
    }
  }

  // Two strand slots per cell; slot 1 is the horizontal strand of a crossing.
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(rows) * width * 2, 0);
  std::map<Color, PipePath> paths;

  for (const Start& st : starts) {
    PipePath path{st.wall};
    int r = st.row, s = st.subcol;
    Side in = st.in;
    while (true) {
      const SubTile& cell = t.at(r, s);
      if (wall_color(cell, in) != st.color) {
        throw TraceError("pipe " + std::to_string(st.color) + " is cut off at row " + std::to_string(r + 1) +
                             ", sub-column " + std::to_string(s),
                         r, s);
      }
      auto out = exit_side(cell, in);
      if (!out) throw TraceError("dangling strand at row " + std::to_string(r + 1) + ", sub-column " + std::to_string(s), r, s);
      std::size_t slot = (static_cast<std::size_t>(r) * width + s) * 2 + (is_horizontal_strand(cell, in) ? 1 : 0);
      if (visited[slot]) throw TraceError("strand traversed twice", r, s);
      visited[slot] = 1;

      if (*out == Side::Top) {
        path.push_back({WallCrossing::Kind::Horizontal, r, s});
        if (r == 0) break;
        --r;
        in = Side::Bottom;
      } else if (*out == Side::Bottom) {
        path.push_back({WallCrossing::Kind::Horizontal, r + 1, s});
        if (r == rows - 1) throw TraceError("pipe " + std::to_string(st.color) + " leaves through the bottom", r, s);
        ++r;
        in = Side::Top;
      } else if (*out == Side::Right) {
        path.push_back({WallCrossing::Kind::Vertical, r, s + 1});
        if (s == width - 1) throw TraceError("pipe " + std::to_string(st.color) + " leaves through the right", r, s);
        ++s;
        in = Side::Left;
      } else {
        path.push_back({WallCrossing::Kind::Vertical, r, s});
        if (s == 0) throw TraceError("pipe " + std::to_string(st.color) + " leaves through the left", r, s);
        --s;
        in = Side::Right;
      }
    }
    if (b.top[path.back().x] != st.color) {
      throw TraceError("pipe " + std::to_string(st.color) + " exits the top away from its label", 0, path.back().x);
    }
    if (!paths.emplace(st.color, std::move(path)).second) {
      throw TraceError("two sources share color " + std::to_string(st.color), st.row, st.subcol);
    }
  }

  for (int r = 0; r < rows; ++r) {
    for (int s = 0; s < width; ++s) {
      const SubTile& cell = t.at(r, s);
      const std::size_t base = (static_cast<std::size_t>(r) * width + s) * 2;
      const bool needs_main = !cell.is_empty();
      const bool needs_second = cell.kind == TileKind::Crossing;
      if ((needs_main && !visited[base]) || (needs_second && !visited[base + 1])) {
        throw TraceError("strand at row " + std::to_string(r + 1) + ", sub-column " + std::to_string(s) +
                             " is not part of any pipe",
                         r, s);
      }
    }
  }
  return paths;
}

ValidationReport validate_tiling(const Tiling& t) {
  ValidationReport report;
  check_dimensions(t, report);
  if (!report.ok()) return report;
  check_cells(t, report);
  check_walls(t, report);
  if (!report.ok()) return report;
  try {
    auto paths = trace_pipes(t);
    for (Color c : t.boundary().top) {
      if (c != kNoColor && !paths.count(c) && t.rows() > 0) {
        report.violations.push_back({Rule::PipeIncomplete, -1, -1, "no pipe reaches top label " + std::to_string(c)});
      }
    }
  } catch (const TraceError& e) {
    report.violations.push_back({Rule::PipeIncomplete, e.row(), e.subcol(), e.what()});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Weights

Polynomial weight_tile_level(const Tiling& t) {
  const int n = t.n();
  std::set<std::pair<int, int>> crossed;  // (row, x) of vertical walls
  for (const auto& [color, path] : trace_pipes(t)) {
    for (const WallCrossing& w : path) {
      if (w.kind == WallCrossing::Kind::Vertical) crossed.emplace(w.row, w.x);
    }
  }
  ExponentVector e(n, 0);
  for (int r = 0; r < t.rows(); ++r) {
    int count = 0;
    for (int col = 0; col <= t.N(); ++col) {
      const bool touched = crossed.count({r, (col + 1) * n}) > 0;
      if (touched == (t.tau()[r] == RowType::West)) ++count;
    }
    e[t.row_label(r) - 1] += count;
  }
  return Polynomial::monomial(std::move(e));
}

Color subtile_weight_variable(const Tiling& t, int row, int subcol) {
  if (!is_last_subcolumn(subcol, t.n())) return kNoColor;
  const TileKind k = t.at(row, subcol).kind;
  bool weighted = false;
  if (t.tau()[row] == RowType::West) {
    weighted = k == TileKind::Horizontal || k == TileKind::Crossing || k == TileKind::ElbowRB;
  } else {
    weighted = k == TileKind::Empty || k == TileKind::Vertical || k == TileKind::ElbowLB;
  }
  return weighted ? t.row_label(row) : kNoColor;
}

Polynomial weight_subtile_level(const Tiling& t) {
  ExponentVector e(t.n(), 0);
  for (int r = 0; r < t.rows(); ++r) {
    for (int s = 0; s < t.width(); ++s) {
      Color c = subtile_weight_variable(t, r, s);
      if (c != kNoColor) ++e[c - 1];
    }
  }
  return Polynomial::monomial(std::move(e));
}

}  // namespace hpd
