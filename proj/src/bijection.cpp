#include "hpd/bijection.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hpd {

StripOrder opposite(StripOrder order) { return order == StripOrder::WE ? StripOrder::EW : StripOrder::WE; }

const char* to_string(StripOrder order) { return order == StripOrder::WE ? "WE" : "EW"; }

int StripBoundary::upper_index_of(RowType type) const {
  const bool west_on_top = order == StripOrder::WE;
  return (type == RowType::West) == west_on_top ? 0 : 1;
}

Color StripBoundary::left_of(int row) const { return row == upper_index_of(RowType::West) ? a : kNoColor; }

Color StripBoundary::right_of(int row) const { return row == upper_index_of(RowType::East) ? b : kNoColor; }

Strip extract_strip(const Tiling& t, int row) {
  if (row < 0 || row + 1 >= t.rows()) throw StripError("strip row out of range");
  const RowType upper = t.tau()[row];
  if (upper == t.tau()[row + 1]) throw StripError("strip rows have the same type");
  Strip strip;
  StripBoundary& b = strip.boundary;
  b.n = t.n();
  b.N = t.N();
  b.order = upper == RowType::West ? StripOrder::WE : StripOrder::EW;
  const int west = upper == RowType::West ? row : row + 1;
  const int east = upper == RowType::West ? row + 1 : row;
  b.a = t.boundary().left[west];
  b.b = t.boundary().right[east];
  const int w = t.width();
  b.top.resize(w);
  b.bottom.resize(w);
  for (int r = 0; r < 2; ++r) strip.rows[r].resize(w);
  for (int u = 0; u < w; ++u) {
    strip.rows[0][u] = t.at(row, u);
    strip.rows[1][u] = t.at(row + 1, u);
    b.top[u] = t.at(row, u).top();
    b.bottom[u] = t.at(row + 1, u).bottom();
  }
  return strip;
}

// ---------------------------------------------------------------------------
// Analysis

StripAnalysis analyze_strip(const StripBoundary& b) {
  const int w = b.width();
  if (b.n < 2) throw StripError("a strip needs at least two colors");
  if (static_cast<int>(b.top.size()) != w || static_cast<int>(b.bottom.size()) != w) {
    throw StripError("strip boundary length differs from (N+1)n");
  }
  if (b.a == kNoColor || b.b == kNoColor || b.a == b.b) throw StripError("strip labels must be two distinct colors");

  StripAnalysis an;
  an.source[b.a] = kMinusInfinity;
  an.source[b.b] = kPlusInfinity;
  for (int u = 0; u < w; ++u) {
    const Color c = b.bottom[u];
    if (c == kNoColor) continue;
    if (c != floor_color(u, b.n)) throw StripError("bottom color at wrong sub-position " + std::to_string(u));
    if (!an.source.emplace(c, u).second) throw StripError("color " + std::to_string(c) + " enters the strip twice");
  }
  for (int u = 0; u < w; ++u) {
    const Color c = b.top[u];
    if (c == kNoColor) continue;
    if (c != floor_color(u, b.n)) throw StripError("top color at wrong sub-position " + std::to_string(u));
    if (!an.source.count(c)) throw StripError("color " + std::to_string(c) + " leaves without entering");
    if (!an.target.emplace(c, u).second) throw StripError("color " + std::to_string(c) + " leaves the strip twice");
  }
  if (an.target.size() != an.source.size()) throw StripError("some color never leaves the strip");

  an.frozen.assign(w, false);
  for (const auto& [c, t] : an.target) {
    const long s = an.source.at(c);
    const long lo = std::max<long>(std::min(s, t) + 1, 0);
    const long hi = std::min<long>(std::max(s, t), w);  // exclusive
    for (long u = lo; u < hi; ++u) an.frozen[u] = true;
  }

  auto is_critical = [&](int u) { return !an.frozen[u] && (b.top[u] != kNoColor || b.bottom[u] != kNoColor); };
  for (int u = 0; u < w; ++u) {
    if (!is_critical(u)) continue;
    const bool left_open = u > 0 && !an.frozen[u - 1];
    const bool right_open = u + 1 < w && !an.frozen[u + 1];
    CriticalKind kind = left_open ? (right_open ? CriticalKind::Middle : CriticalKind::RightEnd)
                                  : (right_open ? CriticalKind::LeftEnd : CriticalKind::Isolated);
    an.criticals.push_back({u, kind, floor_color(u, b.n)});
  }

  for (int u = 0; u < w;) {
    if (an.frozen[u]) {
      ++u;
      continue;
    }
    int end = u;
    while (end + 1 < w && !an.frozen[end + 1]) ++end;
    if (!is_critical(u) || !is_critical(end)) {
      throw StripError("unfrozen run [" + std::to_string(u) + ", " + std::to_string(end) +
                       "] is not bounded by critical sub-columns");
    }
    MaximalInterval iv;
    for (int v = u; v <= end; ++v) {
      if (is_critical(v)) iv.criticals.push_back(v);
    }
    for (std::size_t i = 1; i < iv.criticals.size(); ++i) {
      const int gap = iv.criticals[i] - iv.criticals[i - 1] - 1;
      iv.gap_sizes.push_back(gap);
      iv.bounds.push_back(gap / b.n);
    }
    for (int v = u; v < end; ++v) iv.last_subcolumns += is_last_subcolumn(v, b.n) ? 1 : 0;
    an.intervals.push_back(std::move(iv));
    u = end + 1;
  }
  return an;
}

// ---------------------------------------------------------------------------
// Frozen sub-columns

std::pair<SubTile, SubTile> frozen_cells(const FrozenPattern& p, StripOrder order) {
  const Color c = p.c;
  const Color o = p.other;
  using T = SubTile;
  const bool we = order == StripOrder::WE;
  switch (p.index) {
    case 1: return we ? std::pair{T::crossing(c, o), T::elbow_rt(o)} : std::pair{T::elbow_rt(o), T::horizontal(c)};
    case 2: return we ? std::pair{T::crossing(c, o), T::vertical(o)} : std::pair{T::vertical(o), T::crossing(c, o)};
    case 3: return we ? std::pair{T::horizontal(c), T::elbow_lb(o)} : std::pair{T::elbow_lb(o), T::crossing(c, o)};
    case 4: return we ? std::pair{T::elbow_rb(o), T::crossing(c, o)} : std::pair{T::horizontal(c), T::elbow_rb(o)};
    case 5: return we ? std::pair{T::vertical(o), T::crossing(c, o)} : std::pair{T::crossing(c, o), T::vertical(o)};
    case 6: return we ? std::pair{T::elbow_lt(o), T::horizontal(c)} : std::pair{T::crossing(c, o), T::elbow_lt(o)};
    case 7: return we ? std::pair{T::horizontal(c), T::horizontal(o)} : std::pair{T::horizontal(o), T::horizontal(c)};
    case 8: return we ? std::pair{T::horizontal(o), T::horizontal(c)} : std::pair{T::horizontal(c), T::horizontal(o)};
    case 9: return we ? std::pair{T::horizontal(c), T::empty()} : std::pair{T::empty(), T::horizontal(c)};
    case 10: return we ? std::pair{T::empty(), T::horizontal(c)} : std::pair{T::horizontal(c), T::empty()};
    case 11: {
      const Color d = p.through;
      return we ? std::pair{T::crossing(c, d), T::crossing(o, d)} : std::pair{T::crossing(o, d), T::crossing(c, d)};
    }
    default: throw StripError("frozen pattern index out of range");
  }
}

namespace {

bool pattern_colors_ok(const FrozenPattern& p) {
  if (p.c == kNoColor) return false;
  if (p.index <= 3) return p.other > p.c;
  if (p.index <= 6) return p.other != kNoColor && p.other < p.c;
  if (p.index <= 8) return p.other > p.c;
  if (p.index <= 10) return p.other == kNoColor;
  return p.c < p.through && p.through < p.other;
}

}  // namespace

std::optional<FrozenPattern> classify_frozen(const SubTile& upper, const SubTile& lower, StripOrder order) {
  std::set<Color> colors{kNoColor};
  for (const SubTile& t : {upper, lower}) {
    colors.insert(t.h);
    colors.insert(t.v);
  }
  for (int index = 1; index <= 11; ++index) {
    for (Color c : colors) {
      for (Color o : colors) {
        for (Color d : colors) {
          if ((index == 11) != (d != kNoColor)) continue;
          const FrozenPattern p{index, c, o, d};
          if (!pattern_colors_ok(p)) continue;
          if (frozen_cells(p, order) == std::pair{upper, lower}) return p;
        }
      }
    }
  }
  return std::nullopt;
}

FrozenPattern frozen_pattern_at(const StripBoundary& b, const StripAnalysis& an, int u) {
  Color west_pipe = kNoColor;
  Color east_pipe = kNoColor;
  for (const auto& [c, t] : an.target) {
    const long s = an.source.at(c);
    if (!(std::min(s, t) < u && u < std::max(s, t))) continue;
    Color& slot = s < t ? west_pipe : east_pipe;
    if (slot != kNoColor) throw StripError("two pipes run along one row at sub-column " + std::to_string(u));
    slot = c;
  }
  const Color top = b.top[u];
  const Color bottom = b.bottom[u];
  const Color q = floor_color(u, b.n);
  auto fail = [&]() -> FrozenPattern {
    throw StripError("no frozen pattern fits sub-column " + std::to_string(u));
  };
  if (west_pipe != kNoColor && east_pipe != kNoColor) {
    if (top == q && bottom == q) {
      if (!(west_pipe < q && q < east_pipe)) return fail();
      return {11, west_pipe, east_pipe, q};
    }
    if (top != kNoColor || bottom != kNoColor) return fail();
    const Color c = std::min(west_pipe, east_pipe);
    const Color f = std::max(west_pipe, east_pipe);
    return {c == west_pipe ? 7 : 8, c, f};
  }
  if (west_pipe != kNoColor) {
    const Color c = west_pipe;
    if (top == kNoColor && bottom == kNoColor) return {9, c, kNoColor};
    if (q <= c) return fail();
    if (top == q && bottom == kNoColor) return {1, c, q};
    if (top == q && bottom == q) return {2, c, q};
    return {3, c, q};
  }
  if (east_pipe != kNoColor) {
    const Color c = east_pipe;
    if (top == kNoColor && bottom == kNoColor) return {10, c, kNoColor};
    if (q >= c) return fail();
    if (top == kNoColor && bottom == q) return {4, c, q};
    if (top == q && bottom == q) return {5, c, q};
    return {6, c, q};
  }
  return fail();
}

// ---------------------------------------------------------------------------
// Intervals

namespace {

// How the pipe of a critical sub-column meets it.
enum class Role : std::uint8_t {
  TopFar,     // leaves the top here, enters far away on the side it arrives from
  BottomFar,  // enters the bottom here, leaves far away
  Both,       // enters and leaves here
};

struct CriticalRole {
  Role role;
  bool other_left;  // the far endpoint lies to the left (meaningless for Both)
};

CriticalRole role_at(const StripBoundary& b, const StripAnalysis& an, int m) {
  const Color c = floor_color(m, b.n);
  const long s = an.source.at(c);
  const long t = an.target.at(c);
  if (s == m && t == m) return {Role::Both, false};
  if (t == m) return {Role::TopFar, s < m};
  return {Role::BottomFar, t < m};
}

class StripBuilder {
 public:
  explicit StripBuilder(Strip& strip) : strip_(strip), set_(2, std::vector<bool>(strip.boundary.width(), false)) {}

  void put(int row, int u, SubTile cell) {
    if (set_[row][u]) throw StripError("strip cell " + std::to_string(u) + " assigned twice");
    set_[row][u] = true;
    strip_.rows[row][u] = cell;
  }
  void put(int u, std::pair<SubTile, SubTile> cells) {
    put(0, u, cells.first);
    put(1, u, cells.second);
  }

 private:
  Strip& strip_;
  std::vector<std::vector<bool>> set_;
};

// Whether critical m_i of an interval owns a U-turn choice in an adjacent gap.
bool has_choice(StripOrder order, const MaximalInterval& iv, std::size_t i) {
  return order == StripOrder::WE ? i >= 1 : i + 1 < iv.criticals.size();
}

// U-turn choices must belong to pipes whose far endpoint is on the side of
// the gap they use.
void check_choice_role(StripOrder order, const CriticalRole& r, int m) {
  if (r.role == Role::Both) return;
  const bool ok = order == StripOrder::WE ? !r.other_left : r.other_left;
  if (!ok) throw StripError("critical sub-column " + std::to_string(m) + " cannot turn inside its interval");
}

void encode_interval(const StripBoundary& b, const StripAnalysis& an, const MaximalInterval& iv,
                     const std::vector<int>& code, StripBuilder& out) {
  using T = SubTile;
  const int n = b.n;
  const StripOrder order = b.order;
  const bool we = order == StripOrder::WE;
  if (static_cast<int>(code.size()) != iv.k()) throw StripError("code length differs from the interval's k");

  std::vector<bool> used(iv.criticals.size(), false);
  for (std::size_t i = 0; i < iv.criticals.size(); ++i) {
    const int m = iv.criticals[i];
    const Color c = floor_color(m, n);
    const CriticalRole r = role_at(b, an, m);
    int p = m;
    if (has_choice(order, iv, i)) {
      check_choice_role(order, r, m);
      const std::size_t gap = we ? i - 1 : i;
      const int j = code[gap];
      if (j < 0 || j > iv.bounds[gap]) throw StripError("code entry out of range");
      p = we ? m - n * j : m + n * j;
      used[i] = true;
    }
    const bool turns_here = p == m;

    // Pipes arriving from beyond the frozen side.
    const bool arrives = r.role != Role::Both && (we ? r.other_left : !r.other_left);
    if (arrives) {
      if (we) {
        out.put(m, r.role == Role::TopFar ? std::pair{T::elbow_lt(c), T::empty()} : std::pair{T::empty(), T::elbow_lb(c)});
      } else {
        out.put(m, r.role == Role::TopFar ? std::pair{T::elbow_rt(c), T::empty()} : std::pair{T::empty(), T::elbow_rb(c)});
      }
      continue;
    }

    if (we) {
      switch (r.role) {
        case Role::TopFar: out.put(m, turns_here ? std::pair{T::vertical(c), T::elbow_rt(c)} : std::pair{T::elbow_lt(c), T::horizontal(c)}); break;
        case Role::BottomFar: out.put(m, turns_here ? std::pair{T::elbow_rb(c), T::vertical(c)} : std::pair{T::horizontal(c), T::elbow_lb(c)}); break;
        case Role::Both: out.put(m, turns_here ? std::pair{T::vertical(c), T::vertical(c)} : std::pair{T::elbow_lt(c), T::elbow_lb(c)}); break;
      }
      if (!turns_here) {
        for (int u = p + 1; u < m; ++u) out.put(u, {T::horizontal(c), T::horizontal(c)});
        out.put(p, {T::elbow_rb(c), T::elbow_rt(c)});
      }
    } else {
      switch (r.role) {
        case Role::TopFar: out.put(m, turns_here ? std::pair{T::vertical(c), T::elbow_lt(c)} : std::pair{T::elbow_rt(c), T::horizontal(c)}); break;
        case Role::BottomFar: out.put(m, turns_here ? std::pair{T::elbow_lb(c), T::vertical(c)} : std::pair{T::horizontal(c), T::elbow_rb(c)}); break;
        case Role::Both: out.put(m, turns_here ? std::pair{T::vertical(c), T::vertical(c)} : std::pair{T::elbow_rt(c), T::elbow_rb(c)}); break;
      }
      if (!turns_here) {
        for (int u = m + 1; u < p; ++u) out.put(u, {T::horizontal(c), T::horizontal(c)});
        out.put(p, {T::elbow_lb(c), T::elbow_lt(c)});
      }
    }
  }
}

}  // namespace

Strip encode_strip(const StripBoundary& boundary, const SwapCode& code) {
  const StripAnalysis an = analyze_strip(boundary);
  if (code.size() != an.intervals.size()) throw StripError("code has the wrong number of intervals");
  Strip strip;
  strip.boundary = boundary;
  for (auto& row : strip.rows) row.assign(boundary.width(), SubTile::empty());
  StripBuilder out(strip);
  for (int u = 0; u < boundary.width(); ++u) {
    if (an.frozen[u]) out.put(u, frozen_cells(frozen_pattern_at(boundary, an, u), boundary.order));
  }
  for (std::size_t i = 0; i < an.intervals.size(); ++i) encode_interval(boundary, an, an.intervals[i], code[i], out);
  return strip;
}

SwapCode decode_strip(const Strip& strip) {
  const StripBoundary& b = strip.boundary;
  const StripAnalysis an = analyze_strip(b);
  const bool we = b.order == StripOrder::WE;
  SwapCode code;
  for (const MaximalInterval& iv : an.intervals) {
    std::vector<int> js;
    for (int g = 0; g < iv.k(); ++g) {
      const int m = we ? iv.criticals[g + 1] : iv.criticals[g];
      const Color c = floor_color(m, b.n);
      std::optional<int> found;
      for (int j = 0; j <= iv.bounds[g]; ++j) {
        const int p = we ? m - b.n * j : m + b.n * j;
        if (strip.rows[0][p].bottom() == c) {
          found = j;
          break;
        }
      }
      if (!found) throw StripError("pipe " + std::to_string(c) + " does not turn inside its gap");
      js.push_back(*found);
    }
    code.push_back(std::move(js));
  }
  if (encode_strip(b, code) != strip) throw StripError("strip does not match the shape its boundary forces");
  return code;
}

// ---------------------------------------------------------------------------
// Moves on tilings

Tiling flip_bottom_row(const Tiling& t) {
  if (t.rows() == 0) throw ModelError("no bottom row to flip");
  if (t.boundary().is_skew()) throw ModelError("cannot flip the bottom row of a skew grid");
  const int r = t.rows() - 1;
  const Color c = t.row_label(r);
  const bool west = t.tau()[r] == RowType::West;
  const int w = t.width();

  int turn = -1;
  for (int u = 0; u < w; ++u) {
    if (t.at(r, u).kind == (west ? TileKind::ElbowLT : TileKind::ElbowRT)) turn = u;
  }
  if (turn < 0) throw ModelError("bottom row has no turning elbow");
  auto expected = [&](int u, bool to_west) {
    if (u == turn) return to_west ? SubTile::elbow_lt(c) : SubTile::elbow_rt(c);
    return (u < turn) == to_west ? SubTile::horizontal(c) : SubTile::empty();
  };
  for (int u = 0; u < w; ++u) {
    if (t.at(r, u) != expected(u, west)) throw ModelError("bottom row carries more than its own pipe");
  }

  BoundarySpec b = t.boundary();
  std::swap(b.left[r], b.right[r]);
  std::vector<RowType> tau = t.tau();
  tau[r] = west ? RowType::East : RowType::West;
  Tiling out(b, tau, t.cells());
  for (int u = 0; u < w; ++u) out.at(r, u) = expected(u, !west);
  return out;
}

Tiling swap_adjacent(const Tiling& t, int row) {
  const Strip source = extract_strip(t, row);
  const SwapCode code = decode_strip(source);
  StripBoundary target = source.boundary;
  target.order = opposite(target.order);
  const Strip image = encode_strip(target, code);

  BoundarySpec b = t.boundary();
  std::swap(b.left[row], b.left[row + 1]);
  std::swap(b.right[row], b.right[row + 1]);
  std::vector<RowType> tau = t.tau();
  std::swap(tau[row], tau[row + 1]);
  Tiling out(b, tau, t.cells());
  for (int u = 0; u < t.width(); ++u) {
    out.at(row, u) = image.rows[0][u];
    out.at(row + 1, u) = image.rows[1][u];
  }
  return out;
}

std::vector<Move> transport_schedule(const std::vector<RowType>& from, const std::vector<RowType>& to) {
  if (from.size() != to.size()) throw ModelError("row type words differ in length");
  std::vector<RowType> cur = from;
  std::vector<Move> moves;
  const int rows = static_cast<int>(cur.size());
  for (int i = 0; i < rows; ++i) {
    if (cur[i] == to[i]) continue;
    int j = i + 1;
    while (j < rows && cur[j] != to[i]) ++j;
    if (j == rows) {
      j = rows - 1;
      cur[j] = to[i];
      moves.push_back({Move::Kind::FlipBottom, j});
    }
    for (int k = j - 1; k >= i; --k) {
      std::swap(cur[k], cur[k + 1]);
      moves.push_back({Move::Kind::Swap, k});
    }
  }
  return moves;
}

Tiling apply_move(const Tiling& t, const Move& move) {
  if (move.kind == Move::Kind::FlipBottom) {
    if (move.row != t.rows() - 1) throw ModelError("flip must act on the bottom row");
    return flip_bottom_row(t);
  }
  return swap_adjacent(t, move.row);
}

Tiling transport(const Tiling& t, const std::vector<RowType>& target_tau) {
  Tiling cur = t;
  for (const Move& m : transport_schedule(t.tau(), target_tau)) cur = apply_move(cur, m);
  return cur;
}

}  // namespace hpd
