#include "hpd/io.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <vector>

namespace hpd {

LexicalError::LexicalError(const std::string& what, int line, int column)
    : ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ValidationError::ValidationError(ValidationReport report)
    : ParseError("invalid tiling:\n" + report.to_string()), report_(std::move(report)) {}

// ---------------------------------------------------------------------------
// Serialization

std::string token_of(const SubTile& cell) {
  const std::string c = std::to_string(cell.h);
  switch (cell.kind) {
    case TileKind::Empty: return ".";
    case TileKind::Vertical: return "|" + c;
    case TileKind::Horizontal: return "-" + c;
    case TileKind::Crossing: return "+" + c + "/" + std::to_string(cell.v);
    case TileKind::ElbowLT: return "J" + c;
    case TileKind::ElbowRB: return "F" + c;
    case TileKind::ElbowRT: return "L" + c;
    case TileKind::ElbowLB: return "G" + c;
  }
  return "?";
}

std::string serialize(const Tiling& t) {
  const BoundarySpec& b = t.boundary();
  std::string out = "HPD v1\n";
  out += "n=" + std::to_string(b.n) + " N=" + std::to_string(b.N) + " tau=" + tau_to_string(t.tau()) +
         " alpha=" + b.alpha.to_string();
  if (b.beta) out += " beta=" + b.beta->to_string() + " a=" + std::to_string(b.offset);
  out += '\n';
  for (int r = 0; r < t.rows(); ++r) {
    for (int s = 0; s < t.width(); ++s) {
      if (s) out += ' ';
      out += token_of(t.at(r, s));
    }
    out += '\n';
  }
  return out;
}

namespace {

struct Line {
  std::string_view text;
  int number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back({text.substr(pos, end - pos), number++});
    pos = end + 1;
  }
  return lines;
}

int parse_int(std::string_view s, const Line& line, std::size_t col) {
  int value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || value < 0) {
    throw LexicalError("expected a nonnegative integer, got '" + std::string(s) + "'", line.number,
                       static_cast<int>(col) + 1);
  }
  return value;
}

Composition parse_comp(std::string_view s, const Line& line, std::size_t col) {
  std::vector<int> parts;
  if (s.empty()) return Composition(parts);
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::size_t len = comma == std::string_view::npos ? s.size() - pos : comma - pos;
    parts.push_back(parse_int(s.substr(pos, len), line, col + pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

SubTile parse_token(std::string_view tok, const Line& line, std::size_t col) {
  auto color = [&](std::string_view s, std::size_t offset) {
    int c = parse_int(s, line, col + offset);
    if (c == 0) throw LexicalError("colors start at 1", line.number, static_cast<int>(col + offset) + 1);
    return c;
  };
  if (tok == ".") return SubTile::empty();
  if (tok.size() < 2) throw LexicalError("unknown token '" + std::string(tok) + "'", line.number, static_cast<int>(col) + 1);
  std::string_view rest = tok.substr(1);
  switch (tok[0]) {
    case '|': return SubTile::vertical(color(rest, 1));
    case '-': return SubTile::horizontal(color(rest, 1));
    case 'J': return SubTile::elbow_lt(color(rest, 1));
    case 'F': return SubTile::elbow_rb(color(rest, 1));
    case 'L': return SubTile::elbow_rt(color(rest, 1));
    case 'G': return SubTile::elbow_lb(color(rest, 1));
    case '+': {
      std::size_t slash = rest.find('/');
      if (slash == std::string_view::npos) {
        throw LexicalError("crossing token needs h/v", line.number, static_cast<int>(col) + 1);
      }
      return SubTile::crossing(color(rest.substr(0, slash), 1), color(rest.substr(slash + 1), slash + 2));
    }
    default:
      throw LexicalError("unknown token '" + std::string(tok) + "'", line.number, static_cast<int>(col) + 1);
  }
}

}  // namespace

Tiling parse_tiling(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines[0].text != "HPD v1") throw LexicalError("expected 'HPD v1'", 1, 1);
  if (lines.size() < 2) throw LexicalError("missing header line", 2, 1);

  const Line& header = lines[1];
  static constexpr std::array<std::string_view, 6> kKeys = {"n", "N", "tau", "alpha", "beta", "a"};
  std::array<std::optional<std::pair<std::string_view, std::size_t>>, 6> fields;
  std::size_t pos = 0;
  std::size_t key_index = 0;
  while (pos <= header.text.size()) {
    std::size_t end = header.text.find(' ', pos);
    if (end == std::string_view::npos) end = header.text.size();
    std::string_view field = header.text.substr(pos, end - pos);
    std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw LexicalError("expected key=value", header.number, static_cast<int>(pos) + 1);
    }
    std::string_view key = field.substr(0, eq);
    while (key_index < kKeys.size() && kKeys[key_index] != key) ++key_index;
    if (key_index == kKeys.size()) {
      throw LexicalError("unexpected key '" + std::string(key) + "'", header.number, static_cast<int>(pos) + 1);
    }
    fields[key_index] = std::make_pair(field.substr(eq + 1), pos + eq + 1);
    ++key_index;
    pos = end + 1;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    if (!fields[k]) throw LexicalError("missing '" + std::string(kKeys[k]) + "'", header.number, 1);
  }
  if (fields[4].has_value() != fields[5].has_value()) {
    throw LexicalError("beta and a must appear together", header.number, 1);
  }

  const int n = parse_int(fields[0]->first, header, fields[0]->second);
  const int N = parse_int(fields[1]->first, header, fields[1]->second);
  std::vector<RowType> tau;
  try {
    tau = parse_tau(fields[2]->first);
  } catch (const ModelError& e) {
    throw LexicalError(e.what(), header.number, static_cast<int>(fields[2]->second) + 1);
  }
  Composition alpha = parse_comp(fields[3]->first, header, fields[3]->second);

  BoundarySpec boundary;
  try {
    if (static_cast<int>(alpha.size()) != n) throw ModelError("alpha has " + std::to_string(alpha.size()) + " parts, n = " + std::to_string(n));
    if (fields[4]) {
      Composition beta = parse_comp(fields[4]->first, header, fields[4]->second);
      int a = parse_int(fields[5]->first, header, fields[5]->second);
      boundary = build_skew_boundary(alpha, beta, a, tau, N);
    } else {
      boundary = build_boundary(alpha, tau, N);
    }
  } catch (const ModelError& e) {
    throw DimensionError(std::string("inconsistent header: ") + e.what());
  }

  // Trailing empty lines are tolerated; anything else must be a grid row.
  std::size_t last = lines.size();
  while (last > 2 && lines[last - 1].text.empty()) --last;
  const int rows = static_cast<int>(tau.size());
  if (static_cast<int>(last) - 2 != rows) {
    throw DimensionError("expected " + std::to_string(rows) + " grid rows, found " + std::to_string(last - 2));
  }

  Tiling t(boundary, tau);
  for (int r = 0; r < rows; ++r) {
    const Line& line = lines[2 + r];
    std::size_t p = 0;
    int s = 0;
    while (p < line.text.size()) {
      std::size_t end = line.text.find(' ', p);
      if (end == std::string_view::npos) end = line.text.size();
      if (end == p) throw LexicalError("unexpected space", line.number, static_cast<int>(p) + 1);
      SubTile cell = parse_token(line.text.substr(p, end - p), line, p);
      if (s >= t.width()) {
        throw DimensionError("row " + std::to_string(r + 1) + " has more than " + std::to_string(t.width()) + " tokens");
      }
      t.at(r, s++) = cell;
      p = end + 1;
    }
    if (s != t.width()) {
      throw DimensionError("row " + std::to_string(r + 1) + " has " + std::to_string(s) + " tokens, expected " +
                           std::to_string(t.width()));
    }
  }

  ValidationReport report = validate_tiling(t);
  if (!report.ok()) throw ValidationError(std::move(report));
  return t;
}

// ---------------------------------------------------------------------------
// Drawing

namespace {

char color_char(Color c) {
  if (c <= 0) return ' ';
  if (c < 10) return static_cast<char>('0' + c);
  if (c < 36) return static_cast<char>('a' + c - 10);
  return '#';
}

std::array<std::string, 3> glyph(const SubTile& cell) {
  const char c = color_char(cell.h);
  auto s = [](char a, char b, char d) { return std::string{a, b, d}; };
  switch (cell.kind) {
    case TileKind::Empty: return {"   ", "   ", "   "};
    case TileKind::Vertical: return {s(' ', c, ' '), s(' ', c, ' '), s(' ', c, ' ')};
    case TileKind::Horizontal: return {"   ", s(c, c, c), "   "};
    case TileKind::Crossing: {
      const char v = color_char(cell.v);
      return {s(' ', v, ' '), s(c, '+', c), s(' ', v, ' ')};
    }
    case TileKind::ElbowLT: return {s(' ', c, ' '), s(c, c, ' '), "   "};
    case TileKind::ElbowRB: return {"   ", s(' ', c, c), s(' ', c, ' ')};
    case TileKind::ElbowRT: return {s(' ', c, ' '), s(' ', c, c), "   "};
    case TileKind::ElbowLB: return {"   ", s(c, c, ' '), s(' ', c, ' ')};
  }
  return {"???", "???", "???"};
}

std::string boundary_label_line(const Tiling& t, const std::vector<Color>& labels) {
  std::string line = " ";
  for (int s = 0; s < t.width(); ++s) {
    line += ' ';
    line += color_char(labels[s]);
    line += ' ';
    if (is_last_subcolumn(s, t.n())) line += ' ';
  }
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

}  // namespace

std::string render_ascii(const Tiling& t) {
  const int n = t.n();
  std::ostringstream out;
  out << boundary_label_line(t, t.boundary().top) << '\n';
  for (int r = 0; r < t.rows(); ++r) {
    std::array<std::string, 3> lines;
    const Color left = t.boundary().left[r];
    lines[0] = " ";
    lines[1] = std::string(1, left == kNoColor ? ' ' : color_char(left));
    lines[2] = " ";
    int weight = 0;
    for (int s = 0; s < t.width(); ++s) {
      auto g = glyph(t.at(r, s));
      for (int k = 0; k < 3; ++k) lines[k] += g[k];
      if (s % n == n - 1) {
        const Color right = t.at(r, s).right();
        const bool dot = subtile_weight_variable(t, r, s) != kNoColor;
        weight += dot;
        lines[0] += ':';
        lines[1] += dot ? '*' : (right != kNoColor ? color_char(right) : ':');
        lines[2] += ':';
      }
    }
    const Color right = t.boundary().right[r];
    lines[1] += right == kNoColor ? ' ' : color_char(right);
    lines[1] += "  ";
    lines[1] += to_char(t.tau()[r]);
    lines[1] += "  x" + std::to_string(t.row_label(r)) + "^" + std::to_string(weight);
    for (auto& l : lines) {
      while (!l.empty() && l.back() == ' ') l.pop_back();
      out << l << '\n';
    }
  }
  if (t.boundary().is_skew()) out << boundary_label_line(t, t.boundary().bottom) << '\n';
  return out.str();
}

namespace {

constexpr int kCell = 20;
constexpr int kMargin = 30;

const char* pipe_color(Color c) {
  static constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                                           "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};
  return kPalette[(c - 1) % kPalette.size()];
}

}  // namespace

std::string render_svg(const Tiling& t) {
  const int n = t.n();
  const int w = t.width() * kCell + 2 * kMargin;
  const int h = t.rows() * kCell + 2 * kMargin;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";

  const int x0 = kMargin, y0 = kMargin;
  const int gw = t.width() * kCell, gh = t.rows() * kCell;
  // Sub-column guides, then tile and row walls.
  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int s = 1; s < t.width(); ++s) {
    if (s % n == 0) continue;
    out << "<line x1=\"" << x0 + s * kCell << "\" y1=\"" << y0 << "\" x2=\"" << x0 + s * kCell << "\" y2=\""
        << y0 + gh << "\"/>\n";
  }
  out << "</g>\n<g stroke=\"black\" stroke-width=\"1\">\n";
  for (int col = 0; col <= t.N() + 1; ++col) {
    const int x = x0 + col * n * kCell;
    out << "<line x1=\"" << x << "\" y1=\"" << y0 << "\" x2=\"" << x << "\" y2=\"" << y0 + gh << "\"/>\n";
  }
  for (int r = 0; r <= t.rows(); ++r) {
    const int y = y0 + r * kCell;
    out << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x0 + gw << "\" y2=\"" << y << "\"/>\n";
  }
  out << "</g>\n";

  // Pipes: each strand drawn from the cell center to the walls it touches.
  out << "<g stroke-width=\"3\" fill=\"none\" stroke-linecap=\"round\">\n";
  for (int r = 0; r < t.rows(); ++r) {
    for (int s = 0; s < t.width(); ++s) {
      const SubTile& cell = t.at(r, s);
      if (cell.is_empty()) continue;
      const int cx = x0 + s * kCell + kCell / 2, cy = y0 + r * kCell + kCell / 2;
      const int l = cx - kCell / 2, rt = cx + kCell / 2, tp = cy - kCell / 2, bt = cy + kCell / 2;
      auto seg = [&](Color c, int ax, int ay, int bx, int by) {
        out << "<polyline points=\"" << ax << ',' << ay << ' ' << cx << ',' << cy << ' ' << bx << ',' << by
            << "\" stroke=\"" << pipe_color(c) << "\"/>\n";
      };
      switch (cell.kind) {
        case TileKind::Horizontal: seg(cell.h, l, cy, rt, cy); break;
        case TileKind::Vertical: seg(cell.h, cx, tp, cx, bt); break;
        case TileKind::Crossing:
          seg(cell.h, l, cy, rt, cy);
          seg(cell.v, cx, tp, cx, bt);
          break;
        case TileKind::ElbowLT: seg(cell.h, l, cy, cx, tp); break;
        case TileKind::ElbowRB: seg(cell.h, rt, cy, cx, bt); break;
        case TileKind::ElbowRT: seg(cell.h, rt, cy, cx, tp); break;
        case TileKind::ElbowLB: seg(cell.h, l, cy, cx, bt); break;
        case TileKind::Empty: break;
      }
    }
  }
  out << "</g>\n";

  // Weight dots on tile walls.
  out << "<g fill=\"black\">\n";
  for (int r = 0; r < t.rows(); ++r) {
    for (int s = n - 1; s < t.width(); s += n) {
      if (subtile_weight_variable(t, r, s) == kNoColor) continue;
      out << "<circle cx=\"" << x0 + (s + 1) * kCell << "\" cy=\"" << y0 + r * kCell + kCell / 2 << "\" r=\"4\"/>\n";
    }
  }
  out << "</g>\n";

  // Boundary labels.
  out << "<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n";
  const BoundarySpec& b = t.boundary();
  for (int s = 0; s < t.width(); ++s) {
    const int cx = x0 + s * kCell + kCell / 2;
    if (b.top[s] != kNoColor) out << "<text x=\"" << cx << "\" y=\"" << y0 - 8 << "\">" << b.top[s] << "</text>\n";
    if (b.bottom[s] != kNoColor) {
      out << "<text x=\"" << cx << "\" y=\"" << y0 + gh + 18 << "\">" << b.bottom[s] << "</text>\n";
    }
  }
  for (int r = 0; r < t.rows(); ++r) {
    const int cy = y0 + r * kCell + kCell / 2 + 4;
    if (b.left[r] != kNoColor) out << "<text x=\"" << x0 - 12 << "\" y=\"" << cy << "\">" << b.left[r] << "</text>\n";
    if (b.right[r] != kNoColor) {
      out << "<text x=\"" << x0 + gw + 12 << "\" y=\"" << cy << "\">" << b.right[r] << "</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace hpd
