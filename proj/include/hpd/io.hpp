// Text form of tilings and ASCII/SVG drawings.
//
// Document layout:
//   HPD v1
//   n=4 N=3 tau=WEEW alpha=1,3,0,2            (skew: ... beta=3,1 a=1)
//   -1 -1 +1/3 -1 J1 . F2 -2 ...              (one line per row)
//
// Tokens: "." empty, "|c" vertical, "-c" horizontal, "+h/v" crossing,
// "Jc" left-ceiling elbow, "Fc" right-floor elbow, "Lc" right-ceiling elbow,
// "Gc" left-floor elbow.
#ifndef HPD_IO_HPP
#define HPD_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "hpd/tiling.hpp"

namespace hpd {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text; line and column are 1-based.
class LexicalError : public ParseError {
 public:
  LexicalError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Well-formed text whose shape disagrees with its header.
class DimensionError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Well-formed document describing an invalid tiling.
class ValidationError : public ParseError {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

std::string token_of(const SubTile& cell);
std::string serialize(const Tiling& t);
Tiling parse_tiling(std::string_view text);

/// Fixed-width drawing, 3x3 characters per sub-tile. Tile walls are drawn as
/// ':' and walls contributing to the weight as '*'.
std::string render_ascii(const Tiling& t);

/// SVG 1.1 drawing with the same weight dots.
std::string render_svg(const Tiling& t);

}  // namespace hpd

#endif  // HPD_IO_HPP
