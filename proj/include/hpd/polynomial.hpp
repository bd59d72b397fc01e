// Sparse multivariate polynomials over the integers, Demazure operators and
// key polynomials.
#ifndef HPD_POLYNOMIAL_HPP
#define HPD_POLYNOMIAL_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hpd {

/// Raised when an exact integer operation would leave the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A finite sequence of nonnegative integers (alpha in the key polynomial
/// literature, also used for the branching compositions beta).
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  /// Parses "1,3,0,2". Throws std::invalid_argument on malformed input.
  static Composition parse(std::string_view text);

  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }

  int max_part() const;
  bool is_weakly_decreasing() const;

  /// "1,3,0,2"
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

using ExponentVector = std::vector<int>;

/// Exact polynomial in x_1..x_n. Terms are kept in descending lexicographic
/// order of their exponent vectors and no stored coefficient is zero.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, std::int64_t, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

  static Polynomial zero(int num_vars) { return Polynomial(num_vars); }
  static Polynomial constant(int num_vars, std::int64_t c);
  static Polynomial monomial(ExponentVector exponents, std::int64_t c = 1);
  /// The polynomial x_i (1-based).
  static Polynomial variable(int num_vars, int i);

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const ExponentVector& e) const;

  /// Adds c * x^e in place.
  void add_term(const ExponentVector& e, std::int64_t c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  /// Multiplies every term by x^e.
  Polynomial times_monomial(const ExponentVector& e) const;

  /// Variables actually appearing with a positive exponent (1-based).
  std::vector<int> support() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_compatible(const Polynomial& other) const;

  int num_vars_ = 0;
  Terms terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return sub(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return mul(f, g); }

/// f with x_i and x_{i+1} exchanged (1 <= i <= n-1).
Polynomial swap_vars(const Polynomial& f, int i);

/// The isobaric divided difference
///   pi_i f = (x_i f - x_{i+1} f|_{x_i <-> x_{i+1}}) / (x_i - x_{i+1}),
/// evaluated term by term without division.
Polynomial demazure_pi(int i, const Polynomial& f);

/// Renames x_j to x_{j+shift} and widens the ambient ring to num_vars.
Polynomial shift_vars(const Polynomial& f, int shift, int num_vars);

/// kappa_alpha via the Demazure recursion, always descending through the
/// leftmost ascent.
Polynomial key_polynomial(const Composition& alpha);

/// Same recursion, but `choose` picks which ascent (0-based index i with
/// alpha_i < alpha_{i+1}) to use at each step. For testing path independence.
Polynomial key_polynomial(const Composition& alpha,
                          const std::function<std::size_t(const std::vector<std::size_t>&)>& choose);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace hpd

#endif  // HPD_POLYNOMIAL_HPP
