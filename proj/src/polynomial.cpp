#include "hpd/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hpd {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in polynomial addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in polynomial multiplication");
  return r;
}

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Composition(parts);
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || end != piece.data() + piece.size()) {
      throw std::invalid_argument("malformed composition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

int Composition::max_part() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

bool Composition::is_weakly_decreasing() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(int num_vars, std::int64_t c) {
  Polynomial p(num_vars);
  p.add_term(ExponentVector(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(ExponentVector exponents, std::int64_t c) {
  Polynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int i) {
  if (i < 1 || i > num_vars) throw std::out_of_range("variable index out of range");
  ExponentVector e(num_vars, 0);
  e[i - 1] = 1;
  return monomial(std::move(e));
}

std::int64_t Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const ExponentVector& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != num_vars_) throw std::invalid_argument("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw std::invalid_argument("variable count mismatch: " + std::to_string(num_vars_) + " vs " +
                                std::to_string(other.num_vars_));
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, checked_mul(c, -1));
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

Polynomial Polynomial::times_monomial(const ExponentVector& e) const {
  if (static_cast<int>(e.size()) != num_vars_) throw std::invalid_argument("exponent vector has wrong length");
  Polynomial r(num_vars_);
  for (const auto& [exp, c] : terms_) {
    ExponentVector sum = exp;
    for (int k = 0; k < num_vars_; ++k) sum[k] += e[k];
    r.terms_.emplace(std::move(sum), c);
  }
  return r;
}

std::vector<int> Polynomial::support() const {
  std::vector<int> vars;
  for (int k = 0; k < num_vars_; ++k) {
    for (const auto& [e, c] : terms_) {
      if (e[k] > 0) {
        vars.push_back(k + 1);
        break;
      }
    }
  }
  return vars;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::uint64_t magnitude = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (int k = 0; k < num_vars_; ++k) {
      if (e[k] == 0) continue;
      std::string f = "x" + std::to_string(k + 1);
      if (e[k] != 1) f += "^" + std::to_string(e[k]);
      factors.push_back(std::move(f));
    }
    if (magnitude != 1 || factors.empty()) factors.insert(factors.begin(), std::to_string(magnitude));
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out << '*';
      out << factors[k];
    }
  }
  return out.str();
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
  Polynomial r = f;
  r += g;
  return r;
}

Polynomial sub(const Polynomial& f, const Polynomial& g) {
  Polynomial r = f;
  r -= g;
  return r;
}

Polynomial mul(const Polynomial& f, const Polynomial& g) {
  if (f.num_vars() != g.num_vars()) throw std::invalid_argument("variable count mismatch in product");
  const int n = f.num_vars();
  Polynomial r(n);
  ExponentVector e(n);
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (int k = 0; k < n; ++k) e[k] = ef[k] + eg[k];
      r.add_term(e, checked_mul(cf, cg));
    }
  }
  return r;
}

namespace {

void check_adjacent_index(const Polynomial& f, int i) {
  if (i < 1 || i > f.num_vars() - 1) {
    throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(f.num_vars() - 1));
  }
}

}  // namespace

Polynomial swap_vars(const Polynomial& f, int i) {
  check_adjacent_index(f, i);
  Polynomial r(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector swapped = e;
    std::swap(swapped[i - 1], swapped[i]);
    r.add_term(swapped, c);
  }
  return r;
}

Polynomial demazure_pi(int i, const Polynomial& f) {
  check_adjacent_index(f, i);
  Polynomial r(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    const int a = e[i - 1];
    const int b = e[i];
    ExponentVector out = e;
    // x_i^a x_{i+1}^b maps to the complete homogeneous sum between the two
    // exponents; the sign flips when the exponents are in ascending order.
    int lo = b, hi = a;
    std::int64_t coeff = c;
    if (a < b) {
      lo = a + 1;
      hi = b - 1;
      coeff = checked_mul(c, -1);
    }
    for (int j = lo; j <= hi; ++j) {
      out[i - 1] = a + b - j;
      out[i] = j;
      r.add_term(out, coeff);
    }
  }
  return r;
}

Polynomial shift_vars(const Polynomial& f, int shift, int num_vars) {
  if (shift < 0 || f.num_vars() + shift > num_vars) throw std::out_of_range("shift does not fit the target ring");
  Polynomial r(num_vars);
  ExponentVector out(num_vars, 0);
  for (const auto& [e, c] : f.terms()) {
    std::fill(out.begin(), out.end(), 0);
    for (int k = 0; k < f.num_vars(); ++k) out[k + shift] = e[k];
    r.add_term(out, c);
  }
  return r;
}

Polynomial key_polynomial(const Composition& alpha,
                          const std::function<std::size_t(const std::vector<std::size_t>&)>& choose) {
  const int n = static_cast<int>(alpha.size());
  if (n == 0) throw std::invalid_argument("key polynomial needs at least one part");
  std::vector<std::size_t> ascents;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
    if (alpha[i] < alpha[i + 1]) ascents.push_back(i);
  }
  if (ascents.empty()) return Polynomial::monomial(alpha.parts());

  std::size_t i = choose(ascents);
  std::vector<int> swapped = alpha.parts();
  std::swap(swapped[i], swapped[i + 1]);
  return demazure_pi(static_cast<int>(i) + 1, key_polynomial(Composition(std::move(swapped)), choose));
}

Polynomial key_polynomial(const Composition& alpha) {
  return key_polynomial(alpha, [](const std::vector<std::size_t>& ascents) { return ascents.front(); });
}

}  // namespace hpd
