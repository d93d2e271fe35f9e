#pragma once

// Dense integer polynomials with exact arithmetic.
//
// Coefficients are stored constant term first. The zero polynomial is the
// single coefficient 0 and has degree negative infinity.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnsrep/bigint.hpp"

namespace cnsrep {

/// Polynomial degree with a distinguished negative-infinity value for the
/// zero polynomial. Negative infinity compares below every finite degree.
class Degree {
 public:
  constexpr explicit Degree(std::size_t value) : value_(value) {}

  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return !value_.has_value(); }

  std::size_t value() const {
    if (!value_) throw std::domain_error("degree of the zero polynomial is -infinity");
    return *value_;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;

  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) {
      return b.is_neg_infinity() <=> a.is_neg_infinity();
    }
    return *a.value_ <=> *b.value_;
  }

 private:
  constexpr Degree() = default;
  std::optional<std::size_t> value_;
};

class IntPoly {
 public:
  IntPoly() : coeffs_{BigInt(0)} {}

  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  IntPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { normalize(); }

  /// coefficient * X^power
  static IntPoly monomial(std::size_t power, BigInt coefficient = 1) {
    std::vector<BigInt> c(power + 1, BigInt(0));
    c[power] = std::move(coefficient);
    return IntPoly(std::move(c));
  }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  Degree degree() const { return is_zero() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1); }

  /// Degree of a nonzero polynomial as a plain number.
  std::size_t deg() const { return degree().value(); }

  /// Coefficient of X^i; zero beyond the stored range.
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& constant_term() const { return coeffs_.front(); }

  bool is_monic() const { return leading() == 1; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back(0);
  }

  std::vector<BigInt> coeffs_;
};

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs().size(), b.coeffs().size()), BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(out));
}

inline IntPoly operator-(const IntPoly& a) {
  std::vector<BigInt> out = a.coeffs();
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<BigInt> out(x.size() + y.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return IntPoly(std::move(out));
}

inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return poly_mul(a, b); }

inline IntPoly operator*(const BigInt& k, const IntPoly& a) { return poly_mul(IntPoly{k}, a); }

/// Horner evaluation at an integer point.
inline BigInt poly_eval(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic polynomial; quotient and remainder stay integral.
inline DivRem poly_divrem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero() || !b.is_monic()) {
    throw std::invalid_argument("poly_divrem: divisor must be monic");
  }
  const std::size_t db = b.deg();
  if (a.degree() < b.degree()) return {IntPoly(), a};

  std::vector<BigInt> rem = a.coeffs();
  const std::size_t da = rem.size() - 1;
  std::vector<BigInt> quot(da - db + 1, BigInt(0));
  const auto& bc = b.coeffs();
  for (std::size_t k = da + 1; k-- > db;) {
    const BigInt q = rem[k];
    if (q == 0) continue;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db == 0 ? 1 : db);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

/// True iff p divides X^d + c over the integers.
inline bool divides_xd_plus_c(const IntPoly& p, std::size_t d, const BigInt& c) {
  if (!p.is_monic()) throw std::invalid_argument("divides_xd_plus_c: p must be monic");
  return poly_divrem(IntPoly::monomial(d) + IntPoly{c}, p).remainder.is_zero();
}

inline IntPoly derivative(const IntPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return IntPoly();
  std::vector<BigInt> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long long>(i);
  return IntPoly(std::move(out));
}

/// gcd of the coefficients, nonnegative.
inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> out = p.coeffs();
  for (auto& c : out) c /= g;
  return IntPoly(std::move(out));
}

/// Pseudo-remainder of a by a nonzero b: some lc(b)^k * a minus a multiple of b,
/// with degree below deg b. Only meaningful up to a nonzero constant factor.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  const std::size_t db = b.deg();
  const BigInt& lb = b.leading();
  IntPoly r = a;
  while (!r.is_zero() && r.deg() >= db) {
    const std::size_t shift = r.deg() - db;
    r = lb * r - poly_mul(IntPoly::monomial(shift, r.leading()), b);
  }
  return r;
}

/// gcd over the rationals, normalized to a primitive integer polynomial with
/// positive leading coefficient.
inline IntPoly rational_gcd(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// True iff gcd(p, p') is constant. Requires deg p >= 1.
inline bool has_simple_roots(const IntPoly& p) {
  if (p.degree() < Degree(1)) throw std::invalid_argument("has_simple_roots: degree must be at least 1");
  return rational_gcd(p, derivative(p)).deg() == 0;
}

/// p(X^k)
inline IntPoly substitute_power(const IntPoly& p, std::size_t k) {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
  const auto& c = p.coeffs();
  std::vector<BigInt> out((c.size() - 1) * k + 1, BigInt(0));
  for (std::size_t i = 0; i < c.size(); ++i) out[i * k] = c[i];
  return IntPoly(std::move(out));
}

/// Parses the comma-separated coefficient format, constant term first: "2,2,1".
inline IntPoly parse_poly(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    coeffs.push_back(parse_bigint(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

inline std::string format_poly(const IntPoly& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ',';
    out += c.str();
  }
  return out;
}

/// Human-readable form, highest power first: "X^2+2X+2".
inline std::string to_algebraic(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    BigInt mag = abs(c[i]);
    if (!out.empty() || c[i] < 0) out += c[i] < 0 ? "-" : "+";
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace cnsrep
