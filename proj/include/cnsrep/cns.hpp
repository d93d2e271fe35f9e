#pragma once

// Canonical digit expansions of integers with respect to a monic polynomial p
// with |p(0)| > 1, digit set {0, ..., |p(0)|-1}.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cnsrep/bigint.hpp"
#include "cnsrep/digits.hpp"
#include "cnsrep/poly.hpp"

namespace cnsrep {

inline constexpr std::size_t kDefaultMaxSteps = 10000;

/// Element of Z[X]/(p) as deg(p) coefficients, constant term first.
struct Residue {
  std::vector<BigInt> coeffs;

  bool is_zero() const {
    for (const auto& c : coeffs) {
      if (c != 0) return false;
    }
    return true;
  }

  bool is_constant() const {
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) return false;
    }
    return true;
  }

  /// The integer this residue equals, if it is constant.
  std::optional<BigInt> constant() const {
    if (!is_constant()) return std::nullopt;
    return coeffs.empty() ? BigInt(0) : coeffs[0];
  }

  friend bool operator==(const Residue&, const Residue&) = default;
};

inline std::string format_residue(const Residue& r) {
  std::string out;
  for (const auto& c : r.coeffs) {
    if (!out.empty()) out += ',';
    out += c.str();
  }
  return out;
}

/// Backward division revisited a residue, so z has no canonical expansion.
struct NotRepresentable {
  Residue cycle_witness;
};

/// The step budget ran out before termination or a detected cycle.
struct Exhausted {
  std::size_t steps;
};

using CnsOutcome = std::variant<Representation, NotRepresentable, Exhausted>;

class CnsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotRepresentableError : public CnsError {
 public:
  using CnsError::CnsError;
};

class StepBudgetError : public CnsError {
 public:
  using CnsError::CnsError;
};

/// Rejects polynomials that cannot serve as a CNS base.
inline void validate_cns_poly(const IntPoly& p) {
  if (p.degree() < Degree(1)) throw std::invalid_argument("CNS base must have degree >= 1");
  if (!p.is_monic()) throw std::invalid_argument("CNS base must be monic: " + to_algebraic(p));
  if (abs(p.constant_term()) <= 1) throw std::invalid_argument("CNS base needs |p(0)| > 1: " + to_algebraic(p));
}

namespace detail {

// One backward-division step: A = u + X * A' (mod p) with u in the digit set.
inline Digit divide_step(Residue& a, const IntPoly& p, const BigInt& digit_count) {
  const auto& pc = p.coeffs();
  auto& ac = a.coeffs;
  const std::size_t n = ac.size();
  const BigInt u = floor_mod(ac[0], digit_count);
  const BigInt q = (ac[0] - u) / pc[0];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ac[i] = ac[i + 1];
    if (q != 0) ac[i] -= q * pc[i + 1];
  }
  ac[n - 1] = -q;
  return u.convert_to<Digit>();
}

// r <- r * X + digit (mod p)
inline void times_x_plus(Residue& r, const IntPoly& p, Digit digit) {
  const auto& pc = p.coeffs();
  auto& rc = r.coeffs;
  const std::size_t n = rc.size();
  const BigInt top = rc[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) {
    rc[i] = rc[i - 1];
    if (top != 0) rc[i] -= top * pc[i];
  }
  rc[0] = BigInt(digit);
  if (top != 0) rc[0] -= top * pc[0];
}

}  // namespace detail

/// Canonical expansion of z by repeated backward division.
///
/// Cycles in the residue sequence are found with Brent's method: a checkpoint
/// state is refreshed at every power-of-two step count and a revisit of it
/// means the sequence never reaches zero.
inline CnsOutcome cns_encode(const BigInt& z, const IntPoly& p, std::size_t max_steps = kDefaultMaxSteps) {
  validate_cns_poly(p);
  if (z == 0) return Representation(CnsBase{p}, {0});

  const BigInt digit_count = abs(p.constant_term());
  Residue state{std::vector<BigInt>(p.deg(), BigInt(0))};
  state.coeffs[0] = z;
  Residue checkpoint = state;
  std::size_t power = 1;
  std::size_t since_checkpoint = 0;
  std::vector<Digit> digits;

  while (!state.is_zero()) {
    if (digits.size() >= max_steps) return Exhausted{digits.size()};
    digits.push_back(detail::divide_step(state, p, digit_count));
    if (state == checkpoint) return NotRepresentable{state};
    if (++since_checkpoint == power) {
      checkpoint = state;
      power *= 2;
      since_checkpoint = 0;
    }
  }
  return Representation(CnsBase{p}, std::move(digits));
}

/// Σ digits[j] X^j reduced modulo p.
inline Residue reduce_digits(std::span<const Digit> lsb_first, const IntPoly& p) {
  Residue r{std::vector<BigInt>(p.deg(), BigInt(0))};
  for (auto it = lsb_first.rbegin(); it != lsb_first.rend(); ++it) detail::times_x_plus(r, p, *it);
  return r;
}

inline Residue cns_decode(const Representation& r) {
  const auto* cb = std::get_if<CnsBase>(&r.base());
  if (cb == nullptr) throw std::invalid_argument("cns_decode: not a CNS representation");
  validate_cns_poly(cb->poly);
  return reduce_digits(r.digits(), cb->poly);
}

/// The expansion for z, throwing when there is none within the step budget.
inline Representation cns_encode_or_throw(const BigInt& z, const IntPoly& p, std::size_t max_steps = kDefaultMaxSteps) {
  CnsOutcome outcome = cns_encode(z, p, max_steps);
  if (auto* rep = std::get_if<Representation>(&outcome)) return std::move(*rep);
  if (std::holds_alternative<NotRepresentable>(outcome)) {
    throw NotRepresentableError(z.str() + " has no canonical expansion over " + to_algebraic(p));
  }
  throw StepBudgetError("step budget of " + std::to_string(max_steps) + " exhausted encoding " + z.str());
}

inline std::size_t cns_length(const BigInt& z, const IntPoly& p, std::size_t max_steps = kDefaultMaxSteps) {
  return cns_encode_or_throw(z, p, max_steps).length();
}

/// Exhaustive search over canonical digit strings of length <= max_len for
/// the one reducing to the constant z. Throws std::logic_error if two are
/// found, since canonical expansions are unique.
inline std::optional<Representation> brute_force_oracle(const BigInt& z, const IntPoly& p, std::size_t max_len) {
  validate_cns_poly(p);
  if (z == 0) return Representation(CnsBase{p}, {0});
  const Digit radix = to_u64(abs(p.constant_term()));
  const std::size_t n = p.deg();

  std::optional<std::vector<Digit>> found;
  std::vector<Digit> prefix;  // most significant first
  auto matches = [&](const Residue& r) {
    if (r.coeffs[0] != z) return false;
    for (std::size_t i = 1; i < n; ++i) {
      if (r.coeffs[i] != 0) return false;
    }
    return true;
  };

  // Depth-first over prefixes; each node extends its parent's residue by one digit.
  auto visit = [&](auto&& self, const Residue& parent) -> void {
    for (Digit d = 0; d < radix; ++d) {
      Residue r = parent;
      detail::times_x_plus(r, p, d);
      prefix.push_back(d);
      if (matches(r)) {
        if (found) throw std::logic_error("two canonical expansions found for " + z.str());
        found = std::vector<Digit>(prefix.rbegin(), prefix.rend());
      }
      if (prefix.size() < max_len) self(self, r);
      prefix.pop_back();
    }
  };

  const Residue zero{std::vector<BigInt>(n, BigInt(0))};
  for (Digit lead = 1; lead < radix && max_len > 0; ++lead) {
    Residue r = zero;
    detail::times_x_plus(r, p, lead);
    prefix.assign(1, lead);
    if (matches(r)) {
      if (found) throw std::logic_error("two canonical expansions found for " + z.str());
      found = std::vector<Digit>{lead};
    }
    if (max_len > 1) visit(visit, r);
  }
  if (!found) return std::nullopt;
  return Representation(CnsBase{p}, std::move(*found));
}

}  // namespace cnsrep
