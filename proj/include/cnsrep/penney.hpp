#pragma once

// Block substitution from base -c expansions to canonical expansions over p.
//
// When p divides X^d + c, every root of p satisfies rho^d = -c. Writing each
// base -c digit i as a d-digit canonical block h_i with h_i(rho) = i turns
// the base -c expansion of z into its canonical expansion over p.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cnsrep/bigint.hpp"
#include "cnsrep/cns.hpp"
#include "cnsrep/digits.hpp"
#include "cnsrep/negabase.hpp"
#include "cnsrep/poly.hpp"

namespace cnsrep {

enum class ViolationKind {
  NotMonic,
  ConstantTermTooSmall,
  RepeatedRoots,
  NoDivisibility,
  DTooSmallForDegree,
  DigitNotRepresentable,
  BlockTooLong,
};

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotMonic: return "NotMonic";
    case ViolationKind::ConstantTermTooSmall: return "ConstantTermTooSmall";
    case ViolationKind::RepeatedRoots: return "RepeatedRoots";
    case ViolationKind::NoDivisibility: return "NoDivisibility";
    case ViolationKind::DTooSmallForDegree: return "DTooSmallForDegree";
    case ViolationKind::DigitNotRepresentable: return "DigitNotRepresentable";
    case ViolationKind::BlockTooLong: return "BlockTooLong";
  }
  return "Unknown";
}

/// First failed hypothesis of a scheme. `digit` and `length` are set for the
/// per-digit violations only.
struct SchemeViolation {
  ViolationKind kind;
  std::uint64_t digit = 0;
  std::size_t length = 0;

  std::string describe() const {
    switch (kind) {
      case ViolationKind::DigitNotRepresentable: return std::string(to_string(kind)) + "(" + std::to_string(digit) + ")";
      case ViolationKind::BlockTooLong:
        return std::string(to_string(kind)) + "(" + std::to_string(digit) + "," + std::to_string(length) + ")";
      default: return to_string(kind);
    }
  }

  friend bool operator==(const SchemeViolation&, const SchemeViolation&) = default;
};

class PenneyScheme;
using SchemeResult = std::variant<PenneyScheme, SchemeViolation>;
SchemeResult build_scheme(const IntPoly& p, std::uint64_t c, std::size_t d, std::size_t max_steps);

/// A validated (p, c, d) with the digit-block table for {0, ..., c-1}.
/// Immutable once built; obtain one through build_scheme.
class PenneyScheme {
 public:
  const IntPoly& poly() const { return poly_; }
  std::uint64_t c() const { return c_; }
  std::size_t d() const { return d_; }

  /// Block for digit i: exactly d digits, least significant first, zero padded.
  const std::vector<Digit>& block(std::uint64_t i) const { return blocks_.at(i); }
  const std::vector<std::vector<Digit>>& blocks() const { return blocks_; }

  /// Canonical length of digit i over p.
  std::size_t block_length(std::uint64_t i) const { return block_lengths_.at(i); }
  const std::vector<std::size_t>& block_lengths() const { return block_lengths_; }

  friend bool operator==(const PenneyScheme&, const PenneyScheme&) = default;

 private:
  PenneyScheme(IntPoly p, std::uint64_t c, std::size_t d) : poly_(std::move(p)), c_(c), d_(d) {}

  friend SchemeResult build_scheme(const IntPoly&, std::uint64_t, std::size_t, std::size_t);

  IntPoly poly_;
  std::uint64_t c_;
  std::size_t d_;
  std::vector<std::vector<Digit>> blocks_;
  std::vector<std::size_t> block_lengths_;
};

/// Checks every hypothesis in a fixed order (monic, |p(0)| > 1, simple roots,
/// p | X^d + c, d > deg p, then the blocks for i = 0, 1, ..., c-1) and reports
/// the first failure.
inline SchemeResult build_scheme(const IntPoly& p, std::uint64_t c, std::size_t d,
                                 std::size_t max_steps = kDefaultMaxSteps) {
  if (c == 0 || d == 0) throw std::invalid_argument("build_scheme: c and d must be positive");
  if (p.degree() < Degree(1)) throw std::invalid_argument("build_scheme: p must have degree >= 1");
  if (!p.is_monic()) return SchemeViolation{ViolationKind::NotMonic};
  if (abs(p.constant_term()) <= 1) return SchemeViolation{ViolationKind::ConstantTermTooSmall};
  if (!has_simple_roots(p)) return SchemeViolation{ViolationKind::RepeatedRoots};
  if (!divides_xd_plus_c(p, d, BigInt(c))) return SchemeViolation{ViolationKind::NoDivisibility};
  if (d <= p.deg()) return SchemeViolation{ViolationKind::DTooSmallForDegree};

  PenneyScheme scheme(p, c, d);
  scheme.blocks_.reserve(c);
  scheme.block_lengths_.reserve(c);
  for (std::uint64_t i = 0; i < c; ++i) {
    CnsOutcome outcome = cns_encode(BigInt(i), p, max_steps);
    const auto* rep = std::get_if<Representation>(&outcome);
    if (rep == nullptr) return SchemeViolation{ViolationKind::DigitNotRepresentable, i};
    if (rep->length() > d) return SchemeViolation{ViolationKind::BlockTooLong, i, rep->length()};
    std::vector<Digit> block = rep->digits();
    block.resize(d, 0);
    scheme.blocks_.push_back(std::move(block));
    scheme.block_lengths_.push_back(rep->length());
  }
  return scheme;
}

/// Builds the scheme or throws std::invalid_argument naming the violation.
inline PenneyScheme build_scheme_or_throw(const IntPoly& p, std::uint64_t c, std::size_t d,
                                          std::size_t max_steps = kDefaultMaxSteps) {
  SchemeResult result = build_scheme(p, c, d, max_steps);
  if (auto* v = std::get_if<SchemeViolation>(&result)) {
    throw std::invalid_argument("scheme violation: " + v->describe());
  }
  return std::get<PenneyScheme>(std::move(result));
}

/// p = X^2 + 2X + 2 with c = d = 4.
inline const PenneyScheme& penney_standard() {
  static const PenneyScheme scheme = build_scheme_or_throw(IntPoly{2, 2, 1}, 4, 4);
  return scheme;
}

/// Canonical expansion of z over the scheme's polynomial by block substitution.
inline Representation convert(const BigInt& z, const PenneyScheme& s) {
  const std::vector<Digit> nega = negabase_digits(z, s.c());
  std::vector<Digit> digits;
  digits.reserve(nega.size() * s.d());
  for (Digit v : nega) {
    const auto& block = s.block(v);
    digits.insert(digits.end(), block.begin(), block.end());
  }
  strip_leading_zeros(digits);
  // Only the top block may lose padding: total length is d(l-1) + len(h_top).
  const std::size_t expected = s.d() * (nega.size() - 1) + s.block_length(nega.back());
  if (digits.size() != expected) throw std::logic_error("block substitution degree mismatch for " + z.str());
  return Representation(CnsBase{s.poly()}, std::move(digits));
}

/// Canonical length over p of the most significant base -c digit of z.
inline std::size_t lambda(const BigInt& z, const PenneyScheme& s) {
  return s.block_length(negabase_digits(z, s.c()).back());
}

/// d (l_{-c}(z) - 1) + lambda(z)
inline std::size_t predicted_length(const BigInt& z, const PenneyScheme& s) {
  const std::vector<Digit> nega = negabase_digits(z, s.c());
  return s.d() * (nega.size() - 1) + s.block_length(nega.back());
}

struct SchemeCandidate {
  std::uint64_t c;
  std::size_t d;
  friend bool operator==(const SchemeCandidate&, const SchemeCandidate&) = default;
};

/// All (c, d) with 2 <= c <= c_max, 1 <= d <= d_max and p | X^d + c, ordered by
/// d then c. Only divisibility is tested; pass candidates to build_scheme.
inline std::vector<SchemeCandidate> find_schemes(const IntPoly& p, std::uint64_t c_max, std::size_t d_max) {
  if (!p.is_monic()) throw std::invalid_argument("find_schemes: p must be monic");
  std::vector<SchemeCandidate> out;
  for (std::size_t d = 1; d <= d_max; ++d) {
    // X^d + c = q p + r and r does not depend on c apart from the constant
    // term, so at most one c can work for each d.
    const IntPoly rem = poly_divrem(IntPoly::monomial(d), p).remainder;
    bool only_constant = true;
    for (std::size_t i = 1; i < rem.coeffs().size(); ++i) only_constant = only_constant && rem.coeffs()[i] == 0;
    if (!only_constant) continue;
    const BigInt c = -rem.constant_term();
    if (c >= 2 && c <= BigInt(c_max)) out.push_back({c.convert_to<std::uint64_t>(), d});
  }
  return out;
}

}  // namespace cnsrep
