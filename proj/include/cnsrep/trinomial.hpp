#pragma once

// Zero-interleaving lift to P = p(X^k) and the length sequences of the
// trinomials X^(2m) + 2X^m + 2.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cnsrep/bigint.hpp"
#include "cnsrep/digits.hpp"
#include "cnsrep/poly.hpp"

namespace cnsrep {

enum class SequenceId { A, B, C };

/// Raised when a sequence value fails an internal consistency requirement.
class SequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// X^(2m) + 2X^m + 2
inline IntPoly trinomial_poly(std::size_t m) {
  if (m == 0) throw std::invalid_argument("trinomial_poly: m must be positive");
  return substitute_power(IntPoly{2, 2, 1}, m);
}

/// Moves digit j to position j*k, so k-1 zeros separate consecutive digits.
/// The result is an expansion over p(X^k) with length k(l-1)+1.
inline Representation lift_representation(const Representation& r, std::size_t k) {
  if (k < 2) throw std::invalid_argument("lift_representation: k must be at least 2");
  const auto* cb = std::get_if<CnsBase>(&r.base());
  if (cb == nullptr) throw std::invalid_argument("lift_representation: not a CNS representation");
  const auto& d = r.digits();
  std::vector<Digit> lifted((d.size() - 1) * k + 1, 0);
  for (std::size_t j = 0; j < d.size(); ++j) lifted[j * k] = d[j];
  return Representation(CnsBase{substitute_power(cb->poly, k)}, std::move(lifted));
}

/// a(0) = 0, a(n) = a(n-1) + (-1)^n + 2: the nonnegative integers congruent
/// to 0 or 1 mod 4. Closed form a(2j) = 4j, a(2j+1) = 4j+1.
inline BigInt seq_a(std::uint64_t n) {
  const BigInt half = BigInt(n / 2) * 4;
  return n % 2 == 0 ? half : BigInt(half + 1);
}

/// c(n) = (4n^2 + (-1)^n (2n-1) - 4n + 3) / 2 for n >= 1.
inline BigInt seq_c(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("seq_c: n must be at least 1");
  const BigInt nn(n);
  const BigInt alternating = n % 2 == 0 ? BigInt(2 * nn - 1) : BigInt(-(2 * nn - 1));
  const BigInt twice = 4 * nn * nn + alternating - 4 * nn + 3;
  if (twice % 2 != 0) throw SequenceError("seq_c: odd numerator at n = " + std::to_string(n));
  return twice / 2;
}

/// b(n) = sqrt(8(c(n+1) - 1) + 1); throws SequenceError on a non-square radicand.
inline BigInt seq_b(std::uint64_t n) {
  const BigInt radicand = 8 * (seq_c(n + 1) - 1) + 1;
  auto root = exact_sqrt(radicand);
  if (!root) throw SequenceError("seq_b: radicand " + radicand.str() + " is not a square at n = " + std::to_string(n));
  return *root;
}

inline BigInt seq_value(SequenceId id, std::uint64_t n) {
  switch (id) {
    case SequenceId::A: return seq_a(n);
    case SequenceId::B: return seq_b(n);
    case SequenceId::C: return seq_c(n);
  }
  throw std::invalid_argument("unknown sequence");
}

/// Index of the first term: a and b start at 0, c at 1.
inline std::uint64_t seq_first_index(SequenceId id) { return id == SequenceId::C ? 1 : 0; }

/// First `count` elements of {m(a(n)-1)+1 : n >= 1}, increasing.
inline std::vector<BigInt> trinomial_length_set(std::size_t m, std::size_t count) {
  if (m == 0) throw std::invalid_argument("trinomial_length_set: m must be positive");
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::uint64_t n = 1; n <= count; ++n) out.push_back(BigInt(m) * (seq_a(n) - 1) + 1);
  return out;
}

}  // namespace cnsrep
