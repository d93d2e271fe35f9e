#pragma once

// Integers in base -b with digit set {0, ..., b-1}.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cnsrep/bigint.hpp"
#include "cnsrep/digits.hpp"

namespace cnsrep {

inline void require_negabase_radix(std::uint64_t b) {
  if (b < 2) throw std::invalid_argument("negative base radix must be at least 2, got " + std::to_string(b));
}

/// Base -b digits of z, least significant first. Zero yields the single digit 0.
inline std::vector<Digit> negabase_digits(BigInt z, std::uint64_t b) {
  require_negabase_radix(b);
  std::vector<Digit> digits;
  const BigInt radix(b);
  const BigInt neg_radix = -radix;
  while (z != 0) {
    const BigInt r = floor_mod(z, radix);
    digits.push_back(r.convert_to<Digit>());
    z = (z - r) / neg_radix;
  }
  if (digits.empty()) digits.push_back(0);
  return digits;
}

inline Representation encode_negabase(const BigInt& z, std::uint64_t b) {
  return Representation(NegaBase{b}, negabase_digits(z, b));
}

inline BigInt decode_negabase(const Representation& r) {
  const auto* nb = std::get_if<NegaBase>(&r.base());
  if (nb == nullptr) throw std::invalid_argument("decode_negabase: not a negative-base representation");
  const BigInt neg_radix = -BigInt(nb->radix);
  BigInt acc = 0;
  const auto& d = r.digits();
  for (auto it = d.rbegin(); it != d.rend(); ++it) acc = acc * neg_radix + *it;
  return acc;
}

/// Digit count of the base -b expansion; 1 for z = 0.
inline std::size_t length_negabase(const BigInt& z, std::uint64_t b) { return negabase_digits(z, b).size(); }

struct IntegerRange {
  BigInt min;
  BigInt max;
  friend bool operator==(const IntegerRange&, const IntegerRange&) = default;
};

/// Integers with base -b expansion of exactly `length` digits.
///
/// Odd lengths are attained only by positive integers (plus 0 for length 1,
/// which is excluded here); even lengths only by negative integers. For
/// length 2k+1 the largest value is (b^(2k+2)-1)/(b+1); for length 2k the
/// least is -b(b^(2k)-1)/(b+1) and the largest is -(b^(2k-1)+1)/(b+1).
inline IntegerRange extremal_of_length(std::uint64_t b, std::size_t length) {
  require_negabase_radix(b);
  if (length == 0) throw std::invalid_argument("extremal_of_length: length must be positive");
  const BigInt base(b);
  const BigInt denom = base + 1;
  auto pow = [&](std::size_t e) { return boost::multiprecision::pow(base, static_cast<unsigned>(e)); };
  if (length % 2 == 1) {
    const std::size_t k = length / 2;
    const BigInt largest = (pow(2 * (k + 1)) - 1) / denom;
    const BigInt least = k == 0 ? BigInt(1) : BigInt(base * (pow(2 * k - 1) + 1) / denom);
    return {least, largest};
  }
  const std::size_t k = length / 2;
  const BigInt least = -(base * (pow(2 * k) - 1) / denom);
  const BigInt largest = -((pow(2 * k - 1) + 1) / denom);
  return {least, largest};
}

}  // namespace cnsrep
