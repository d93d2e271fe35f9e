#pragma once

// Arbitrary-precision integer and rational types shared by every module.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cnsrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Remainder of `value` modulo `modulus` in [0, modulus). `modulus` must be positive.
inline BigInt floor_mod(const BigInt& value, const BigInt& modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

inline BigInt abs(const BigInt& value) { return value < 0 ? BigInt(-value) : value; }

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("empty integer literal");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("invalid integer literal: '" + std::string(text) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

/// Converts to uint64, throwing std::out_of_range when the value does not fit.
inline std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw std::out_of_range("integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::uint64_t>();
}

/// Exact integer square root when `value` is a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& value) {
  if (value < 0) return std::nullopt;
  BigInt root = boost::multiprecision::sqrt(value);
  if (root * root != value) return std::nullopt;
  return root;
}

}  // namespace cnsrep
