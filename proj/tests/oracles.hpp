#pragma once

// Test-only reference computations. Nothing here calls the code paths it is
// used to check.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cnsrep/bigint.hpp"

namespace cnsrep::oracle {

/// Every integer whose base -b expansion has at most max_len digits, mapped to
/// its digit count, by enumerating all digit strings with a nonzero leading
/// digit and evaluating them.
inline std::map<std::int64_t, std::size_t> enumerate_negabase(std::int64_t b, std::size_t max_len) {
  std::map<std::int64_t, std::size_t> out{{0, 1}};
  std::vector<std::int64_t> digits;
  for (std::size_t len = 1; len <= max_len; ++len) {
    digits.assign(len, 0);
    digits[len - 1] = 1;
    while (true) {
      std::int64_t value = 0;
      for (std::size_t i = len; i-- > 0;) value = value * (-b) + digits[i];
      out.emplace(value, len);
      std::size_t i = 0;
      while (i < len) {
        if (++digits[i] < b) break;
        digits[i] = i + 1 == len ? 1 : 0;
        ++i;
      }
      if (i == len) break;
    }
  }
  return out;
}

/// a(n) by literally unrolling a(n) = a(n-1) + (-1)^n + 2 from a(0) = 0.
inline std::vector<std::int64_t> unroll_a(std::size_t count) {
  std::vector<std::int64_t> a{0};
  for (std::size_t n = 1; n < count; ++n) a.push_back(a.back() + (n % 2 == 0 ? 1 : -1) + 2);
  return a;
}

/// Plain integer power.
inline BigInt ipow(std::int64_t base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

/// Random integer polynomial coefficients in [-bound, bound].
inline std::vector<BigInt> random_coeffs(std::mt19937_64& rng, std::size_t count, std::int64_t bound) {
  std::vector<BigInt> c;
  for (std::size_t i = 0; i < count; ++i) {
    c.emplace_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound);
  }
  return c;
}

}  // namespace cnsrep::oracle
