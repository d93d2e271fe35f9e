#pragma once

// Digit strings over a negative integer base or a CNS polynomial base.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cnsrep/bigint.hpp"
#include "cnsrep/poly.hpp"

namespace cnsrep {

using Digit = std::uint64_t;

/// Base -radix with digits {0, ..., radix-1}.
struct NegaBase {
  std::uint64_t radix;
  friend bool operator==(const NegaBase&, const NegaBase&) = default;
};

/// Base defined by a monic polynomial p with digits {0, ..., |p(0)|-1}.
struct CnsBase {
  IntPoly poly;
  friend bool operator==(const CnsBase&, const CnsBase&) = default;
};

using Base = std::variant<NegaBase, CnsBase>;

/// Number of admissible digits for the base.
inline std::uint64_t digit_radix(const Base& base) {
  if (const auto* nb = std::get_if<NegaBase>(&base)) return nb->radix;
  const auto& p = std::get<CnsBase>(base).poly;
  return to_u64(abs(p.constant_term()));
}

/// Raised when a digit string is malformed or has a digit outside the digit set.
class DigitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A canonical digit expansion, least significant digit first.
///
/// Invariants: at least one digit, every digit below the radix, and the most
/// significant digit is nonzero unless the expansion is the single digit 0.
class Representation {
 public:
  Representation(Base base, std::vector<Digit> digits) : base_(std::move(base)), digits_(std::move(digits)) {
    const std::uint64_t radix = digit_radix(base_);
    if (digits_.empty()) throw DigitError("representation has no digits");
    for (Digit d : digits_) {
      if (d >= radix) {
        throw DigitError("digit " + std::to_string(d) + " outside digit set {0,...," + std::to_string(radix - 1) + "}");
      }
    }
    if (digits_.size() > 1 && digits_.back() == 0) throw DigitError("leading zero digit");
  }

  const Base& base() const { return base_; }
  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }
  Digit most_significant() const { return digits_.back(); }
  bool is_zero() const { return digits_.size() == 1 && digits_[0] == 0; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Base base_;
  std::vector<Digit> digits_;
};

/// MSD-first text. Digits are concatenated when all are at most 9 and joined
/// with '.' otherwise.
inline std::string format_digits(std::span<const Digit> lsb_first) {
  bool compact = true;
  for (Digit d : lsb_first) compact = compact && d <= 9;
  std::string out;
  for (std::size_t i = lsb_first.size(); i-- > 0;) {
    if (!compact && i + 1 != lsb_first.size()) out += '.';
    out += std::to_string(lsb_first[i]);
  }
  return out;
}

inline std::string format_digits(const Representation& r) { return format_digits(r.digits()); }

/// "(1101)_p" for CNS bases and "(130)_{-4}" for negative bases.
inline std::string pretty(const Representation& r) {
  std::string out = "(" + format_digits(r) + ")_";
  if (const auto* nb = std::get_if<NegaBase>(&r.base())) {
    out += "{-" + std::to_string(nb->radix) + "}";
  } else {
    out += "p";
  }
  return out;
}

/// Parses MSD-first digit text into least-significant-first digits. Accepts
/// the compact and dotted forms, optionally wrapped as "(...)" with a
/// trailing "_p" or "_{-b}" annotation.
inline std::vector<Digit> parse_digits(std::string_view text) {
  if (const auto close = text.rfind(')'); !text.empty() && text.front() == '(' && close != text.npos) {
    text = text.substr(1, close - 1);
  }
  if (text.empty()) throw DigitError("empty digit string");
  std::vector<Digit> msd_first;
  const bool dotted = text.find('.') != text.npos;
  if (dotted) {
    std::size_t start = 0;
    while (true) {
      const std::size_t dot = text.find('.', start);
      const std::string_view item = text.substr(start, dot == text.npos ? text.npos : dot - start);
      if (item.empty()) throw DigitError("empty digit in '" + std::string(text) + "'");
      Digit value = 0;
      for (char ch : item) {
        if (ch < '0' || ch > '9') throw DigitError("invalid digit string '" + std::string(text) + "'");
        value = value * 10 + static_cast<Digit>(ch - '0');
      }
      msd_first.push_back(value);
      if (dot == text.npos) break;
      start = dot + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw DigitError("invalid digit string '" + std::string(text) + "'");
      msd_first.push_back(static_cast<Digit>(ch - '0'));
    }
  }
  return {msd_first.rbegin(), msd_first.rend()};
}

/// Drops most significant zeros, keeping a single 0 for the zero expansion.
inline void strip_leading_zeros(std::vector<Digit>& lsb_first) {
  while (lsb_first.size() > 1 && lsb_first.back() == 0) lsb_first.pop_back();
  if (lsb_first.empty()) lsb_first.push_back(0);
}

}  // namespace cnsrep
