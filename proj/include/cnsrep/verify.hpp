#pragma once

// Executable checks of the length, lambda and digit-sum properties of
// canonical expansions over X^2 + 2X + 2, and of the X^2 + 4X + 8
// counterexample. Every check returns a VerificationReport with witnesses.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cnsrep/bigint.hpp"
#include "cnsrep/cns.hpp"
#include "cnsrep/negabase.hpp"
#include "cnsrep/penney.hpp"
#include "cnsrep/poly.hpp"
#include "cnsrep/trinomial.hpp"

namespace cnsrep {

using Json = nlohmann::ordered_json;

/// Closed integer interval [lo, hi].
struct Interval {
  std::int64_t lo;
  std::int64_t hi;

  static Interval symmetric(std::int64_t radius) { return {-radius, radius}; }
  bool contains(std::int64_t z) const { return lo <= z && z <= hi; }
  std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo) + 1; }
  Json to_json() const { return Json::array({lo, hi}); }
};

struct VerificationReport {
  explicit VerificationReport(std::string id) : check_id(std::move(id)) {}

  std::string check_id;
  Json params = Json::object();
  bool passed = true;
  std::vector<Json> counterexamples;
  std::vector<Json> witnesses;
  double elapsed_ms = 0.0;

  static constexpr std::size_t kMaxCounterexamples = 100;

  void fail(Json witness) {
    passed = false;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(witness));
  }

  /// One JSON-lines record. With `timing` false elapsed_ms is written as 0 so
  /// that repeated runs are byte-identical.
  Json to_json(bool timing = true) const {
    Json j;
    j["check_id"] = check_id;
    j["params"] = params;
    j["passed"] = passed;
    j["counterexamples"] = counterexamples;
    j["witnesses"] = witnesses;
    j["elapsed_ms"] = timing ? elapsed_ms : 0.0;
    return j;
  }
};

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline const IntPoly& standard_poly() { return penney_standard().poly(); }

inline std::vector<std::size_t> sorted_values(const std::set<std::size_t>& s) { return {s.begin(), s.end()}; }

}  // namespace detail

/// Per-integer data over X^2 + 2X + 2, computed with the generic encoder.
struct SweepEntry {
  std::uint32_t cns_length;
  std::uint32_t negabase_length;  // base -4
  std::uint32_t lambda;
  std::uint32_t digit_sum;
};

class LengthTable {
 public:
  /// Fills the table for every z in `range`, splitting the work into `jobs`
  /// contiguous chunks. The result does not depend on `jobs`.
  static LengthTable build(Interval range, unsigned jobs = 1) {
    LengthTable t;
    t.range_ = range;
    t.entries_.resize(range.size());
    const PenneyScheme& scheme = penney_standard();
    jobs = std::max(1u, jobs);
    const std::size_t n = t.entries_.size();
    const std::size_t chunk = (n + jobs - 1) / jobs;

    auto fill = [&](std::size_t begin, std::size_t end) {
      for (std::size_t idx = begin; idx < end; ++idx) {
        const BigInt z(range.lo + static_cast<std::int64_t>(idx));
        const Representation rep = cns_encode_or_throw(z, scheme.poly());
        const std::vector<Digit> nega = negabase_digits(z, 4);
        std::uint32_t sum = 0;
        for (Digit d : rep.digits()) sum += static_cast<std::uint32_t>(d);
        t.entries_[idx] = SweepEntry{static_cast<std::uint32_t>(rep.length()), static_cast<std::uint32_t>(nega.size()),
                                     static_cast<std::uint32_t>(scheme.block_length(nega.back())), sum};
      }
    };

    if (jobs == 1 || n < 2) {
      fill(0, n);
      return t;
    }
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::size_t begin = std::min(n, w * chunk);
      const std::size_t end = std::min(n, begin + chunk);
      workers.emplace_back([&, w, begin, end] {
        try {
          fill(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : workers) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    return t;
  }

  /// Copy restricted to `sub`, which must lie inside the table's range.
  LengthTable slice(Interval sub) const {
    if (sub.size() > 0 && (!contains(sub.lo) || !contains(sub.hi))) {
      throw std::out_of_range("LengthTable::slice: interval outside sweep");
    }
    LengthTable t;
    t.range_ = sub;
    if (sub.size() > 0) {
      const auto first = entries_.begin() + (sub.lo - range_.lo);
      t.entries_.assign(first, first + static_cast<std::ptrdiff_t>(sub.size()));
    }
    return t;
  }

  const Interval& range() const { return range_; }
  bool contains(std::int64_t z) const { return range_.contains(z); }
  const SweepEntry& at(std::int64_t z) const {
    if (!contains(z)) throw std::out_of_range("LengthTable: " + std::to_string(z) + " outside sweep");
    return entries_[static_cast<std::size_t>(z - range_.lo)];
  }

  /// Canonical length of z, from the table when covered and computed otherwise.
  std::size_t length(const BigInt& z) const {
    if (z >= range_.lo && z <= range_.hi) return at(z.convert_to<std::int64_t>()).cns_length;
    return cns_length(z, detail::standard_poly());
  }

 private:
  Interval range_{0, -1};
  std::vector<SweepEntry> entries_;
};

/// For every z in range: block substitution reproduces the generic encoder's
/// digits and the length equals 4(l_{-4}(z) - 1) + lambda(z).
inline VerificationReport check_length_formula(Interval range) {
  detail::Stopwatch clock;
  VerificationReport r{"length_formula"};
  r.params["range"] = range.to_json();
  const PenneyScheme& s = penney_standard();
  for (std::int64_t z = range.lo; z <= range.hi; ++z) {
    const BigInt zz(z);
    const Representation direct = cns_encode_or_throw(zz, s.poly());
    const Representation blocks = convert(zz, s);
    const std::size_t formula = 4 * (length_negabase(zz, 4) - 1) + lambda(zz, s);
    if (direct != blocks || direct.length() != formula) {
      r.fail(Json::array({z, format_digits(direct), format_digits(blocks), formula}));
    }
  }
  for (std::int64_t z : {0, 1, 2, 3, -1}) {
    if (range.contains(z)) {
      r.witnesses.push_back(Json::array({z, format_digits(convert(BigInt(z), s)), predicted_length(BigInt(z), s)}));
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// Attained lengths are exactly {a(n) : n >= 1} up to the largest attained
/// length, and every attained length is 0 or 1 mod 4.
inline VerificationReport check_length_set(const LengthTable& table, std::size_t prefix_len = 8) {
  detail::Stopwatch clock;
  VerificationReport r{"length_set"};
  r.params["range"] = table.range().to_json();
  r.params["prefix_len"] = prefix_len;
  std::set<std::size_t> attained;
  for (std::int64_t z = table.range().lo; z <= table.range().hi; ++z) attained.insert(table.at(z).cns_length);
  if (attained.empty()) {
    r.elapsed_ms = clock.elapsed_ms();
    return r;
  }
  for (std::size_t len : attained) {
    if (len % 4 != 0 && len % 4 != 1) r.fail(Json::array({"residue_mod_4", len}));
  }
  const std::size_t max_len = *attained.rbegin();
  std::set<std::size_t> expected;
  for (std::uint64_t n = 1;; ++n) {
    const BigInt a = seq_a(n);
    if (a > max_len) break;
    expected.insert(a.convert_to<std::size_t>());
  }
  for (std::size_t len : expected) {
    if (!attained.contains(len)) r.fail(Json::array({"missing", len}));
  }
  for (std::size_t len : attained) {
    if (!expected.contains(len)) r.fail(Json::array({"unexpected", len}));
  }
  const auto values = detail::sorted_values(attained);
  Json prefix = Json::array();
  for (std::size_t i = 0; i < std::min(prefix_len, values.size()); ++i) prefix.push_back(values[i]);
  r.witnesses.push_back(Json{{"attained_prefix", prefix}, {"max_attained", max_len}});
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// Positive and negative integers have disjoint length sets; positive lengths
/// are 1 or 4 mod 8 and negative lengths 5 or 0 mod 8.
inline VerificationReport check_sign_disjoint(const LengthTable& table) {
  detail::Stopwatch clock;
  VerificationReport r{"sign_disjoint"};
  r.params["range"] = table.range().to_json();
  std::map<std::size_t, std::int64_t> positive;  // length -> first z
  std::map<std::size_t, std::int64_t> negative;
  for (std::int64_t z = std::max<std::int64_t>(1, table.range().lo); z <= table.range().hi; ++z) {
    const std::size_t len = table.at(z).cns_length;
    positive.emplace(len, z);
    if (len % 8 != 1 && len % 8 != 4) r.fail(Json::array({"positive_residue", z, len}));
  }
  for (std::int64_t z = std::min<std::int64_t>(-1, table.range().hi); z >= table.range().lo; --z) {
    const std::size_t len = table.at(z).cns_length;
    negative.emplace(len, z);
    if (len % 8 != 5 && len % 8 != 0) r.fail(Json::array({"negative_residue", z, len}));
  }
  for (const auto& [len, z] : positive) {
    if (auto it = negative.find(len); it != negative.end()) r.fail(Json::array({"shared_length", len, z, it->second}));
  }
  Json pos = Json::array(), neg = Json::array();
  for (const auto& [len, z] : positive) pos.push_back(len);
  for (const auto& [len, z] : negative) neg.push_back(len);
  r.witnesses.push_back(Json{{"positive_lengths", pos}, {"negative_lengths", neg}});
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// At the end of each base -4 length class the leading digit jumps from 3 to
/// 1 and the canonical length grows by exactly 5. Odd lengths use the largest
/// positive integer of that length, even lengths the least negative one.
inline VerificationReport check_boundary_jumps(std::size_t max_length = 7) {
  detail::Stopwatch clock;
  VerificationReport r{"boundary_jumps"};
  r.params["max_length"] = max_length;
  const PenneyScheme& s = penney_standard();
  for (std::size_t len = 1; len <= max_length; ++len) {
    const IntegerRange ext = extremal_of_length(4, len);
    const bool odd = len % 2 == 1;
    const BigInt edge = odd ? ext.max : ext.min;
    const BigInt next = odd ? BigInt(edge + 1) : BigInt(edge - 1);
    const std::size_t lp_edge = cns_length(edge, s.poly());
    const std::size_t lp_next = cns_length(next, s.poly());
    const bool ok = length_negabase(edge, 4) == len && length_negabase(next, 4) == len + 2 && lambda(edge, s) == 4 &&
                    lambda(next, s) == 1 && lp_edge % 4 == 0 && lp_next == lp_edge + 5;
    Json row = Json::array({len, edge.str(), lambda(edge, s), lambda(next, s), lp_edge, lp_next});
    if (!ok) r.fail(row);
    r.witnesses.push_back(std::move(row));
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

namespace detail {

// Distinct lengths in order of first appearance walking away from zero.
inline std::vector<std::size_t> lengths_walking_out(const LengthTable& table, bool positive) {
  std::set<std::size_t> seen;
  const Interval& range = table.range();
  if (positive) {
    for (std::int64_t z = std::max<std::int64_t>(1, range.lo); z <= range.hi; ++z) seen.insert(table.at(z).cns_length);
  } else {
    for (std::int64_t z = std::min<std::int64_t>(-1, range.hi); z >= range.lo; --z) seen.insert(table.at(z).cns_length);
  }
  return sorted_values(seen);
}

}  // namespace detail

/// Sweep radius that covers `count` complete length pairs on both signs.
inline std::int64_t pair_sweep_radius(std::size_t count) {
  return abs(extremal_of_length(4, 2 * count).min).convert_to<std::int64_t>();
}

/// Positive lengths come in pairs (a(4n-3), a(4n-2)) and negative lengths in
/// pairs (a(4n-1), a(4n)). The first `count` pairs of each are compared.
inline VerificationReport check_pair_subsequences(const LengthTable& table, std::size_t count) {
  detail::Stopwatch clock;
  VerificationReport r{"pair_subsequences"};
  r.params["range"] = table.range().to_json();
  r.params["count"] = count;
  for (const bool positive : {true, false}) {
    const auto observed = detail::lengths_walking_out(table, positive);
    const char* sign = positive ? "positive" : "negative";
    if (observed.size() < 2 * count) {
      r.fail(Json::array({"insufficient_range", sign, observed.size()}));
      continue;
    }
    Json pairs = Json::array();
    for (std::size_t n = 1; n <= count; ++n) {
      const std::uint64_t first = positive ? 4 * n - 3 : 4 * n - 1;
      const std::size_t want_a = seq_a(first).convert_to<std::size_t>();
      const std::size_t want_b = seq_a(first + 1).convert_to<std::size_t>();
      const std::size_t got_a = observed[2 * (n - 1)];
      const std::size_t got_b = observed[2 * (n - 1) + 1];
      if (got_a != want_a || got_b != want_b) r.fail(Json::array({sign, n, got_a, got_b, want_a, want_b}));
      if (got_b != got_a + 3) r.fail(Json::array({"pair_gap", sign, n, got_a, got_b}));
      pairs.push_back(Json::array({got_a, got_b}));
    }
    r.witnesses.push_back(Json{{"sign", sign}, {"pairs", pairs}});
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

inline VerificationReport check_pair_subsequences(std::size_t count, unsigned jobs = 1) {
  const std::int64_t radius = pair_sweep_radius(count);
  return check_pair_subsequences(LengthTable::build(Interval::symmetric(radius), jobs), count);
}

/// For 0 < n < m: l(m) = l(n) or l(m) >= l(n) + 3, separately on each sign.
inline VerificationReport check_gap3(const LengthTable& table) {
  detail::Stopwatch clock;
  VerificationReport r{"gap3"};
  r.params["range"] = table.range().to_json();
  const Interval& range = table.range();
  for (const bool positive : {true, false}) {
    std::set<std::size_t> earlier;
    const std::int64_t start = positive ? std::max<std::int64_t>(1, range.lo) : std::min<std::int64_t>(-1, range.hi);
    const std::int64_t step = positive ? 1 : -1;
    for (std::int64_t z = start; range.contains(z); z += step) {
      const std::size_t len = table.at(z).cns_length;
      // Any earlier length in [len - 2, inf) other than len itself breaks the property.
      for (auto it = earlier.lower_bound(len >= 2 ? len - 2 : 0); it != earlier.end(); ++it) {
        if (*it != len) {
          r.fail(Json::array({z, len, *it}));
          break;
        }
      }
      earlier.insert(len);
    }
    Json lens = Json::array();
    for (std::size_t len : earlier) lens.push_back(len);
    r.witnesses.push_back(Json{{"sign", positive ? "positive" : "negative"}, {"lengths", lens}});
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// Pairs used by the bound checks: every (x, y) with |x|, |y| <= grid_radius
/// plus `samples` pseudo-random pairs with |x|, |y| <= sample_radius drawn
/// from mt19937_64 seeded with `seed`.
struct PairSampling {
  std::int64_t grid_radius = 300;
  std::size_t samples = 10000;
  std::int64_t sample_radius = 1000000;
  std::uint64_t seed = 1;

  Json to_json() const {
    return Json{{"grid_radius", grid_radius}, {"samples", samples}, {"sample_radius", sample_radius}, {"seed", seed}};
  }

  template <class Fn>
  void for_each_pair(Fn&& fn) const {
    for (std::int64_t x = -grid_radius; x <= grid_radius; ++x) {
      for (std::int64_t y = -grid_radius; y <= grid_radius; ++y) fn(x, y);
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t span = static_cast<std::uint64_t>(2 * sample_radius + 1);
    for (std::size_t i = 0; i < samples; ++i) {
      const std::int64_t x = static_cast<std::int64_t>(rng() % span) - sample_radius;
      const std::int64_t y = static_cast<std::int64_t>(rng() % span) - sample_radius;
      fn(x, y);
    }
  }
};

/// -2 <= lambda(x) + lambda(y) - lambda(xy) <= 7, with (4, 5) attaining -2
/// and (2, 410) attaining 7. Pairs with a zero factor are tallied separately
/// and not asserted.
inline VerificationReport check_lambda_bounds(const PairSampling& sampling) {
  detail::Stopwatch clock;
  VerificationReport r{"lambda_bounds"};
  r.params = sampling.to_json();
  const PenneyScheme& s = penney_standard();
  auto lam = [&](std::int64_t v) { return static_cast<std::int64_t>(lambda(BigInt(v), s)); };

  std::map<std::int64_t, std::size_t> histogram;
  std::map<std::int64_t, std::size_t> zero_histogram;
  sampling.for_each_pair([&](std::int64_t x, std::int64_t y) {
    const std::int64_t value = lam(x) + lam(y) - static_cast<std::int64_t>(lambda(BigInt(x) * y, s));
    if (x == 0 || y == 0) {
      ++zero_histogram[value];
      return;
    }
    ++histogram[value];
    if (value < -2 || value > 7) r.fail(Json::array({x, y, value}));
  });

  for (const auto& [x, y, want] : {std::tuple{4, 5, -2}, std::tuple{2, 410, 7}}) {
    const std::int64_t value = lam(x) + lam(y) - lam(std::int64_t{x} * y);
    if (value != want) r.fail(Json::array({"equality_witness", x, y, value, want}));
    r.witnesses.push_back(Json::array({x, y, value}));
  }
  Json hist = Json::object(), zero_hist = Json::object();
  for (const auto& [v, n] : histogram) hist[std::to_string(v)] = n;
  for (const auto& [v, n] : zero_histogram) zero_hist[std::to_string(v)] = n;
  r.witnesses.push_back(Json{{"value_histogram", hist}, {"zero_factor_histogram", zero_hist}});
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// l(x+y) <= l(x) + l(y) + 2 and l(xy) <= l(x) + l(y) + 10, with l(0) = 1.
/// Lengths come from `table` where it covers the argument.
inline VerificationReport check_additive_bounds(const PairSampling& sampling, const LengthTable& table) {
  detail::Stopwatch clock;
  VerificationReport r{"additive_bounds"};
  r.params = sampling.to_json();
  std::int64_t max_sum_slack = std::numeric_limits<std::int64_t>::min();
  std::int64_t max_product_slack = std::numeric_limits<std::int64_t>::min();
  Json sum_witness, product_witness;
  sampling.for_each_pair([&](std::int64_t x, std::int64_t y) {
    const BigInt bx(x), by(y);
    const auto lx = static_cast<std::int64_t>(table.length(bx));
    const auto ly = static_cast<std::int64_t>(table.length(by));
    const auto lsum = static_cast<std::int64_t>(table.length(bx + by));
    const auto lprod = static_cast<std::int64_t>(table.length(bx * by));
    if (lsum > lx + ly + 2) r.fail(Json::array({"sum", x, y, lsum, lx, ly}));
    if (lprod > lx + ly + 10) r.fail(Json::array({"product", x, y, lprod, lx, ly}));
    if (lsum - lx - ly > max_sum_slack) {
      max_sum_slack = lsum - lx - ly;
      sum_witness = Json::array({x, y, max_sum_slack});
    }
    if (lprod - lx - ly > max_product_slack) {
      max_product_slack = lprod - lx - ly;
      product_witness = Json::array({x, y, max_product_slack});
    }
  });
  r.witnesses.push_back(Json{{"max_sum_excess", sum_witness}, {"max_product_excess", product_witness}});
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

inline VerificationReport check_additive_bounds(const PairSampling& sampling, unsigned jobs = 1) {
  const std::int64_t radius = sampling.grid_radius * sampling.grid_radius + 2 * sampling.grid_radius;
  return check_additive_bounds(sampling, LengthTable::build(Interval::symmetric(radius), jobs));
}

/// Digit sum of z over X^2 + 2X + 2 and the quantities derived from it.
struct DigitSumProbe {
  BigInt z;
  BigInt digit_sum;
  /// 2(z - digit_sum)/5 when that is an integer.
  std::optional<BigInt> s_k_derived;
  /// s_0 = z, s_1 = 0, s_2 = z/2, s_{k+1} = (s_{k-1} + s_{k-2})/2.
  std::vector<Rational> recurrence_trace;
  /// Three consecutive equal values occurred in the trace.
  bool stabilized = false;

  /// z = digit_sum + (5/2) s with s an even integer.
  bool identity_holds() const { return s_k_derived.has_value() && *s_k_derived % 2 == 0; }
};

inline DigitSumProbe digit_sum_probe(const BigInt& z, std::size_t max_iter = 64) {
  DigitSumProbe probe;
  probe.z = z;
  const Representation rep = cns_encode_or_throw(z, detail::standard_poly());
  probe.digit_sum = 0;
  for (Digit d : rep.digits()) probe.digit_sum += d;
  const BigInt twice = 2 * (z - probe.digit_sum);
  if (twice % 5 == 0) probe.s_k_derived = twice / 5;

  auto& s = probe.recurrence_trace;
  s.reserve(max_iter + 3);
  s.push_back(Rational(z));
  s.push_back(Rational(0));
  s.push_back(Rational(z) / 2);
  for (std::size_t k = 2; k < max_iter + 2; ++k) s.push_back((s[k - 1] + s[k - 2]) / 2);
  for (std::size_t i = 0; i + 2 < s.size() && !probe.stabilized; ++i) {
    probe.stabilized = s[i] == s[i + 1] && s[i + 1] == s[i + 2];
  }
  return probe;
}

/// Asserts z = digit_sum (mod 5) and that 2(z - digit_sum)/5 is even. How
/// often the literal recurrence stabilizes is recorded but not asserted.
inline VerificationReport check_digit_sum(Interval range, std::size_t max_iter = 64) {
  detail::Stopwatch clock;
  VerificationReport r{"digit_sum"};
  r.params["range"] = range.to_json();
  r.params["max_iter"] = max_iter;
  std::size_t stabilized = 0;
  Json not_stabilized = Json::array();
  for (std::int64_t z = range.lo; z <= range.hi; ++z) {
    const DigitSumProbe probe = digit_sum_probe(BigInt(z), max_iter);
    if (!probe.identity_holds()) r.fail(Json::array({z, probe.digit_sum.str()}));
    if (probe.stabilized) {
      ++stabilized;
    } else if (not_stabilized.size() < 8) {
      not_stabilized.push_back(z);
    }
  }
  for (std::int64_t z : {2, -1, 0, 4}) {
    if (!range.contains(z)) continue;
    const DigitSumProbe probe = digit_sum_probe(BigInt(z), max_iter);
    r.witnesses.push_back(Json::array({z, probe.digit_sum.str(), probe.s_k_derived ? probe.s_k_derived->str() : "none",
                                       probe.stabilized, probe.recurrence_trace.back().str()}));
  }
  r.witnesses.push_back(
      Json{{"recurrence_stabilized", stabilized}, {"swept", range.size()}, {"first_not_stabilized", not_stabilized}});
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

/// Over X^2 + 4X + 8 the multiples 8q (q = 1..6) have length 4 while 56 has
/// length 7, so no scheme with c = 64, d = 4 exists.
inline VerificationReport check_remark() {
  detail::Stopwatch clock;
  VerificationReport r{"remark"};
  const IntPoly p{8, 4, 1};
  r.params["poly"] = format_poly(p);
  static const std::pair<int, const char*> kExpected[] = {{8, "1340"},  {16, "1200"}, {24, "2540"},   {32, "2400"},
                                                          {40, "3740"}, {48, "3600"}, {56, "1470140"}};
  for (const auto& [z, digits] : kExpected) {
    const CnsOutcome outcome = cns_encode(BigInt(z), p);
    const auto* rep = std::get_if<Representation>(&outcome);
    const std::string got = rep ? format_digits(*rep) : "unrepresentable";
    if (got != digits) r.fail(Json::array({z, got, digits}));
    r.witnesses.push_back(Json::array({z, got}));
  }
  const SchemeResult built = build_scheme(p, 64, 4);
  const auto* violation = std::get_if<SchemeViolation>(&built);
  if (violation == nullptr || violation->kind != ViolationKind::BlockTooLong) {
    r.fail(Json::array({"scheme", violation ? violation->describe() : "built"}));
  } else {
    r.witnesses.push_back(Json::array({"scheme", violation->describe()}));
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

struct SuiteOptions {
  /// Names from kSuiteNames; empty means all.
  std::vector<std::string> suites;
  std::int64_t range = 10000;
  PairSampling sampling;
  unsigned jobs = 1;
  std::size_t max_boundary_length = 7;
  std::size_t pair_count = 4;
  std::size_t probe_iterations = 64;
  std::size_t prefix_len = 8;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "remark"};
  return names;
}

/// Runs the selected checks in fixed order, sharing one sweep table.
inline std::vector<VerificationReport> run_suite(const SuiteOptions& opts) {
  std::vector<std::string> selected = opts.suites;
  if (selected.empty() || std::find(selected.begin(), selected.end(), "all") != selected.end()) selected = suite_names();
  for (const auto& name : selected) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
  }
  auto wants = [&](const char* name) { return std::find(selected.begin(), selected.end(), name) != selected.end(); };

  const Interval range = Interval::symmetric(opts.range);
  std::int64_t radius = opts.range;
  if (wants("v")) radius = std::max(radius, pair_sweep_radius(opts.pair_count));
  if (wants("viii")) {
    const std::int64_t g = opts.sampling.grid_radius;
    radius = std::max(radius, g * g + 2 * g);
  }
  std::optional<LengthTable> wide;
  auto table = [&]() -> const LengthTable& {
    if (!wide) wide = LengthTable::build(Interval::symmetric(radius), opts.jobs);
    return *wide;
  };
  // Checks over the requested range read a slice of the shared table.
  std::optional<LengthTable> narrow;
  auto ranged = [&]() -> const LengthTable& {
    if (radius == opts.range) return table();
    if (!narrow) narrow = table().slice(range);
    return *narrow;
  };

  std::vector<VerificationReport> out;
  if (wants("i")) out.push_back(check_length_formula(range));
  if (wants("ii")) out.push_back(check_length_set(ranged(), opts.prefix_len));
  if (wants("iii")) out.push_back(check_sign_disjoint(ranged()));
  if (wants("iv")) out.push_back(check_boundary_jumps(opts.max_boundary_length));
  if (wants("v")) out.push_back(check_pair_subsequences(table(), opts.pair_count));
  if (wants("vi")) out.push_back(check_gap3(ranged()));
  if (wants("vii")) out.push_back(check_lambda_bounds(opts.sampling));
  if (wants("viii")) out.push_back(check_additive_bounds(opts.sampling, table()));
  if (wants("ix")) out.push_back(check_digit_sum(range, opts.probe_iterations));
  if (wants("remark")) out.push_back(check_remark());
  return out;
}

}  // namespace cnsrep
