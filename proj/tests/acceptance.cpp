// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact;
// the sweep sizes below are the pinned parameters.
//
//   cnsrep_acceptance          run all criteria
//   cnsrep_acceptance 8        run criterion 8 only

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cnsrep/cns.hpp"
#include "cnsrep/negabase.hpp"
#include "cnsrep/penney.hpp"
#include "cnsrep/trinomial.hpp"
#include "cnsrep/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace cnsrep;

constexpr std::int64_t kTolerance = 0;         // allowed mismatches in every criterion
constexpr std::int64_t kEquivalenceRadius = 10000;
constexpr std::int64_t kSweepRadius = 100000;
constexpr std::int64_t kDigitSumRadius = 10000;
constexpr std::int64_t kLiftRadius = 1000;
constexpr std::int64_t kOracleRadius = 200;
constexpr std::size_t kOracleMaxLen = 12;
constexpr std::size_t kPairCount = 4;
constexpr std::uint64_t kSequenceCheckMax = 100;
const PairSampling kSampling{300, 10000, 1000000, 1};

const IntPoly kP{2, 2, 1};

struct Outcome {
  bool passed;
  std::string detail;
};

const LengthTable& sweep() {
  static const LengthTable t = LengthTable::build(Interval::symmetric(kSweepRadius), 2);
  return t;
}

Outcome from_reports(std::initializer_list<VerificationReport> reports) {
  Outcome o{true, ""};
  for (const auto& r : reports) {
    const auto bad = static_cast<std::int64_t>(r.counterexamples.size());
    o.passed = o.passed && r.passed && bad <= kTolerance;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += r.check_id + (r.passed ? " ok" : " counterexamples=" + std::to_string(bad));
    if (!r.passed && !r.counterexamples.empty()) o.detail += " first=" + r.counterexamples.front().dump();
  }
  return o;
}

Outcome digit_tables() {
  const std::pair<int, const char*> expected[] = {{0, "0"}, {1, "1"}, {2, "1100"}, {3, "1101"}};
  std::string got;
  bool ok = true;
  for (const auto& [z, digits] : expected) {
    const std::string s = format_digits(cns_encode_or_throw(z, kP));
    ok = ok && s == digits;
    got += std::to_string(z) + "->" + s + " ";
  }
  return {ok, got};
}

Outcome penney_equivalence() { return from_reports({check_length_formula(Interval::symmetric(kEquivalenceRadius))}); }

Outcome length_set() {
  // The expected prefix is generated by unrolling the recurrence, not from seq_a.
  const auto a = oracle::unroll_a(200);
  std::set<std::size_t> attained;
  for (std::int64_t z = -kSweepRadius; z <= kSweepRadius; ++z) {
    if (z != 0) attained.insert(sweep().at(z).cns_length);
  }
  std::set<std::size_t> expected;
  for (std::size_t n = 1; a[n] <= static_cast<std::int64_t>(*attained.rbegin()); ++n) expected.insert(a[n]);
  Outcome o = from_reports({check_length_set(sweep())});
  o.passed = o.passed && attained == expected;
  o.detail += "; max length " + std::to_string(*attained.rbegin()) + ", " + std::to_string(attained.size()) + " lengths";
  return o;
}

Outcome sign_and_pairs() {
  return from_reports({check_sign_disjoint(sweep()), check_pair_subsequences(sweep(), kPairCount)});
}

Outcome boundary_jumps() {
  Outcome o = from_reports({check_boundary_jumps(7)});
  const std::size_t l3 = cns_length(3, kP), l4 = cns_length(4, kP);
  o.passed = o.passed && l3 == 4 && l4 == 9;
  o.detail += "; l(3)=" + std::to_string(l3) + " l(4)=" + std::to_string(l4);
  return o;
}

Outcome gap3() { return from_reports({check_gap3(sweep())}); }

Outcome lambda_bounds() { return from_reports({check_lambda_bounds(kSampling)}); }

Outcome additive_bounds() {
  const VerificationReport r = check_additive_bounds(kSampling, sweep());
  Outcome o = from_reports({r});
  o.detail += "; " + r.witnesses.front().dump();
  return o;
}

Outcome digit_sum() { return from_reports({check_digit_sum(Interval::symmetric(kDigitSumRadius))}); }

Outcome q_counterexample() { return from_reports({check_remark()}); }

Outcome lift_trinomial() {
  std::int64_t mismatches = 0;
  std::ostringstream detail;
  for (std::size_t m : {2, 3}) {
    const IntPoly big = trinomial_poly(m);
    const auto allowed_vec = trinomial_length_set(m, 64);
    const std::set<BigInt> allowed(allowed_vec.begin(), allowed_vec.end());
    std::set<std::size_t> seen;
    for (std::int64_t z = -kLiftRadius; z <= kLiftRadius; ++z) {
      const Representation small = cns_encode_or_throw(z, kP);
      const Representation direct = cns_encode_or_throw(z, big);
      if (direct != lift_representation(small, m)) ++mismatches;
      if (direct.length() != m * (small.length() - 1) + 1) ++mismatches;
      if (!allowed.contains(BigInt(direct.length()))) ++mismatches;
      if (z != 0) seen.insert(direct.length());
    }
    if (m == 2) {
      std::vector<std::size_t> first(seen.begin(), seen.end());
      first.resize(4);
      for (std::uint64_t n = 0; n < 4; ++n) {
        if (seq_b(n) != first[n]) ++mismatches;
      }
      detail << "m=2 first lengths " << first[0] << "," << first[1] << "," << first[2] << "," << first[3] << "; ";
    }
  }
  for (std::uint64_t n = 0; n <= kSequenceCheckMax; ++n) {
    if (seq_b(n) != 2 * seq_a(n + 1) - 1) ++mismatches;
  }
  detail << "mismatches=" << mismatches;
  return {mismatches <= kTolerance, detail.str()};
}

Outcome negabase_and_oracle() {
  std::int64_t parity = 0, steps = 0, extremal = 0, sum = 0, product = 0;
  std::string first_sum;
  for (std::uint64_t b : {2, 3, 4, 10}) {
    for (std::int64_t n = 1; n <= 100000; ++n) {
      if (length_negabase(n, b) % 2 != 1 || length_negabase(-n, b) % 2 != 0) ++parity;
      const auto up = static_cast<std::int64_t>(length_negabase(n, b)) - static_cast<std::int64_t>(length_negabase(n - 1, b));
      const auto down = static_cast<std::int64_t>(length_negabase(-n - 1, b)) - static_cast<std::int64_t>(length_negabase(-n, b));
      if ((up != 0 && up != 2) || (down != 0 && down != 2)) ++steps;
    }
    // Extremal integers against an exhaustive scan of digit strings.
    const std::size_t max_len = b == 10 ? 4 : 6;
    const auto all = oracle::enumerate_negabase(static_cast<std::int64_t>(b), max_len + 2);
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::int64_t lo = 0, hi = 0;
      bool any = false;
      for (const auto& [value, l] : all) {
        if (l != len || value == 0) continue;
        lo = any ? std::min(lo, value) : value;
        hi = any ? std::max(hi, value) : value;
        any = true;
      }
      const IntegerRange ext = extremal_of_length(b, len);
      if (!any || ext.min != lo || ext.max != hi) ++extremal;
    }
    std::mt19937_64 rng(b);
    for (int i = 0; i < 10000; ++i) {
      const std::int64_t x = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
      const std::int64_t y = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
      const auto lx = static_cast<std::int64_t>(length_negabase(x, b));
      const auto ly = static_cast<std::int64_t>(length_negabase(y, b));
      if (static_cast<std::int64_t>(length_negabase(BigInt(x) + y, b)) > std::max(lx, ly) + 1) {
        if (sum++ == 0) first_sum = " first=(b=" + std::to_string(b) + "," + std::to_string(x) + "," + std::to_string(y) + ")";
      }
      if (x == 0 || y == 0) continue;
      const auto e = static_cast<std::int64_t>(length_negabase(BigInt(x) * y, b)) - lx - ly;
      if (e != -3 && e != -1 && e != 1) ++product;
    }
  }
  std::int64_t oracle = 0;
  for (std::int64_t z = -kOracleRadius; z <= kOracleRadius; ++z) {
    const auto expected = brute_force_oracle(z, kP, kOracleMaxLen);
    const Representation got = cns_encode_or_throw(z, kP);
    if (expected ? got != *expected : got.length() <= kOracleMaxLen) ++oracle;
  }
  std::ostringstream detail;
  detail << "parity=" << parity << " steps=" << steps << " extremal=" << extremal << " sum=" << sum << first_sum
         << " product=" << product << " oracle=" << oracle;
  return {parity + steps + extremal + sum + product + oracle <= kTolerance, detail.str()};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"digit tables", digit_tables},
      {"block substitution equals division, |z| <= 1e4", penney_equivalence},
      {"attained length set, |z| <= 1e5", length_set},
      {"sign classes mod 8 and length pairs, |z| <= 1e5", sign_and_pairs},
      {"boundary jumps", boundary_jumps},
      {"gap of at least 3, |z| <= 1e5", gap3},
      {"lambda bounds and witnesses", lambda_bounds},
      {"additive length bounds", additive_bounds},
      {"digit-sum identity, |z| <= 1e4", digit_sum},
      {"X^2+4X+8 counterexample", q_counterexample},
      {"lift to X^2m+2X^m+2", lift_trinomial},
      {"negabase properties and oracle agreement", negabase_and_oracle},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  const auto& list = criteria();
  std::size_t first = 1, last = list.size();
  if (argc > 1) {
    const long n = std::strtol(argv[1], nullptr, 10);
    if (n < 1 || n > static_cast<long>(list.size())) {
      std::cerr << "criterion must be 1.." << list.size() << '\n';
      return 2;
    }
    first = last = static_cast<std::size_t>(n);
  }
  bool all = true;
  for (std::size_t i = first; i <= last; ++i) {
    Outcome o{false, ""};
    try {
      o = list[i - 1].run();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.passed;
    std::cout << "criterion " << i << ": " << (o.passed ? "PASS" : "FAIL") << "  " << list[i - 1].name << "  ["
              << o.detail << "]" << std::endl;
  }
  return all ? 0 : 1;
}
