#include <gtest/gtest.h>

#include "cnsrep/verify.hpp"

namespace cnsrep {
namespace {

const LengthTable& table_1e4() {
  static const LengthTable t = LengthTable::build(Interval::symmetric(10000), 2);
  return t;
}

bool has_counterexample(const VerificationReport& r, const Json& row) {
  return std::find(r.counterexamples.begin(), r.counterexamples.end(), row) != r.counterexamples.end();
}

TEST(LengthTable, MatchesDirectComputation) {
  const LengthTable& t = table_1e4();
  const PenneyScheme& s = penney_standard();
  for (std::int64_t z : {-10000, -13, -12, -1, 0, 1, 3, 4, 51, 52, 10000}) {
    EXPECT_EQ(t.at(z).cns_length, cns_length(z, s.poly())) << z;
    EXPECT_EQ(t.at(z).negabase_length, length_negabase(z, 4)) << z;
    EXPECT_EQ(t.at(z).lambda, lambda(z, s)) << z;
  }
  // Outside the table the length is computed directly.
  EXPECT_EQ(t.length(BigInt(123456)), cns_length(123456, s.poly()));
  const LengthTable sub = t.slice(Interval::symmetric(50));
  EXPECT_EQ(sub.range().size(), 101u);
  EXPECT_EQ(sub.at(-50).cns_length, t.at(-50).cns_length);
  EXPECT_THROW(t.slice(Interval{-20000, 0}), std::out_of_range);
}

TEST(LengthTable, IndependentOfJobCount) {
  const LengthTable one = LengthTable::build(Interval::symmetric(3000), 1);
  const LengthTable four = LengthTable::build(Interval::symmetric(3000), 4);
  for (std::int64_t z = -3000; z <= 3000; ++z) {
    ASSERT_EQ(one.at(z).cns_length, four.at(z).cns_length);
    ASSERT_EQ(one.at(z).digit_sum, four.at(z).digit_sum);
  }
}

TEST(Checks, SweepsPassOnSmallRange) {
  EXPECT_TRUE(check_length_formula(Interval::symmetric(2000)).passed);
  EXPECT_TRUE(check_length_set(table_1e4()).passed);
  EXPECT_TRUE(check_sign_disjoint(table_1e4()).passed);
  EXPECT_TRUE(check_gap3(table_1e4()).passed);
  EXPECT_TRUE(check_pair_subsequences(3).passed);
  EXPECT_TRUE(check_remark().passed);
}

TEST(Checks, PairSubsequencesNeedEnoughRange) {
  const VerificationReport r = check_pair_subsequences(table_1e4(), 4);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(has_counterexample(r, Json::array({"insufficient_range", "negative", 7})));
  EXPECT_EQ(pair_sweep_radius(4), 52428);
}

TEST(Checks, BoundaryJumpWitnesses) {
  const VerificationReport r = check_boundary_jumps(7);
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.witnesses.size(), 7u);
  // [length, edge, lambda(edge), lambda(next), l(edge), l(next)]
  EXPECT_EQ(r.witnesses[0], Json::array({1, "3", 4, 1, 4, 9}));
  EXPECT_EQ(r.witnesses[1][1], "-12");
  EXPECT_EQ(r.witnesses[2][1], "51");
}

TEST(Checks, LambdaBoundsAttained) {
  const VerificationReport r = check_lambda_bounds(PairSampling{100, 2000, 1000000, 5});
  EXPECT_TRUE(r.passed);
}

TEST(Checks, AdditiveSumBoundHasCounterexamples) {
  // l(1) = 1, l(3) = 4 and l(4) = 9 exceeds 1 + 4 + 2.
  const VerificationReport r = check_additive_bounds(PairSampling{3, 0, 0, 1});
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(has_counterexample(r, Json::array({"sum", 1, 3, 9, 1, 4})));
  EXPECT_TRUE(has_counterexample(r, Json::array({"sum", 3, 1, 9, 4, 1})));
  for (const auto& row : r.counterexamples) EXPECT_EQ(row[0], "sum");
}

TEST(DigitSumProbe, Examples) {
  const DigitSumProbe two = digit_sum_probe(2);
  EXPECT_EQ(two.digit_sum, 2);
  EXPECT_EQ(two.s_k_derived, BigInt(0));
  EXPECT_TRUE(two.identity_holds());

  const DigitSumProbe minus_one = digit_sum_probe(-1);
  EXPECT_EQ(minus_one.digit_sum, 4);
  EXPECT_EQ(minus_one.s_k_derived, BigInt(-2));
  EXPECT_TRUE(minus_one.identity_holds());

  const DigitSumProbe zero = digit_sum_probe(0);
  EXPECT_EQ(zero.digit_sum, 0);
  EXPECT_TRUE(zero.identity_holds());
  EXPECT_TRUE(zero.stabilized);

  const DigitSumProbe four = digit_sum_probe(4);
  EXPECT_EQ(four.digit_sum, 4);
  EXPECT_TRUE(four.identity_holds());
  EXPECT_FALSE(four.stabilized);
  EXPECT_EQ(four.recurrence_trace.size(), 64u + 3);
}

TEST(DigitSum, IdentityOnRange) { EXPECT_TRUE(check_digit_sum(Interval::symmetric(3000)).passed); }

TEST(Report, JsonShape) {
  VerificationReport r{"x"};
  r.elapsed_ms = 12.5;
  for (int i = 0; i < 150; ++i) r.fail(Json::array({i}));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.counterexamples.size(), 100u);
  const Json with = r.to_json(true);
  EXPECT_EQ(with["check_id"], "x");
  EXPECT_EQ(with["elapsed_ms"], 12.5);
  EXPECT_EQ(r.to_json(false)["elapsed_ms"], 0.0);
}

TEST(RunSuite, DeterministicAcrossJobs) {
  SuiteOptions opts;
  opts.range = 1500;
  opts.sampling = PairSampling{20, 300, 100000, 9};
  auto dump = [&](unsigned jobs) {
    opts.jobs = jobs;
    std::string text;
    for (const auto& r : run_suite(opts)) text += r.to_json(false).dump() + "\n";
    return text;
  };
  const std::string a = dump(1);
  EXPECT_EQ(a, dump(3));
  EXPECT_EQ(a, dump(1));
}

TEST(RunSuite, SelectsAndValidatesNames) {
  SuiteOptions opts;
  opts.range = 200;
  opts.suites = {"iii", "remark"};
  const auto reports = run_suite(opts);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].check_id, "sign_disjoint");
  EXPECT_EQ(reports[1].check_id, "remark");
  opts.suites = {"x"};
  EXPECT_THROW(run_suite(opts), std::invalid_argument);
}

}  // namespace
}  // namespace cnsrep
