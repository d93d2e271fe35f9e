#pragma once

// cnsrep command-line frontend. `run` is separate from main so tests can
// drive it with captured streams.
//
// Exit codes: 0 success, 1 verification failure or unrepresentable input,
// 2 invalid input, 3 step budget exhausted.

#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cnsrep/bigint.hpp"
#include "cnsrep/cns.hpp"
#include "cnsrep/digits.hpp"
#include "cnsrep/negabase.hpp"
#include "cnsrep/penney.hpp"
#include "cnsrep/poly.hpp"
#include "cnsrep/scheme_json.hpp"
#include "cnsrep/trinomial.hpp"
#include "cnsrep/verify.hpp"

namespace cnsrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitExhausted = 3;

enum class OutputFormat { Text, Json };

struct CliConfig {
  OutputFormat output = OutputFormat::Text;
  std::size_t max_steps = kDefaultMaxSteps;
  bool pretty = false;

  std::string poly = "2,2,1";
  std::string value;
  std::string digits;
  std::uint64_t base = 4;
  std::uint64_t c = 4;
  std::size_t d = 4;
  std::size_t k = 2;
  bool search = false;
  std::uint64_t c_max = 1000;
  std::size_t d_max = 16;
  std::string seq_name;
  std::size_t count = 10;

  std::vector<std::string> suites;
  std::int64_t range = 10000;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string report_path;
  bool timing = false;
};

namespace detail {

inline IntPoly cns_poly(const std::string& text) {
  IntPoly p = parse_poly(text);
  validate_cns_poly(p);
  return p;
}

inline void emit(std::ostream& out, const CliConfig& cfg, const std::string& text, const Json& json) {
  if (cfg.output == OutputFormat::Json) {
    out << json.dump() << '\n';
  } else {
    out << text << '\n';
  }
}

inline std::string shown(const Representation& r, const CliConfig& cfg) {
  return cfg.pretty ? pretty(r) : format_digits(r);
}

inline int cmd_encode(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const IntPoly p = cns_poly(cfg.poly);
  const BigInt z = parse_bigint(cfg.value);
  const CnsOutcome outcome = cns_encode(z, p, cfg.max_steps);
  Json j{{"value", z.str()}, {"poly", format_poly(p)}};
  if (const auto* rep = std::get_if<Representation>(&outcome)) {
    j["digits"] = format_digits(*rep);
    j["length"] = rep->length();
    emit(out, cfg, shown(*rep, cfg), j);
    return kExitOk;
  }
  if (const auto* nr = std::get_if<NotRepresentable>(&outcome)) {
    j["outcome"] = "not_representable";
    j["cycle_witness"] = format_residue(nr->cycle_witness);
    err << "error: " << z << " is not representable over " << to_algebraic(p) << " (cycle at residue "
        << format_residue(nr->cycle_witness) << ")\n";
    if (cfg.output == OutputFormat::Json) out << j.dump() << '\n';
    return kExitFailure;
  }
  j["outcome"] = "exhausted";
  j["steps"] = std::get<Exhausted>(outcome).steps;
  err << "error: step budget of " << cfg.max_steps << " exhausted\n";
  if (cfg.output == OutputFormat::Json) out << j.dump() << '\n';
  return kExitExhausted;
}

inline int cmd_decode(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const IntPoly p = cns_poly(cfg.poly);
  const Representation rep(CnsBase{p}, parse_digits(cfg.digits));
  const Residue residue = cns_decode(rep);
  const auto constant = residue.constant();
  Json j{{"poly", format_poly(p)}, {"digits", format_digits(rep)}, {"residue", format_residue(residue)}};
  j["value"] = constant ? Json(constant->str()) : Json(nullptr);
  if (!constant) {
    err << "error: digits reduce to the non-constant residue " << format_residue(residue) << '\n';
    if (cfg.output == OutputFormat::Json) out << j.dump() << '\n';
    return kExitFailure;
  }
  emit(out, cfg, constant->str(), j);
  return kExitOk;
}

inline int cmd_negabase(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.value.empty() == cfg.digits.empty()) {
    err << "error: negabase needs exactly one of --value or --digits\n";
    return kExitInvalid;
  }
  if (!cfg.value.empty()) {
    const BigInt z = parse_bigint(cfg.value);
    const Representation rep = encode_negabase(z, cfg.base);
    emit(out, cfg, shown(rep, cfg),
         Json{{"value", z.str()}, {"base", cfg.base}, {"digits", format_digits(rep)}, {"length", rep.length()}});
    return kExitOk;
  }
  require_negabase_radix(cfg.base);
  const Representation rep(NegaBase{cfg.base}, parse_digits(cfg.digits));
  const BigInt z = decode_negabase(rep);
  emit(out, cfg, z.str(), Json{{"digits", format_digits(rep)}, {"base", cfg.base}, {"value", z.str()}});
  return kExitOk;
}

inline int report_violation(const SchemeViolation& v, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  err << "error: scheme violation " << v.describe() << '\n';
  if (cfg.output == OutputFormat::Json) {
    Json j{{"violation", to_string(v.kind)}};
    if (v.kind == ViolationKind::DigitNotRepresentable || v.kind == ViolationKind::BlockTooLong) j["digit"] = v.digit;
    if (v.kind == ViolationKind::BlockTooLong) j["length"] = v.length;
    out << j.dump() << '\n';
  } else {
    out << v.describe() << '\n';
  }
  return kExitFailure;
}

inline int cmd_convert(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const IntPoly p = parse_poly(cfg.poly);
  const SchemeResult built = build_scheme(p, cfg.c, cfg.d, cfg.max_steps);
  if (const auto* v = std::get_if<SchemeViolation>(&built)) return report_violation(*v, cfg, out, err);
  const auto& scheme = std::get<PenneyScheme>(built);
  const BigInt z = parse_bigint(cfg.value);
  const Representation rep = convert(z, scheme);
  const Representation nega = encode_negabase(z, scheme.c());
  emit(out, cfg, shown(rep, cfg),
       Json{{"value", z.str()},
            {"poly", format_poly(p)},
            {"c", scheme.c()},
            {"d", scheme.d()},
            {"negabase_digits", format_digits(nega)},
            {"digits", format_digits(rep)},
            {"length", rep.length()},
            {"lambda", lambda(z, scheme)}});
  return kExitOk;
}

inline int cmd_scheme(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const IntPoly p = parse_poly(cfg.poly);
  if (cfg.search) {
    const auto found = find_schemes(p, cfg.c_max, cfg.d_max);
    Json arr = Json::array();
    std::string text;
    for (const auto& cand : found) {
      arr.push_back(Json{{"c", cand.c}, {"d", cand.d}});
      text += "c=" + std::to_string(cand.c) + " d=" + std::to_string(cand.d) + "\n";
    }
    if (cfg.output == OutputFormat::Json) {
      out << Json{{"poly", format_poly(p)}, {"candidates", arr}}.dump() << '\n';
    } else {
      out << text;
    }
    return kExitOk;
  }
  const SchemeResult built = build_scheme(p, cfg.c, cfg.d, cfg.max_steps);
  if (const auto* v = std::get_if<SchemeViolation>(&built)) return report_violation(*v, cfg, out, err);
  out << scheme_to_json(std::get<PenneyScheme>(built)).dump() << '\n';
  return kExitOk;
}

inline int cmd_lift(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const IntPoly p = cns_poly(cfg.poly);
  const Representation rep(CnsBase{p}, parse_digits(cfg.digits));
  const Representation lifted = lift_representation(rep, cfg.k);
  const auto& big = std::get<CnsBase>(lifted.base()).poly;
  emit(out, cfg, shown(lifted, cfg),
       Json{{"poly", format_poly(big)}, {"digits", format_digits(lifted)}, {"length", lifted.length()}});
  return kExitOk;
}

inline int cmd_seq(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  SequenceId id;
  if (cfg.seq_name == "a") {
    id = SequenceId::A;
  } else if (cfg.seq_name == "b") {
    id = SequenceId::B;
  } else if (cfg.seq_name == "c") {
    id = SequenceId::C;
  } else {
    throw std::invalid_argument("unknown sequence '" + cfg.seq_name + "'");
  }
  const std::uint64_t first = seq_first_index(id);
  Json values = Json::array();
  for (std::uint64_t i = 0; i < cfg.count; ++i) {
    const BigInt v = seq_value(id, first + i);
    if (cfg.output == OutputFormat::Text) out << v << '\n';
    values.push_back(v.str());
  }
  if (cfg.output == OutputFormat::Json) {
    out << Json{{"name", cfg.seq_name}, {"first_index", first}, {"values", values}}.dump() << '\n';
  }
  return kExitOk;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  SuiteOptions opts;
  opts.suites = cfg.suites;
  opts.range = cfg.range;
  opts.sampling.samples = cfg.samples;
  opts.sampling.seed = cfg.seed;
  opts.jobs = cfg.jobs;
  const auto reports = run_suite(opts);

  std::ofstream report_file;
  if (!cfg.report_path.empty()) {
    report_file.open(cfg.report_path);
    if (!report_file) {
      err << "error: cannot write report to " << cfg.report_path << '\n';
      return kExitInvalid;
    }
  }
  bool all_passed = true;
  for (const auto& r : reports) {
    all_passed = all_passed && r.passed;
    if (report_file.is_open()) report_file << r.to_json(cfg.timing).dump() << '\n';
    if (cfg.output == OutputFormat::Json) {
      out << r.to_json(cfg.timing).dump() << '\n';
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.check_id;
      if (!r.passed) out << " (" << r.counterexamples.size() << " counterexamples)";
      if (cfg.timing) out << " " << r.elapsed_ms << " ms";
      out << '\n';
    }
  }
  return all_passed ? kExitOk : kExitFailure;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical number system expansions and Penney block substitution"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string output = "text";
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_steps = [&](CLI::App* sub) {
    sub->add_option("--max-steps", cfg.max_steps, "Step budget for backward division")->check(CLI::PositiveNumber);
  };

  auto* encode = app.add_subcommand("encode", "Canonical expansion of an integer over a polynomial");
  encode->add_option("--poly", cfg.poly, "Coefficients, constant term first")->required();
  encode->add_option("--value", cfg.value, "Integer to encode")->required();
  encode->add_flag("--pretty", cfg.pretty, "Print as (digits)_p");
  add_steps(encode);

  auto* decode = app.add_subcommand("decode", "Reduce a digit string modulo a polynomial");
  decode->add_option("--poly", cfg.poly)->required();
  decode->add_option("--digits", cfg.digits, "MSD-first digit string")->required();

  auto* nega = app.add_subcommand("negabase", "Encode or decode in base -b");
  nega->add_option("--base", cfg.base, "b >= 2")->required();
  nega->add_option("--value", cfg.value);
  nega->add_option("--digits", cfg.digits);
  nega->add_flag("--pretty", cfg.pretty);

  auto* conv = app.add_subcommand("convert", "Block-substitution conversion through base -c");
  conv->add_option("--value", cfg.value)->required();
  conv->add_option("--poly", cfg.poly, "Default 2,2,1");
  conv->add_option("--c", cfg.c, "Default 4");
  conv->add_option("--d", cfg.d, "Default 4");
  conv->add_flag("--pretty", cfg.pretty);
  add_steps(conv);

  auto* scheme = app.add_subcommand("scheme", "Build and print a scheme as JSON");
  scheme->add_option("--poly", cfg.poly)->required();
  scheme->add_option("--c", cfg.c);
  scheme->add_option("--d", cfg.d);
  scheme->add_flag("--search", cfg.search, "List (c, d) with p | X^d + c instead");
  scheme->add_option("--c-max", cfg.c_max);
  scheme->add_option("--d-max", cfg.d_max);
  add_steps(scheme);

  auto* lift = app.add_subcommand("lift", "Interleave zeros to move an expansion to p(X^k)");
  lift->add_option("--poly", cfg.poly)->required();
  lift->add_option("--digits", cfg.digits)->required();
  lift->add_option("--k", cfg.k)->required();
  lift->add_flag("--pretty", cfg.pretty);

  auto* seq = app.add_subcommand("seq", "Print integer sequence a, b or c");
  seq->add_option("--name", cfg.seq_name)->required()->check(CLI::IsMember({"a", "b", "c"}));
  seq->add_option("--count", cfg.count)->required();

  auto* verify = app.add_subcommand("verify", "Run the verification checks");
  verify->add_option("--suite", cfg.suites, "all|i|ii|iii|iv|v|vi|vii|viii|ix|remark (repeatable)")
      ->delimiter(',');
  verify->add_option("--range", cfg.range, "Sweep radius")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", cfg.samples, "Random pairs for bound checks");
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--jobs", cfg.jobs, "Sweep worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", cfg.report_path, "Write JSON lines here");
  verify->add_flag("--timing", cfg.timing, "Include elapsed times in output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  cfg.output = output == "json" ? OutputFormat::Json : OutputFormat::Text;

  try {
    if (encode->parsed()) return detail::cmd_encode(cfg, out, err);
    if (decode->parsed()) return detail::cmd_decode(cfg, out, err);
    if (nega->parsed()) return detail::cmd_negabase(cfg, out, err);
    if (conv->parsed()) return detail::cmd_convert(cfg, out, err);
    if (scheme->parsed()) return detail::cmd_scheme(cfg, out, err);
    if (lift->parsed()) return detail::cmd_lift(cfg, out, err);
    if (seq->parsed()) return detail::cmd_seq(cfg, out, err);
    if (verify->parsed()) return detail::cmd_verify(cfg, out, err);
  } catch (const NotRepresentableError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const StepBudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitExhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace cnsrep::cli
