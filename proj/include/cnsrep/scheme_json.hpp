#pragma once

// JSON form of a Penney scheme:
//   {"poly": "2,2,1", "c": 4, "d": 4, "blocks": ["0000", "0001", "1100", "1101"]}
// Blocks are MSD-first and zero padded to d digits.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cnsrep/digits.hpp"
#include "cnsrep/penney.hpp"
#include "cnsrep/poly.hpp"

namespace cnsrep {

inline nlohmann::ordered_json scheme_to_json(const PenneyScheme& s) {
  nlohmann::ordered_json j;
  j["poly"] = format_poly(s.poly());
  j["c"] = s.c();
  j["d"] = s.d();
  auto blocks = nlohmann::ordered_json::array();
  for (const auto& b : s.blocks()) blocks.push_back(format_digits(b));
  j["blocks"] = std::move(blocks);
  return j;
}

/// Rebuilds the scheme from (poly, c, d) and requires the stored blocks to
/// match the recomputed ones digit for digit.
inline PenneyScheme scheme_from_json(const nlohmann::ordered_json& j, std::size_t max_steps = kDefaultMaxSteps) {
  const IntPoly p = parse_poly(j.at("poly").get<std::string>());
  PenneyScheme s = build_scheme_or_throw(p, j.at("c").get<std::uint64_t>(), j.at("d").get<std::size_t>(), max_steps);
  const auto& blocks = j.at("blocks");
  if (!blocks.is_array() || blocks.size() != s.blocks().size()) {
    throw std::invalid_argument("scheme JSON: expected " + std::to_string(s.blocks().size()) + " blocks");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (parse_digits(blocks[i].get<std::string>()) != s.block(i)) {
      throw std::invalid_argument("scheme JSON: block " + std::to_string(i) + " does not match " +
                                  format_digits(s.block(i)));
    }
  }
  return s;
}

}  // namespace cnsrep
