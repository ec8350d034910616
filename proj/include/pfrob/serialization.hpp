#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pfrob/errors.hpp"
#include "pfrob/number_field.hpp"
#include "pfrob/rational.hpp"

namespace pfrob {

using ordered_json = nlohmann::ordered_json;

// {"modulus": [ints], "coeffs": ["num/den", ...]}; modulus entries emit as
// JSON numbers when they fit, decimal strings otherwise
inline ordered_json nf_to_json(const NumberFieldElement& e) {
  ordered_json j;
  ordered_json mod = ordered_json::array();
  for (const Int& c : e.modulus()) {
    if (c.fits_slong_p())
      mod.push_back(static_cast<long long>(c.get_si()));
    else
      mod.push_back(c.get_str());
  }
  j["modulus"] = mod;
  ordered_json coeffs = ordered_json::array();
  for (const Rat& c : e.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = coeffs;
  return j;
}

inline NumberFieldElement nf_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("coeffs"))
    throw parse_error("field element JSON needs modulus and coeffs");
  std::vector<Int> modulus;
  for (const auto& c : j.at("modulus")) {
    if (c.is_number_integer())
      modulus.push_back(parse_integer(std::to_string(c.get<long long>())));
    else if (c.is_string())
      modulus.push_back(parse_integer(c.get<std::string>()));
    else
      throw parse_error("modulus entries must be integers");
  }
  std::vector<Rat> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string())
      coeffs.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer())
      coeffs.push_back(Rat(parse_integer(std::to_string(c.get<long long>()))));
    else
      throw parse_error("coeffs entries must be num/den strings");
  }
  return NumberFieldElement(modulus, coeffs);
}

}  // namespace pfrob
