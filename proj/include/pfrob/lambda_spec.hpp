#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfrob/errors.hpp"
#include "pfrob/number_field.hpp"
#include "pfrob/rational.hpp"

namespace pfrob {

/* Weight grammar:
 *   INT            plain integer, e.g. "2", "-3"
 *   NUM/DEN        rational, e.g. "-1/2"
 *   zeta:M         primitive M-th root of unity, M prime
 *                  (modulus 1 + x + ... + x^{M-1}, element x)
 *   gauss:RE,IM    RE + IM*i in Q[i] (modulus x^2 + 1), RE/IM rational
 *   nf:modulus=c0,...,1;elem=e0,...
 *                  explicit element in Q[x]/(c0 + c1 x + ... + x^d)
 */

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline bool is_prime_u64(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

}  // namespace detail

inline NumberFieldElement parse_lambda(const std::string& spec) {
  if (spec.empty()) throw parse_error("empty weight spec");

  if (spec.rfind("zeta:", 0) == 0) {
    Int m = parse_integer(spec.substr(5));
    if (m < 2 || !m.fits_ulong_p() ||
        !detail::is_prime_u64(m.get_ui()))
      throw domain_error("zeta modulus must be prime, got " + m.get_str());
    std::uint64_t mm = m.get_ui();
    if (mm > 4096) throw domain_error("zeta modulus too large");
    std::vector<Int> modulus(mm, Int(1));
    return NumberFieldElement::generator(modulus);
  }

  if (spec.rfind("gauss:", 0) == 0) {
    std::vector<std::string> parts = detail::split(spec.substr(6), ',');
    if (parts.size() != 2)
      throw parse_error("gauss weight needs RE,IM, got '" + spec + "'");
    std::vector<Int> modulus{Int(1), Int(0), Int(1)};  // x^2 + 1
    return NumberFieldElement(
        modulus, {parse_rational(parts[0]), parse_rational(parts[1])});
  }

  if (spec.rfind("nf:", 0) == 0) {
    std::vector<std::string> sections = detail::split(spec.substr(3), ';');
    if (sections.size() != 2 || sections[0].rfind("modulus=", 0) != 0 ||
        sections[1].rfind("elem=", 0) != 0)
      throw parse_error("nf weight needs modulus=...;elem=..., got '" + spec +
                        "'");
    std::vector<Int> modulus;
    for (const std::string& c : detail::split(sections[0].substr(8), ','))
      modulus.push_back(parse_integer(c));
    std::vector<Rat> coeffs;
    for (const std::string& c : detail::split(sections[1].substr(5), ','))
      coeffs.push_back(parse_rational(c));
    return NumberFieldElement(modulus, coeffs);
  }

  return NumberFieldElement::rational(parse_rational(spec));
}

}  // namespace pfrob
