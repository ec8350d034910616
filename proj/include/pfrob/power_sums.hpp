#pragma once

#include <cstdint>
#include <numeric>

#include "pfrob/apery.hpp"
#include "pfrob/bernoulli.hpp"
#include "pfrob/generators.hpp"
#include "pfrob/rational.hpp"

namespace pfrob {

/* Closed forms over the p-Apery set m_0..m_{a1-1} for the complement
 * {n >= 1 : d(n) <= p}: largest element, count, sum, and general power
 * sums.  All intermediates are exact rationals; integrality of the final
 * value is asserted, never assumed.
 */

struct PowerSumRequest {
  Generators gens;
  std::uint64_t p;
  unsigned long mu;
};

inline Int frobenius_from_apery(const PAperySet& ap) {
  return Int(ap.max_value()) - ap.generators().a1();
}

inline Int genus_from_apery(const PAperySet& ap) {
  std::uint64_t a1 = ap.generators().a1();
  Rat acc = Rat(ap.sum_pow(1)) / a1 - Rat(a1 - 1) / 2;
  // d(0) = 1 <= p would admit 0; the complement is kept 0-free, so the
  // count over n >= 1 drops one element as soon as p >= 1
  if (ap.p() >= 1) acc -= 1;
  Int g = to_integer_exact(acc, "genus");
  if (g < 0) throw consistency_error("genus negative: " + g.get_str());
  return g;
}

inline Int sylvester_from_apery(const PAperySet& ap) {
  std::uint64_t a1 = ap.generators().a1();
  Rat acc = Rat(ap.sum_pow(2)) / (2 * Rat(a1)) - Rat(ap.sum_pow(1)) / 2 +
            Rat(Int(a1) * a1 - 1) / 12;
  Int s = to_integer_exact(acc, "sylvester sum");
  if (s < 0) throw consistency_error("sylvester sum negative: " + s.get_str());
  return s;
}

inline Int power_sum_from_apery(const PAperySet& ap, unsigned long mu) {
  if (mu == 0) return genus_from_apery(ap);
  std::uint64_t a1 = ap.generators().a1();
  Rat acc(0);
  for (unsigned long kappa = 0; kappa <= mu; ++kappa) {
    Rat term = Rat(binomial(mu + 1, kappa)) * bernoulli(kappa);
    if (kappa == 0)
      term /= a1;
    else
      term *= Rat(int_pow(Int(a1), kappa - 1));
    term *= Rat(ap.sum_pow(mu + 1 - kappa));
    acc += term;
  }
  acc /= (mu + 1);
  acc += bernoulli(mu + 1) / (mu + 1) * Rat(int_pow(Int(a1), mu + 1) - 1);
  return to_integer_exact(acc, "power sum");
}

inline Int power_sum(const PowerSumRequest& req) {
  return power_sum_from_apery(PAperySet(req.gens, req.p), req.mu);
}

inline Int frobenius(const Generators& gens, std::uint64_t p) {
  return frobenius_from_apery(PAperySet(gens, p));
}

inline Int genus(const Generators& gens, std::uint64_t p) {
  return genus_from_apery(PAperySet(gens, p));
}

inline Int sylvester_sum(const Generators& gens, std::uint64_t p) {
  return sylvester_from_apery(PAperySet(gens, p));
}

/* Two-generator closed forms, fixed polynomials in a, b, p.  The genus
 * keeps the same 0-free count convention as genus() above.
 */
struct TwoGenClosed {
  Int g;
  Int n;
  Int s;
};

inline TwoGenClosed two_gen_closed(std::uint64_t a, std::uint64_t b,
                                   std::uint64_t p) {
  if (a < 2 || b < 2)
    throw domain_error("two_gen_closed needs a, b >= 2");
  if (std::gcd(a, b) != 1)
    throw coprimality_error("two_gen_closed needs gcd(a,b) = 1, got " +
                            std::to_string(std::gcd(a, b)));
  Int A(a), B(b), P(p);
  TwoGenClosed r;
  r.g = (P + 1) * A * B - A - B;
  Rat n = Rat((2 * P + 1) * A * B - A - B + 1) / 2;
  if (p >= 1) n -= 1;
  r.n = to_integer_exact(n, "two-generator genus");
  Rat s = Rat(2 * (3 * P * P + 3 * P + 1) * A * A * B * B -
              3 * (2 * P + 1) * A * B * (A + B) + A * A + B * B + 3 * A * B -
              1) /
          12;
  r.s = to_integer_exact(s, "two-generator sylvester sum");
  return r;
}

}  // namespace pfrob
