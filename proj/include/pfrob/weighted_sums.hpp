#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "pfrob/apery.hpp"
#include "pfrob/eulerian.hpp"
#include "pfrob/generators.hpp"
#include "pfrob/number_field.hpp"
#include "pfrob/rational.hpp"

namespace pfrob {

/* Weighted sums sum_{d(n)<=p, n>=1} lambda^n n^mu with lambda in Q[x]/(f).
 * Three closed-form paths:
 *   - weighted_power_sum: general mu >= 1, needs lambda^a1 != 1
 *   - weighted_sum_mu1: mu = 1 specialization, needs lambda^a1 != 1
 *   - weighted_sum_lambda_root: mu = 1 with lambda^a1 = 1
 * plus two-generator closed forms (weighted_two_gen) and the rational
 * alternating sum (lambda = -1, odd a1).
 */

struct WeightedSumRequest {
  Generators gens;
  std::uint64_t p;
  unsigned long mu;
  NumberFieldElement lambda;
};

namespace detail {

inline void check_weight(const NumberFieldElement& lambda) {
  if (lambda.is_zero()) throw domain_error("weight lambda must be nonzero");
  if (lambda.is_one()) throw domain_error("weight lambda must not be 1");
}

// lambda/(lambda-1)^2
inline NumberFieldElement tail_unit(const NumberFieldElement& lambda) {
  NumberFieldElement d = lambda - Rat(1);
  return lambda * pow(inverse(d), 2);
}

}  // namespace detail

inline NumberFieldElement weighted_power_sum_from_apery(
    const PAperySet& ap, unsigned long mu, const NumberFieldElement& lambda) {
  detail::check_weight(lambda);
  if (mu == 0) throw domain_error("weighted power sum needs mu >= 1");
  const std::vector<Int>& mod = lambda.modulus();
  const std::uint64_t a1 = ap.generators().a1();
  const NumberFieldElement one = NumberFieldElement::one_in(mod);
  const NumberFieldElement la1 = pow(lambda, a1);
  if (la1 == one)
    throw precondition_error(
        "weight is an a1-th root of unity; this path needs lambda^a1 != 1 "
        "(the root-of-unity sum covers lambda^a1 = 1, mu = 1 only)");

  std::vector<NumberFieldElement> lam_m;
  lam_m.reserve(a1);
  for (std::uint64_t v : ap.values()) lam_m.push_back(pow(lambda, v));

  std::vector<NumberFieldElement> la1_pow{one};
  for (unsigned long j = 1; j <= mu; ++j)
    la1_pow.push_back(la1_pow.back() * la1);

  const NumberFieldElement invL = inverse(la1 - Rat(1));
  NumberFieldElement invL_pow = invL;  // invL^{n+1}
  NumberFieldElement total = NumberFieldElement::zero_in(mod);
  for (unsigned long n = 0; n <= mu; ++n) {
    NumberFieldElement euler_block = NumberFieldElement::zero_in(mod);
    for (unsigned long j = (n == 0 ? 0 : 1); j <= n; ++j)
      euler_block += Rat(eulerian(n, n - j)) * la1_pow[j];
    NumberFieldElement apery_block = NumberFieldElement::zero_in(mod);
    if (n == mu) {
      for (std::uint64_t i = 0; i < a1; ++i) apery_block += lam_m[i];
    } else {
      for (std::uint64_t i = 0; i < a1; ++i)
        apery_block += Rat(int_pow(Int(ap.values()[i]), mu - n)) * lam_m[i];
    }
    Rat coeff = Rat(binomial(mu, n)) * rat_pow(Rat(-Int(a1)), n);
    total += coeff * (invL_pow * euler_block * apery_block);
    if (n < mu) invL_pow *= invL;
  }

  // (-1)^{mu+1}/(lambda-1)^{mu+1} * sum_{j=1}^{mu} <mu, mu-j> lambda^j
  NumberFieldElement tail = NumberFieldElement::zero_in(mod);
  NumberFieldElement lpow = one;
  for (unsigned long j = 1; j <= mu; ++j) {
    lpow *= lambda;
    tail += Rat(eulerian(mu, mu - j)) * lpow;
  }
  Rat sign((mu + 1) % 2 == 0 ? 1 : -1);
  total += sign * (pow(inverse(lambda - Rat(1)), mu + 1) * tail);
  return total;
}

inline NumberFieldElement weighted_power_sum(const WeightedSumRequest& req) {
  return weighted_power_sum_from_apery(PAperySet(req.gens, req.p), req.mu,
                                       req.lambda);
}

inline NumberFieldElement weighted_sum_mu1_from_apery(
    const PAperySet& ap, const NumberFieldElement& lambda) {
  detail::check_weight(lambda);
  const std::vector<Int>& mod = lambda.modulus();
  const std::uint64_t a1 = ap.generators().a1();
  const NumberFieldElement one = NumberFieldElement::one_in(mod);
  const NumberFieldElement la1 = pow(lambda, a1);
  if (la1 == one)
    throw precondition_error(
        "weight is an a1-th root of unity; use the root-of-unity sum");
  NumberFieldElement s1 = NumberFieldElement::zero_in(mod);
  NumberFieldElement s0 = NumberFieldElement::zero_in(mod);
  for (std::uint64_t v : ap.values()) {
    NumberFieldElement lam = pow(lambda, v);
    s1 += Rat(Int(v)) * lam;
    s0 += lam;
  }
  const NumberFieldElement invL = inverse(la1 - Rat(1));
  return invL * s1 - Rat(a1) * (la1 * pow(invL, 2) * s0) +
         detail::tail_unit(lambda);
}

inline NumberFieldElement weighted_sum_mu1(const Generators& gens,
                                           std::uint64_t p,
                                           const NumberFieldElement& lambda) {
  return weighted_sum_mu1_from_apery(PAperySet(gens, p), lambda);
}

inline NumberFieldElement weighted_sum_lambda_root_from_apery(
    const PAperySet& ap, const NumberFieldElement& lambda) {
  detail::check_weight(lambda);
  const std::vector<Int>& mod = lambda.modulus();
  const std::uint64_t a1 = ap.generators().a1();
  const NumberFieldElement one = NumberFieldElement::one_in(mod);
  if (pow(lambda, a1) != one)
    throw precondition_error(
        "this path needs lambda^a1 = 1; use the general weighted sum");
  // lambda^i indexed by residue class i, not by m_i
  NumberFieldElement s2 = NumberFieldElement::zero_in(mod);
  NumberFieldElement s1 = NumberFieldElement::zero_in(mod);
  NumberFieldElement lp = one;
  for (std::uint64_t i = 0; i < a1; ++i) {
    Int m(ap.values()[i]);
    s2 += Rat(m * m) * lp;
    s1 += Rat(m) * lp;
    lp *= lambda;
  }
  return make_rat(Int(1), 2 * Int(a1)) * s2 - Rat(1, 2) * s1 +
         detail::tail_unit(lambda);
}

inline NumberFieldElement weighted_sum_lambda_root(
    const Generators& gens, std::uint64_t p,
    const NumberFieldElement& lambda) {
  return weighted_sum_lambda_root_from_apery(PAperySet(gens, p), lambda);
}

// lambda = -1 with odd a1, as a plain rational
inline Rat alternating_from_apery(const PAperySet& ap) {
  std::uint64_t a1 = ap.generators().a1();
  if (a1 % 2 == 0)
    throw precondition_error("alternating sum needs odd a1, got " +
                             std::to_string(a1));
  Int signed_sum(0), sign_count(0);
  for (std::uint64_t v : ap.values()) {
    if (v % 2 == 0) {
      signed_sum += Int(v);
      sign_count += 1;
    } else {
      signed_sum -= Int(v);
      sign_count -= 1;
    }
  }
  return -Rat(signed_sum) / 2 + Rat(a1) * Rat(sign_count) / 4 - Rat(1, 4);
}

inline Rat alternating_sum(const Generators& gens, std::uint64_t p) {
  return alternating_from_apery(PAperySet(gens, p));
}

namespace detail {

// s_{lambda,p}(x,y) with lambda^y = 1 and lambda^x != 1:
//   xy((2p+1)x - 1)/(2(lambda^x - 1)) - x^2 lambda^x/(lambda^x - 1)^2
//   + lambda/(lambda-1)^2
inline NumberFieldElement weighted_two_gen_root(std::uint64_t x,
                                                std::uint64_t y,
                                                std::uint64_t p,
                                                const NumberFieldElement& lambda,
                                                const NumberFieldElement& lx) {
  NumberFieldElement invX = inverse(lx - Rat(1));
  Rat c1 = Rat(Int(x) * Int(y)) * Rat((2 * Int(p) + 1) * Int(x) - 1) / 2;
  Rat c2(Int(x) * Int(x));
  return c1 * invX - c2 * (lx * pow(invX, 2)) + tail_unit(lambda);
}

}  // namespace detail

inline NumberFieldElement weighted_two_gen(std::uint64_t a, std::uint64_t b,
                                           std::uint64_t p,
                                           const NumberFieldElement& lambda) {
  if (a == 0 || b == 0) throw domain_error("generators must be positive");
  if (std::gcd(a, b) != 1)
    throw coprimality_error("weighted_two_gen needs gcd(a,b) = 1, got " +
                            std::to_string(std::gcd(a, b)));
  detail::check_weight(lambda);
  const std::vector<Int>& mod = lambda.modulus();
  const NumberFieldElement one = NumberFieldElement::one_in(mod);
  const NumberFieldElement la = pow(lambda, a);
  const NumberFieldElement lb = pow(lambda, b);
  const bool root_a = (la == one), root_b = (lb == one);
  if (root_a && root_b)
    throw consistency_error(
        "lambda^a = lambda^b = 1 with coprime a, b forces lambda = 1");
  if (root_b) return detail::weighted_two_gen_root(a, b, p, lambda, la);
  if (root_a) return detail::weighted_two_gen_root(b, a, p, lambda, lb);

  // product form: lambda/(lambda-1)^2
  //   + ab lambda^{pab}((p+1)lambda^{ab} - p) / ((lambda^a-1)(lambda^b-1))
  //   - lambda^{pab}(lambda^{ab}-1)((a+b)lambda^{a+b} - a lambda^a - b lambda^b)
  //     / ((lambda^a-1)^2 (lambda^b-1)^2)
  unsigned long ab = static_cast<unsigned long>(
      to_u64(Int(a) * Int(b), "weight exponent a*b"));
  unsigned long pab = static_cast<unsigned long>(
      to_u64(Int(p) * Int(a) * Int(b), "weight exponent p*a*b"));
  const NumberFieldElement lab = pow(lambda, ab);
  const NumberFieldElement lpab = pow(lambda, pab);
  const NumberFieldElement invA = inverse(la - Rat(1));
  const NumberFieldElement invB = inverse(lb - Rat(1));
  NumberFieldElement mid =
      Rat(Int(a) * Int(b)) *
      (lpab * (Rat(Int(p) + 1) * lab - Rat(Int(p))) * invA * invB);
  NumberFieldElement corr =
      lpab * (lab - Rat(1)) *
      (Rat(Int(a) + Int(b)) * (la * lb) - Rat(Int(a)) * la - Rat(Int(b)) * lb) *
      pow(invA, 2) * pow(invB, 2);
  return detail::tail_unit(lambda) + mid - corr;
}

}  // namespace pfrob
