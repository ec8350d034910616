#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfrob/apery.hpp"
#include "pfrob/denumerant.hpp"
#include "pfrob/generators.hpp"
#include "pfrob/number_field.hpp"
#include "pfrob/power_sums.hpp"
#include "pfrob/rational.hpp"
#include "pfrob/weighted_sums.hpp"

namespace pfrob {

/* Brute-force side: enumerate the complement of S_p (all n >= 1 with
 * d(n) <= p) by direct denumerant scanning, then evaluate every sum by
 * adding terms.  No closed forms anywhere on this path, so it serves as an
 * independent check of them.
 */

class ComplementSet {
 public:
  // Scan stops once a1 consecutive n all have d(n) > p: representations
  // only gain options when n grows by a1, so d(n + a1) >= d(n) for every n
  // and no later n can fall back to d <= p.
  ComplementSet(Generators gens, std::uint64_t p)
      : gens_(std::move(gens)), p_(p) {
    const std::uint64_t a1 = gens_.a1();
    const std::uint64_t a2 = gens_.values()[1];
    std::uint64_t bound =
        to_u64((Int(p_) + 2) * Int(a1) * Int(a2), "complement scan bound");
    for (;;) {
      DenumerantTable table(gens_, bound);
      elements_.clear();
      std::uint64_t consecutive = 0;
      for (std::uint64_t n = 1; n <= table.bound(); ++n) {
        if (table.at(n) <= p_) {
          elements_.push_back(n);
          consecutive = 0;
        } else if (++consecutive == a1) {
          return;
        }
      }
      bound *= 2;
    }
  }

  const Generators& generators() const { return gens_; }
  std::uint64_t p() const { return p_; }
  // ascending, all >= 1
  const std::vector<std::uint64_t>& elements() const { return elements_; }

 private:
  Generators gens_;
  std::uint64_t p_;
  std::vector<std::uint64_t> elements_;
};

inline ComplementSet complement_set(const Generators& gens, std::uint64_t p) {
  return ComplementSet(gens, p);
}

// max of the complement; -1 when it is empty
inline Int brute_frobenius(const ComplementSet& cs) {
  return cs.elements().empty() ? Int(-1) : Int(cs.elements().back());
}

inline Int brute_genus(const ComplementSet& cs) {
  return Int(cs.elements().size());
}

inline Int brute_power_sum(const ComplementSet& cs, unsigned long mu) {
  if (mu == 0) return brute_genus(cs);
  Int acc(0);
  for (std::uint64_t v : cs.elements()) acc += int_pow(Int(v), mu);
  return acc;
}

inline Rat brute_alternating(const ComplementSet& cs) {
  Int acc(0);
  for (std::uint64_t v : cs.elements()) {
    if (v % 2 == 0)
      acc += Int(v);
    else
      acc -= Int(v);
  }
  return Rat(acc);
}

inline NumberFieldElement brute_weighted_sum(const ComplementSet& cs,
                                             unsigned long mu,
                                             const NumberFieldElement& lambda) {
  NumberFieldElement acc = NumberFieldElement::zero_in(lambda.modulus());
  for (std::uint64_t v : cs.elements())
    acc += Rat(int_pow(Int(v), mu)) * pow(lambda, v);
  return acc;
}

struct VerificationCheck {
  std::string name;
  std::string formula;  // closed-form value, rendered
  std::string oracle;   // brute-force value, rendered
  bool match;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool all_match() const {
    for (const VerificationCheck& c : checks)
      if (!c.match) return false;
    return true;
  }
};

// Run every closed form that applies against its brute counterpart.
// Weighted checks follow the same routing as evaluation: mu = 1 goes through
// the dedicated path (root-of-unity or not), mu >= 2 through the general one
// (which needs lambda^a1 != 1).  Weights 0 and 1 are skipped outright.
inline VerificationReport verify(const Generators& gens, std::uint64_t p,
                                 const std::vector<unsigned long>& mus,
                                 const std::vector<NumberFieldElement>& lambdas) {
  VerificationReport rep;
  PAperySet ap(gens, p);
  ComplementSet cs(gens, p);
  auto add_int = [&rep](const std::string& name, const Int& f, const Int& o) {
    rep.checks.push_back({name, f.get_str(), o.get_str(), f == o});
  };

  add_int("frobenius", frobenius_from_apery(ap), brute_frobenius(cs));
  add_int("genus", genus_from_apery(ap), brute_genus(cs));
  add_int("sylvester_sum", sylvester_from_apery(ap), brute_power_sum(cs, 1));
  for (unsigned long mu : mus)
    add_int("power_sum mu=" + std::to_string(mu), power_sum_from_apery(ap, mu),
            brute_power_sum(cs, mu));

  const std::uint64_t a1 = gens.a1();
  for (const NumberFieldElement& lambda : lambdas) {
    if (lambda.is_zero() || lambda.is_one()) continue;
    const bool root =
        pow(lambda, a1) == NumberFieldElement::one_in(lambda.modulus());
    for (unsigned long mu : mus) {
      if (mu == 0) continue;
      if (root && mu != 1) continue;  // no closed form on this path
      NumberFieldElement f =
          root ? weighted_sum_lambda_root_from_apery(ap, lambda)
               : (mu == 1 ? weighted_sum_mu1_from_apery(ap, lambda)
                          : weighted_power_sum_from_apery(ap, mu, lambda));
      NumberFieldElement o = brute_weighted_sum(cs, mu, lambda);
      rep.checks.push_back({"weighted_sum mu=" + std::to_string(mu) +
                                " lambda=" + lambda.to_string(),
                            f.to_string(), o.to_string(), f == o});
    }
  }

  if (a1 % 2 == 1) {
    Rat f = alternating_from_apery(ap);
    Rat o = brute_alternating(cs);
    rep.checks.push_back({"alternating_sum", f.get_str(), o.get_str(), f == o});
  }
  return rep;
}

}  // namespace pfrob
