#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfrob/denumerant.hpp"
#include "pfrob/generators.hpp"
#include "pfrob/rational.hpp"

namespace pfrob {

/* p-Apery set mod a_1: m[i] is the least n ≡ i (mod a_1) with d(n) >= p+1,
 * equivalently the least n ≡ i in S_p (d is non-decreasing along a residue
 * class: adding one copy of a_1 injects representations).
 */
class PAperySet {
 public:
  PAperySet(Generators gens, std::uint64_t p)
      : gens_(std::move(gens)), p_(p) {
    std::uint64_t a1 = gens_.a1();
    std::uint64_t a2 = gens_.values()[1];
    // initial DP bound (p+2)*a1*a2: for a coprime pair this already covers
    // max m_i; otherwise double until every residue class is filled
    Int bound = (Int(p) + 2) * a1 * a2;
    m_.assign(a1, 0);
    std::vector<bool> found(a1, false);
    std::size_t missing = a1;
    std::uint64_t scanned_from = 0;
    while (missing > 0) {
      DenumerantTable table(gens_, to_u64(bound, "apery scan bound"));
      for (std::uint64_t i = 0; i < a1; ++i) {
        if (found[i]) continue;
        std::uint64_t start = i;
        if (scanned_from > 0)
          start = i + ((scanned_from - i + a1 - 1) / a1) * a1;
        for (std::uint64_t n = start; n <= table.bound(); n += a1) {
          if (table.at(n) > p_) {
            m_[i] = n;
            found[i] = true;
            --missing;
            break;
          }
        }
      }
      scanned_from = to_u64(bound, "apery scan bound") + 1;
      bound *= 2;
    }
  }

  const Generators& generators() const { return gens_; }
  std::uint64_t p() const { return p_; }

  // indexed by residue class: values()[i] ≡ i (mod a1)
  const std::vector<std::uint64_t>& values() const { return m_; }
  std::uint64_t at(std::size_t residue) const {
    if (residue >= m_.size())
      throw domain_error("apery residue " + std::to_string(residue) +
                         " out of range for a1 = " + std::to_string(m_.size()));
    return m_[residue];
  }

  std::uint64_t max_value() const {
    std::uint64_t r = 0;
    for (std::uint64_t v : m_)
      if (v > r) r = v;
    return r;
  }

  Int sum_pow(unsigned long mu) const {
    Int acc(0);
    for (std::uint64_t v : m_) acc += int_pow(Int(v), mu);
    return acc;
  }

 private:
  Generators gens_;
  std::uint64_t p_;
  std::vector<std::uint64_t> m_;
};

inline PAperySet apery_set(const Generators& gens, std::uint64_t p) {
  return PAperySet(gens, p);
}

}  // namespace pfrob
