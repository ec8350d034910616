#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pfrob/generators.hpp"
#include "pfrob/rational.hpp"

namespace pfrob {

/* d(n): number of representations n = sum x_i a_i with x_i >= 0.
 * Coin-counting DP, one pass per generator; counts[0] = 1 (empty sum).
 */
class DenumerantTable {
 public:
  // cap on table cells so a huge bound fails loudly instead of thrashing
  static constexpr std::uint64_t kMaxCells = std::uint64_t(1) << 25;

  DenumerantTable(Generators gens, std::uint64_t bound)
      : gens_(std::move(gens)) {
    if (bound + 1 > kMaxCells)
      throw domain_error("denumerant table bound " + std::to_string(bound) +
                         " exceeds the supported size");
    counts_.assign(bound + 1, Int(0));
    counts_[0] = 1;
    for (std::uint64_t a : gens_.values())
      for (std::uint64_t n = a; n <= bound; ++n) counts_[n] += counts_[n - a];
  }

  const Generators& generators() const { return gens_; }
  std::uint64_t bound() const { return counts_.size() - 1; }

  const Int& at(std::uint64_t n) const {
    if (n >= counts_.size())
      throw domain_error("denumerant index " + std::to_string(n) +
                         " beyond table bound " + std::to_string(bound()));
    return counts_[n];
  }

  const std::vector<Int>& counts() const { return counts_; }

 private:
  Generators gens_;
  std::vector<Int> counts_;
};

inline DenumerantTable denumerant_table(const Generators& gens,
                                        std::uint64_t bound) {
  return DenumerantTable(gens, bound);
}

inline Int denumerant(std::int64_t n, const Generators& gens) {
  if (n < 0) return Int(0);
  return DenumerantTable(gens, static_cast<std::uint64_t>(n)).at(
      static_cast<std::uint64_t>(n));
}

inline bool is_in_Sp(std::int64_t n, const Generators& gens, std::uint64_t p) {
  if (n < 0) return false;
  return denumerant(n, gens) > p;
}

}  // namespace pfrob
