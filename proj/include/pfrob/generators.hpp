#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "pfrob/errors.hpp"

namespace pfrob {

/* Validated generator tuple (a_1, ..., a_k): sorted ascending, distinct,
 * all >= 1, k >= 2, gcd 1.  a_1 = min is the modulus for Apery scans.
 * Duplicates are rejected, not merged: d(n) depends on the multiset.
 */
class Generators {
 public:
  explicit Generators(std::vector<std::uint64_t> raw) : values_(std::move(raw)) {
    if (values_.size() < 2)
      throw domain_error("need at least 2 generators, got " +
                         std::to_string(values_.size()));
    for (std::uint64_t a : values_)
      if (a == 0) throw domain_error("generator 0 is not allowed");
    std::sort(values_.begin(), values_.end());
    for (std::size_t i = 0; i + 1 < values_.size(); ++i)
      if (values_[i] == values_[i + 1])
        throw domain_error("duplicate generator " +
                           std::to_string(values_[i]));
    std::uint64_t g = 0;
    for (std::uint64_t a : values_) g = std::gcd(g, a);
    if (g != 1)
      throw coprimality_error("generators have gcd " + std::to_string(g) +
                              ", expected 1");
  }

  const std::vector<std::uint64_t>& values() const { return values_; }
  std::uint64_t a1() const { return values_.front(); }
  std::size_t count() const { return values_.size(); }

  bool operator==(const Generators& o) const { return values_ == o.values_; }

  std::string to_string() const {
    std::string s;
    for (std::uint64_t a : values_) {
      if (!s.empty()) s += ",";
      s += std::to_string(a);
    }
    return s;
  }

 private:
  std::vector<std::uint64_t> values_;
};

inline Generators validate_generators(const std::vector<std::uint64_t>& raw) {
  return Generators(raw);
}

}  // namespace pfrob
