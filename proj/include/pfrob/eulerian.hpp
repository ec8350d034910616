#pragma once

#include <cstddef>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "pfrob/rational.hpp"

namespace pfrob {

/* Eulerian numbers <n m>, computed row by row from the explicit formula
 *   <n m> = sum_{k=0}^{m} (-1)^k C(n+1,k) (m-k+1)^n.
 * Row n has entries m = 0..n-1 for n >= 1; row 0 is the single entry
 * <0 0> = 1.  Note <n n> = 0 for n >= 1, so asking for it is treated as a
 * range error rather than silently returning 0.
 */
class EulerianCache {
 public:
  EulerianCache() { rows_.push_back({Int(1)}); }

  Int at(std::size_t n, std::size_t m) {
    std::size_t width = (n == 0) ? 1 : n;
    if (m >= width)
      throw domain_error("eulerian index out of range: m = " +
                         std::to_string(m) + " in row n = " +
                         std::to_string(n));
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][m];
    }
    std::unique_lock lock(mutex_);
    extend(n);
    return rows_[n][m];
  }

  void warm_up(std::size_t n) {
    std::unique_lock lock(mutex_);
    extend(n);
  }

 private:
  // caller holds the exclusive lock
  void extend(std::size_t n) {
    while (rows_.size() <= n) {
      std::size_t r = rows_.size();
      std::vector<Int> row(r);
      for (std::size_t m = 0; m < r; ++m) {
        Int acc(0);
        for (std::size_t k = 0; k <= m; ++k) {
          Int term = binomial(r + 1, k) * int_pow(m - k + 1, r);
          if (k % 2 == 0)
            acc += term;
          else
            acc -= term;
        }
        row[m] = acc;
      }
      rows_.push_back(std::move(row));
    }
  }

  std::deque<std::vector<Int>> rows_;
  std::shared_mutex mutex_;
};

inline Int eulerian(std::size_t n, std::size_t m) {
  static EulerianCache cache;
  return cache.at(n, m);
}

}  // namespace pfrob
