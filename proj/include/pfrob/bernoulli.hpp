#pragma once

#include <cstddef>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "pfrob/rational.hpp"

namespace pfrob {

/* Bernoulli numbers B_0, B_1, ... with B_1 = -1/2, from the recurrence
 * sum_{k=0}^{n} C(n+1,k) B_k = 0.  Values are memoized; after warm_up(n)
 * concurrent reads up to index n take only a shared lock.
 */
class BernoulliCache {
 public:
  BernoulliCache() { values_.push_back(Rat(1)); }

  Rat at(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend(n);
    return values_[n];
  }

  void warm_up(std::size_t n) {
    std::unique_lock lock(mutex_);
    extend(n);
  }

 private:
  // caller holds the exclusive lock
  void extend(std::size_t n) {
    while (values_.size() <= n) {
      std::size_t m = values_.size();
      Rat acc(0);
      for (std::size_t k = 0; k < m; ++k)
        acc += Rat(binomial(m + 1, k)) * values_[k];
      values_.push_back(-acc / (m + 1));
    }
  }

  std::deque<Rat> values_;
  std::shared_mutex mutex_;
};

inline Rat bernoulli(std::size_t n) {
  static BernoulliCache cache;
  return cache.at(n);
}

inline void bernoulli_warm_up(std::size_t n) { bernoulli(n); }

}  // namespace pfrob
