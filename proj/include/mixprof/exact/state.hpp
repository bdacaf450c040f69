#pragma once

#include "mixprof/core.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace mixprof::exact {

inline constexpr std::int64_t kStateSpaceMax = 10'000'000;

/// (n)_k as a 64-bit count, saturating just above the guard.
inline std::int64_t state_count(int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    if (r > kStateSpaceMax * 100) return kStateSpaceMax * 100;
  }
  return r;
}

/// Lexicographic ranking of injective k-tuples (site of particle 1, ...,
/// site of particle k) over sites {0, ..., n-1}. Rank 0 is (0, 1, ..., k-1).
class StateIndex {
 public:
  StateIndex(int n, int k) : n_(n), k_(k) {
    require(n >= 1 && k >= 0 && k <= n, "state index: need 0 <= k <= n");
    if (state_count(n, k) > kStateSpaceMax)
      throw CapabilityError("state space (n)_k = " + falling(n, k).str() + " exceeds the 10^7 guard");
    size_ = state_count(n, k);
    stride_.assign(static_cast<std::size_t>(k), 1);
    for (int i = k - 2; i >= 0; --i) stride_[static_cast<std::size_t>(i)] = stride_[static_cast<std::size_t>(i) + 1] * (n - i - 1);
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::int64_t size() const { return size_; }

  std::int64_t rank(const std::vector<int>& sites) const {
    std::int64_t r = 0;
    std::uint64_t used = 0;
    for (int i = 0; i < k_; ++i) {
      const int s = sites[static_cast<std::size_t>(i)];
      int below = 0;
      if (n_ <= 64) {
        below = std::popcount(used & ((std::uint64_t{1} << s) - 1));
        used |= std::uint64_t{1} << s;
      } else {
        for (int j = 0; j < i; ++j) below += sites[static_cast<std::size_t>(j)] < s;
      }
      r += static_cast<std::int64_t>(s - below) * stride_[static_cast<std::size_t>(i)];
    }
    return r;
  }

  std::vector<int> unrank(std::int64_t r) const {
    std::vector<int> sites(static_cast<std::size_t>(k_));
    std::vector<bool> used(static_cast<std::size_t>(n_), false);
    for (int i = 0; i < k_; ++i) {
      auto digit = static_cast<int>(r / stride_[static_cast<std::size_t>(i)]);
      r %= stride_[static_cast<std::size_t>(i)];
      int s = 0;
      for (;; ++s) {
        if (used[static_cast<std::size_t>(s)]) continue;
        if (digit-- == 0) break;
      }
      sites[static_cast<std::size_t>(i)] = s;
      used[static_cast<std::size_t>(s)] = true;
    }
    return sites;
  }

 private:
  int n_;
  int k_;
  std::int64_t size_ = 0;
  std::vector<std::int64_t> stride_;
};

}  // namespace mixprof::exact
