#pragma once

#include "mixprof/symfunc/partition.hpp"

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace mixprof {

/// One-line notation on {0, ..., n-1}: p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// (a * b)(i) = a(b(i)).
inline Perm compose(std::span<const int> a, std::span<const int> b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline Perm inverse(std::span<const int> p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

inline int fixed_points(std::span<const int> p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p[i] == static_cast<int>(i);
  return c;
}

/// Cycle lengths, sorted decreasing.
inline std::vector<int> cycle_lengths(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

inline symfunc::CycleType cycle_type(std::span<const int> p) {
  return symfunc::CycleType(symfunc::Partition(cycle_lengths(p)));
}

/// Injective 64-bit key of the cycle type (n <= 15): counts of each length packed in 4 bits.
inline std::uint64_t cycle_type_key(std::span<const int> p) {
  std::uint64_t key = 0;
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen >> i & 1U) continue;
    int len = 0;
    for (std::size_t j = i; !(seen >> j & 1U); j = static_cast<std::size_t>(p[j])) {
      seen |= std::uint64_t{1} << j;
      ++len;
    }
    key += std::uint64_t{1} << (4 * (len - 1));
  }
  return key;
}

inline std::uint64_t cycle_type_key(const symfunc::CycleType& mu) {
  std::uint64_t key = 0;
  for (int len : mu.parts()) key += std::uint64_t{1} << (4 * (len - 1));
  return key;
}

}  // namespace mixprof
