#pragma once

#include "mixprof/core.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace mixprof::symfunc {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0. Ordering is lexicographic on the parts, so
/// the canonical (reverse lexicographic) listing is descending order.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] >= 1, "partition parts must be positive");
      require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zeros; for inputs that are multisets of part sizes.
  static Partition from_multiset(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  /// 0-based row access; rows beyond the length have size 0.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  int first_row() const { return parts_.empty() ? 0 : parts_.front(); }

  /// r = n - lambda_1, the number of boxes below the first row.
  int depth() const { return n_ - first_row(); }

  /// The partition with the first row removed.
  Partition without_first_row() const {
    if (parts_.empty()) return {};
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
  }

  /// Number of parts equal to 1 (fixed points when read as a cycle type).
  int count_ones() const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// A conjugacy class of S_n, labelled by its multiset of cycle lengths.
class CycleType : public Partition {
 public:
  CycleType() = default;
  explicit CycleType(const Partition& p) : Partition(p) {}
  CycleType(std::initializer_list<int> parts) : Partition(parts) {}

  static CycleType identity(int n) { return CycleType(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))); }
  static CycleType transposition(int n) {
    require(n >= 2, "transposition class needs n >= 2");
    std::vector<int> p(static_cast<std::size_t>(n - 1), 1);
    p[0] = 2;
    return CycleType(Partition(std::move(p)));
  }

  int fixed_points() const { return count_ones(); }
};

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> enumerate_partitions(int n) {
  require(n >= 0, "enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> a{n};
  for (;;) {
    out.emplace_back(a);
    // rightmost part greater than one
    int i = static_cast<int>(a.size()) - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == 1) --i;
    if (i < 0) break;
    int rem = static_cast<int>(a.size()) - i;  // ones after i, plus the unit taken from a[i]
    const int v = --a[static_cast<std::size_t>(i)];
    a.resize(static_cast<std::size_t>(i) + 1);
    while (rem > 0) {
      const int p = std::min(v, rem);
      a.push_back(p);
      rem -= p;
    }
  }
  return out;
}

/// Partitions of n with first row exactly n - r.
inline std::vector<Partition> partitions_with_depth(int n, int r) {
  std::vector<Partition> out;
  if (r < 0 || r > n) return out;
  if (r == n) {
    if (n == 0) out.emplace_back();
    return out;
  }
  const int row = n - r;
  for (const auto& tail : enumerate_partitions(r)) {
    if (tail.first_row() > row) continue;
    std::vector<int> parts{row};
    parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
    out.emplace_back(std::move(parts));
  }
  return out;
}

inline Partition transpose(const Partition& lambda) {
  std::vector<int> t(static_cast<std::size_t>(lambda.first_row()), 0);
  for (int row : lambda.parts())
    for (int j = 0; j < row; ++j) ++t[static_cast<std::size_t>(j)];
  return Partition(std::move(t));
}

/// Hook lengths by box: hooks[i][j] for row i, column j (0-based).
inline std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  const Partition conj = transpose(lambda);
  std::vector<std::vector<int>> hooks(static_cast<std::size_t>(lambda.length()));
  for (int i = 0; i < lambda.length(); ++i) {
    auto& row = hooks[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(lambda[i]));
    for (int j = 0; j < lambda[i]; ++j) row[static_cast<std::size_t>(j)] = (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  }
  return hooks;
}

/// Dimension of the irrep via the hook-length formula.
inline Integer dim_hook(const Partition& lambda) {
  Integer prod = 1;
  for (const auto& row : hook_lengths(lambda))
    for (int h : row) prod *= h;
  return factorial(lambda.size()) / prod;
}

inline double log_dim(const Partition& lambda) {
  double s = log_factorial(lambda.size());
  for (const auto& row : hook_lengths(lambda))
    for (int h : row) s -= std::log(static_cast<double>(h));
  return s;
}

/// Centralizer order z_mu = prod_j j^{a_j} a_j!.
inline Integer centralizer_order(const CycleType& mu) {
  Integer z = 1;
  const auto& p = mu.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const int mult = static_cast<int>(j - i);
    z *= pow(Integer(p[i]), static_cast<unsigned>(mult)) * factorial(mult);
    i = j;
  }
  return z;
}

inline Integer class_size(const CycleType& mu) { return factorial(mu.size()) / centralizer_order(mu); }

}  // namespace mixprof::symfunc

template <>
struct std::hash<mixprof::symfunc::Partition> {
  std::size_t operator()(const mixprof::symfunc::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};
