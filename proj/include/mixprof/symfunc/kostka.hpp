#pragma once

#include "mixprof/symfunc/partition.hpp"

#include <map>

namespace mixprof::symfunc {

namespace detail {

// Counts fillings value by value: the boxes holding value j form a
// horizontal strip of size a_j added to the shape filled so far. Rows stay
// weakly increasing by construction; column strictness is the strip condition
// nu_i <= mu_{i-1}.
class KostkaCounter {
 public:
  KostkaCounter(const Partition& lambda, std::vector<int> type) : target_(lambda.parts()), type_(std::move(type)) {}

  Integer count() { return fill(std::vector<int>(target_.size(), 0), 0); }

 private:
  Integer fill(const std::vector<int>& shape, std::size_t value) {
    if (value == type_.size()) return shape == target_ ? Integer(1) : Integer(0);
    auto key = std::make_pair(value, shape);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    std::vector<int> next = shape;
    strips(shape, next, 0, type_[value], value, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void strips(const std::vector<int>& shape, std::vector<int>& next, std::size_t row, int remaining, std::size_t value,
              Integer& total) {
    if (row == target_.size()) {
      if (remaining == 0) total += fill(next, value + 1);
      return;
    }
    const int cap = row == 0 ? target_[0] : std::min(target_[row], shape[row - 1]);
    const int room = cap - shape[row];
    for (int add = 0; add <= std::min(room, remaining); ++add) {
      next[row] = shape[row] + add;
      strips(shape, next, row + 1, remaining - add, value, total);
    }
    next[row] = shape[row];
  }

  std::vector<int> target_;
  std::vector<int> type_;
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

}  // namespace detail

/// Number of semistandard tableaux of shape lambda and type a (a composition).
inline Integer kostka(const Partition& lambda, const std::vector<int>& type) {
  int total = 0;
  for (int a : type) {
    require(a >= 0, "kostka: type entries must be nonnegative");
    total += a;
  }
  if (total != lambda.size())
    throw PreconditionError("kostka: |lambda| = " + std::to_string(lambda.size()) + " but type sums to " +
                            std::to_string(total));
  detail::KostkaCounter counter(lambda, type);
  return counter.count();
}

/// Standard tableaux of skew shape lambda / mu, by the Aitken determinant
/// N! det[1 / (lambda_i - mu_j - i + j)!].
inline Integer skew_standard_count(const Partition& lambda, const Partition& mu) {
  const int len = lambda.length();
  require(mu.length() <= len, "skew shape: mu must fit inside lambda");
  for (int i = 0; i < mu.length(); ++i) require(mu[i] <= lambda[i], "skew shape: mu must fit inside lambda");
  const int boxes = lambda.size() - mu.size();
  if (len == 0) return 1;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(len), std::vector<Rational>(static_cast<std::size_t>(len)));
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) {
      const int e = lambda[i] - mu[j] - i + j;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e < 0 ? Rational(0) : Rational(1) / Rational(factorial(e));
    }
  Rational det = 1;
  for (int c = 0; c < len; ++c) {
    int piv = c;
    while (piv < len && a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)] == 0) ++piv;
    if (piv == len) return 0;
    if (piv != c) {
      std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const Rational p = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    det *= p;
    for (int r = c + 1; r < len; ++r) {
      const Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / p;
      if (f == 0) continue;
      for (int j = c; j < len; ++j)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
    }
  }
  const Rational v = det * Rational(factorial(boxes));
  return boost::multiprecision::numerator(v);
}

}  // namespace mixprof::symfunc
