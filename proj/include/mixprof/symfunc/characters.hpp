#pragma once

#include "mixprof/symfunc/partition.hpp"

#include <map>
#include <ostream>
#include <unordered_map>
#include <utility>

namespace mixprof::symfunc {

/// Murnaghan--Nakayama evaluator with a memo shared across calls.
///
/// Border strips are removed through the beta-set (first-column hook)
/// encoding: a strip of length h corresponds to sliding a bead from x to
/// x - h, with sign (-1)^(beads jumped). Cycle parts are consumed largest
/// first; once only 1-cycles remain the value is the number of standard
/// tableaux, so the memo key is (shape, cycle type without its 1s).
class CharacterEvaluator {
 public:
  Integer operator()(const Partition& lambda, const CycleType& mu) {
    if (lambda.size() != mu.size())
      throw PreconditionError("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                              " but |mu| = " + std::to_string(mu.size()));
    std::vector<int> big;
    for (int p : mu.parts())
      if (p > 1) big.push_back(p);
    return eval(lambda.parts(), big, 0);
  }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  Integer eval(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t pos) {
    if (pos == cycles.size()) return dim_hook(Partition(shape));
    Key key{shape, std::vector<int>(cycles.begin() + static_cast<std::ptrdiff_t>(pos), cycles.end())};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int h = cycles[pos];
    const int len = static_cast<int>(shape.size());
    // beads[i] = shape[i] + len - 1 - i, strictly decreasing
    std::vector<int> beads(shape.size());
    for (int i = 0; i < len; ++i) beads[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + len - 1 - i;

    Integer total = 0;
    for (int i = 0; i < len; ++i) {
      const int x = beads[static_cast<std::size_t>(i)];
      const int y = x - h;
      if (y < 0) continue;
      if (std::find(beads.begin(), beads.end(), y) != beads.end()) continue;
      int jumped = 0;
      for (int b : beads)
        if (b > y && b < x) ++jumped;
      std::vector<int> moved = beads;
      moved[static_cast<std::size_t>(i)] = y;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> next;
      for (int j = 0; j < len; ++j) {
        const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
        if (part > 0) next.push_back(part);
      }
      Integer v = eval(next, cycles, pos + 1);
      if (jumped % 2) total -= v;
      else total += v;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::map<Key, Integer> memo_;
};

/// chi_lambda(mu), exact.
inline Integer mn_character(const Partition& lambda, const CycleType& mu) {
  CharacterEvaluator eval;
  return eval(lambda, mu);
}

inline constexpr int kCharacterTableMaxN = 20;

/// Full character table of S_n; both axes in canonical partition order.
class CharacterTable {
 public:
  explicit CharacterTable(int n) : n_(n) {
    if (n < 1 || n > kCharacterTableMaxN)
      throw CapabilityError("character_table: n = " + std::to_string(n) + " outside supported range 1.." +
                            std::to_string(kCharacterTableMaxN));
    irreps_ = enumerate_partitions(n);
    for (const auto& p : irreps_) classes_.emplace_back(p);
    for (std::size_t i = 0; i < irreps_.size(); ++i) index_.emplace(irreps_[i], i);
    CharacterEvaluator eval;
    values_.resize(irreps_.size());
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
      values_[i].reserve(classes_.size());
      for (const auto& mu : classes_) values_[i].push_back(eval(irreps_[i], mu));
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return irreps_.size(); }
  const std::vector<Partition>& irreps() const { return irreps_; }
  const std::vector<CycleType>& classes() const { return classes_; }
  const Integer& at(std::size_t irrep, std::size_t cls) const { return values_[irrep][cls]; }

  /// Row or column index of a partition in canonical order.
  std::size_t index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw PreconditionError("partition " + p.to_string() + " is not a partition of " + std::to_string(n_));
    return it->second;
  }

  /// Debug dump: header row of class labels, one row per irrep.
  void write_csv(std::ostream& os) const {
    os << "lambda";
    for (const auto& mu : classes_) os << ",\"" << mu.to_string() << "\"";
    os << "\n";
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
      os << "\"" << irreps_[i].to_string() << "\"";
      for (const auto& v : values_[i]) os << "," << v;
      os << "\n";
    }
  }

 private:
  int n_;
  std::vector<Partition> irreps_;
  std::vector<CycleType> classes_;
  std::unordered_map<Partition, std::size_t> index_;
  std::vector<std::vector<Integer>> values_;
};

inline CharacterTable character_table(int n) { return CharacterTable(n); }

}  // namespace mixprof::symfunc
