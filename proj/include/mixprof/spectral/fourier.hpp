#pragma once

#include "mixprof/permutation.hpp"
#include "mixprof/spectral/irreps.hpp"
#include "mixprof/symfunc/characters.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

namespace mixprof::spectral {

inline constexpr int kFourierMaxN = 9;

/// Exact evaluation of
///   (1/|G|) sum_g | (1/|K|) sum_kappa sum_{lambda in S} d_lambda q_lambda^t chi_lambda(g kappa) |
/// for G = S_n and K the Young subgroup of the colour blocks.
///
/// The inner average depends on g only through its coset gK, and the
/// summand only through the cycle type of g kappa. Construction enumerates
/// one representative per coset and every kappa in K (n! products in total)
/// and records, per coset, how many products land in each conjugacy class.
/// Identical histograms are merged with a weight.
class FourierEvaluator {
 public:
  explicit FourierEvaluator(const ProcessSpec& spec) : spec_(spec), table_(check_guard(spec)) {
    for (std::size_t c = 0; c < table_.classes().size(); ++c) class_index_.emplace(cycle_type_key(table_.classes()[c]), c);
    for (const auto& lambda : table_.irreps()) {
      depth_.push_back(lambda.depth());
      dim_.push_back(to_double(table_.at(table_.index_of(lambda), table_.size() - 1)));
      ratio_.push_back(to_double(char_ratio_exact(lambda)));
      auto& row = chi_.emplace_back();
      for (std::size_t c = 0; c < table_.classes().size(); ++c) row.push_back(to_double(table_.at(chi_.size() - 1, c)));
    }
    build_blocks(spec.colours());
    enumerate_subgroup();
    enumerate_cosets();
  }

  const ProcessSpec& spec() const { return spec_; }
  std::size_t coset_count() const { return coset_count_; }
  std::size_t distinct_profiles() const { return rows_.size(); }

  /// Same expectation with an arbitrary irrep subset S of the nontrivial irreps.
  double evaluate(int t, const std::function<bool(const Partition&)>& in_set) const {
    require(t >= 0, "fourier: t must be nonnegative");
    const std::size_t classes = table_.classes().size();
    std::vector<double> psi(classes, 0.0);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (depth_[i] == 0 || !in_set(table_.irreps()[i])) continue;
      const double w = dim_[i] * std::pow(ratio_[i], t);
      for (std::size_t c = 0; c < classes; ++c) psi[c] += w * chi_[i][c];
    }
    const double k_order = static_cast<double>(subgroup_.size());
    double total = 0.0;
    for (const auto& [hist, weight] : rows_) {
      double inner = 0.0;
      for (std::size_t c = 0; c < classes; ++c)
        if (hist[c]) inner += static_cast<double>(hist[c]) * psi[c];
      total += static_cast<double>(weight) * std::fabs(inner / k_order);
    }
    return total / static_cast<double>(coset_count_);
  }

  /// l1 distance of the walk at time t (twice the TV distance).
  double l1(int t) const {
    return evaluate(t, [](const Partition&) { return true; });
  }

  /// MT_t with S = {lambda : 1 <= n - lambda_1 <= M}.
  double main_term(int t, int big_m) const {
    const ApproxSplit split(big_m);
    return evaluate(t, [&](const Partition& p) { return split.in_main(p.depth()); });
  }

 private:
  static int check_guard(const ProcessSpec& spec) {
    if (spec.n() > kFourierMaxN)
      throw CapabilityError("fourier evaluation enumerates S_n; needs n <= " + std::to_string(kFourierMaxN) +
                            " (got n = " + std::to_string(spec.n()) + ")");
    return spec.n();
  }

  void build_blocks(const std::vector<int>& colours) {
    int start = 0;
    for (int a : colours) {
      if (a > 0) blocks_.push_back({start, a});
      start += a;
    }
  }

  void enumerate_subgroup() {
    const int n = spec_.n();
    subgroup_.push_back(identity_perm(n));
    for (const auto& [start, size] : blocks_) {
      if (size < 2) continue;
      std::vector<Perm> next;
      std::vector<int> local(static_cast<std::size_t>(size));
      std::iota(local.begin(), local.end(), 0);
      std::vector<std::vector<int>> block_perms;
      do block_perms.push_back(local);
      while (std::next_permutation(local.begin(), local.end()));
      for (const auto& base : subgroup_)
        for (const auto& bp : block_perms) {
          Perm p = base;
          for (int i = 0; i < size; ++i) p[static_cast<std::size_t>(start + i)] = start + bp[static_cast<std::size_t>(i)];
          next.push_back(std::move(p));
        }
      subgroup_ = std::move(next);
    }
  }

  void enumerate_cosets() {
    const int n = spec_.n();
    Perm rep(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::map<std::vector<std::int64_t>, std::int64_t> merged;
    std::vector<std::int64_t> hist(table_.classes().size());
    Perm prod(static_cast<std::size_t>(n));

    std::function<void(std::size_t, int, int)> choose = [&](std::size_t block, int slot, int min_site) {
      if (block == blocks_.size()) {
        std::fill(hist.begin(), hist.end(), 0);
        for (const auto& kappa : subgroup_) {
          for (int i = 0; i < n; ++i) prod[static_cast<std::size_t>(i)] = rep[static_cast<std::size_t>(kappa[static_cast<std::size_t>(i)])];
          ++hist[class_index_.at(cycle_type_key(prod))];
        }
        ++merged[hist];
        ++coset_count_;
        return;
      }
      const auto [start, size] = blocks_[block];
      if (slot == size) {
        choose(block + 1, 0, 0);
        return;
      }
      for (int site = min_site; site < n; ++site) {
        if (used[static_cast<std::size_t>(site)]) continue;
        used[static_cast<std::size_t>(site)] = 1;
        rep[static_cast<std::size_t>(start + slot)] = site;
        choose(block, slot + 1, site + 1);
        used[static_cast<std::size_t>(site)] = 0;
      }
    };
    choose(0, 0, 0);
    rows_.assign(merged.begin(), merged.end());
  }

  ProcessSpec spec_;
  symfunc::CharacterTable table_;
  std::unordered_map<std::uint64_t, std::size_t> class_index_;
  std::vector<int> depth_;
  std::vector<double> dim_;
  std::vector<double> ratio_;
  std::vector<std::vector<double>> chi_;
  std::vector<std::pair<int, int>> blocks_;  // (first position, size)
  std::vector<Perm> subgroup_;
  std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> rows_;
  std::size_t coset_count_ = 0;
};

/// MT_t in l1 units.
inline double main_term_exact(const ProcessSpec& spec, int t, int big_m) {
  return FourierEvaluator(spec).main_term(t, big_m);
}

/// l1 distance to uniform at time t from characters alone.
inline double l1_exact_spectral(const ProcessSpec& spec, int t) { return FourierEvaluator(spec).l1(t); }

}  // namespace mixprof::spectral
