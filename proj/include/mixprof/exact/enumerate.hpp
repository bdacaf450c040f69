#pragma once

#include "mixprof/permutation.hpp"
#include "mixprof/profile/laws.hpp"
#include "mixprof/profile/series.hpp"
#include "mixprof/symfunc/characters.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mixprof::exact {

inline constexpr int kEnumerateMaxN = 7;
inline constexpr int kShortCycleMaxN = 12;

/// L_sigma = #{i < m : sigma^{-1}(i) < m} (0-based), counted as #{i < m : sigma(i) < m}.
inline int l_statistic(std::span<const int> sigma, int m) {
  int c = 0;
  for (int i = 0; i < m; ++i) c += sigma[static_cast<std::size_t>(i)] < m;
  return c;
}

/// #{i >= m : sigma(i) = i}.
inline int high_fixed_points(std::span<const int> sigma, int m) {
  int c = 0;
  for (std::size_t i = static_cast<std::size_t>(m); i < sigma.size(); ++i) c += sigma[i] == static_cast<int>(i);
  return c;
}

/// Exact joint law of (L_sigma, Y_sigma, Fix(sigma pi)) over sigma in S_n
/// and pi in S_m acting on the first m indices.
struct FixJoint {
  int n = 0;
  int m = 0;
  std::map<std::tuple<int, int, int>, Integer> counts;  // (L, Y, Fix) -> count
  Integer total = 0;

  profile::ExactPmf marginal_l() const { return marginal([](const auto& key) { return std::get<0>(key); }); }
  profile::ExactPmf marginal_high() const { return marginal([](const auto& key) { return std::get<1>(key); }); }
  profile::ExactPmf marginal_fix() const { return marginal([](const auto& key) { return std::get<2>(key); }); }

  /// Law of Y given L = l.
  profile::ExactPmf high_given_l(int l) const {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    Integer mass = 0;
    for (const auto& [key, v] : counts)
      if (std::get<0>(key) == l) {
        c[static_cast<std::size_t>(std::get<1>(key))] += v;
        mass += v;
      }
    require(mass > 0, "fix joint: L = " + std::to_string(l) + " has probability zero");
    return trimmed(c, mass);
  }

 private:
  template <class Pick>
  profile::ExactPmf marginal(Pick pick) const {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (const auto& [key, v] : counts) c[static_cast<std::size_t>(pick(key))] += v;
    return trimmed(c, total);
  }

  static profile::ExactPmf trimmed(const std::vector<Integer>& c, const Integer& mass) {
    profile::ExactPmf p;
    std::size_t lo = 0, hi = c.size();
    while (lo < hi && c[lo] == 0) ++lo;
    while (hi > lo && c[hi - 1] == 0) --hi;
    p.offset = static_cast<int>(lo);
    for (std::size_t i = lo; i < hi; ++i) p.weights.emplace_back(c[i], mass);
    return p;
  }
};

inline std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline FixJoint enumerate_fix_joint(int n, int m) {
  if (n > kEnumerateMaxN) throw CapabilityError("enumerate_fix_joint: needs n <= " + std::to_string(kEnumerateMaxN));
  require(n >= 1 && m >= 0 && m <= n, "enumerate_fix_joint: need 0 <= m <= n");
  FixJoint out;
  out.n = n;
  out.m = m;
  const auto pis = all_permutations(m);
  std::map<std::tuple<int, int, int>, std::int64_t> tally;
  for (const auto& sigma : all_permutations(n)) {
    const int l = l_statistic(sigma, m);
    const int y = high_fixed_points(sigma, m);
    for (const auto& pi : pis) {
      int fix = y;
      for (int i = 0; i < m; ++i) fix += sigma[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] == i;
      ++tally[{l, y, fix}];
    }
  }
  for (const auto& [key, v] : tally) {
    out.counts[key] = v;
    out.total += v;
  }
  return out;
}

/// For every sigma in S_n, the law of Fix(sigma pi) over pi in S_m equals
/// fix_law_uncond(m, L_sigma) shifted by Y_sigma. Returns the number of
/// sigma where this fails.
inline int fix_split_failures(int n, int m) {
  if (n > kEnumerateMaxN) throw CapabilityError("fix_split_failures: needs n <= " + std::to_string(kEnumerateMaxN));
  require(n >= 1 && m >= 0 && m <= n, "fix_split_failures: need 0 <= m <= n");
  const auto pis = all_permutations(m);
  const Integer m_fact = factorial(m);
  std::map<int, profile::ExactPmf> law_by_l;
  int failures = 0;
  for (const auto& sigma : all_permutations(n)) {
    const int l = l_statistic(sigma, m);
    const int y = high_fixed_points(sigma, m);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& pi : pis) {
      int fix = y;
      for (int i = 0; i < m; ++i) fix += sigma[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] == i;
      ++counts[static_cast<std::size_t>(fix)];
    }
    if (!law_by_l.contains(l)) law_by_l.emplace(l, profile::fix_law_uncond_exact(m, l));
    const auto& law = law_by_l.at(l);
    for (int v = 0; v <= n; ++v)
      if (Rational(counts[static_cast<std::size_t>(v)], m_fact) != law.at(v - y)) {
        ++failures;
        break;
      }
  }
  return failures;
}

/// For each cycle type mu with a cycle longer than r, compares
/// (1/r!) sum_{lambda_1 = n - r} d_{lambda*} chi_lambda(mu) with T_r(Fix mu).
/// Returns the cycle types where they differ.
inline std::vector<symfunc::CycleType> poly_identity_failures(int n, int r) {
  require(n >= 1 && r >= 1 && r < n, "poly identity: need 1 <= r < n");
  symfunc::CharacterEvaluator chi;
  std::vector<symfunc::CycleType> bad;
  const auto shapes = symfunc::partitions_with_depth(n, r);
  for (const auto& mu_p : symfunc::enumerate_partitions(n)) {
    if (mu_p.first_row() <= r) continue;
    const symfunc::CycleType mu(mu_p);
    Integer s = 0;
    for (const auto& lambda : shapes) s += symfunc::dim_hook(lambda.without_first_row()) * chi(lambda, mu);
    if (Rational(s, factorial(r)) != profile::t_r_poly(r, mu.fixed_points())) bad.push_back(mu);
  }
  return bad;
}

/// Number of permutations in S_n all of whose cycles have length <= M.
inline Integer short_cycle_count(int n, int big_m) {
  if (n > kShortCycleMaxN) throw CapabilityError("short_cycle_count: needs n <= " + std::to_string(kShortCycleMaxN));
  require(n >= 1 && big_m >= 0, "short_cycle_count: need n >= 1, M >= 0");
  Integer s = 0;
  for (const auto& mu : symfunc::enumerate_partitions(n))
    if (mu.first_row() <= big_m) s += symfunc::class_size(symfunc::CycleType(mu));
  return s;
}

/// (1/n!) sum over cycle types mu with all parts <= M of
///   |C_mu| sum_{1 <= n - lambda_1 <= M} ( d_{lambda*} |chi_lambda(mu)| + |beta^r T_r(Fix mu)| ).
inline double short_cycle_mass(int n, int big_m, double beta) {
  if (n > kShortCycleMaxN) throw CapabilityError("short_cycle_mass: needs n <= " + std::to_string(kShortCycleMaxN));
  require(n >= 1 && big_m >= 0, "short_cycle_mass: need n >= 1, M >= 0");
  symfunc::CharacterEvaluator chi;
  const double n_fact = to_double(factorial(n));
  double total = 0.0;
  for (const auto& mu_p : symfunc::enumerate_partitions(n)) {
    if (mu_p.first_row() > big_m) continue;
    const symfunc::CycleType mu(mu_p);
    double inner = 0.0;
    for (int r = 1; r <= std::min(big_m, n - 1); ++r) {
      const double poly = std::fabs(std::pow(beta, r) * to_double(profile::t_r_poly(r, mu.fixed_points())));
      for (const auto& lambda : symfunc::partitions_with_depth(n, r))
        inner += to_double(symfunc::dim_hook(lambda.without_first_row()) * abs(chi(lambda, mu))) + poly;
    }
    total += to_double(symfunc::class_size(mu)) * inner;
  }
  return total / n_fact;
}

}  // namespace mixprof::exact
