#pragma once

#include "mixprof/exact/state.hpp"
#include "mixprof/spectral/process.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace mixprof::exact {

/// Dense law of the k-IP configuration.
struct StateDistribution {
  std::vector<double> mass;

  double total() const {
    double s = 0.0;
    for (double v : mass) s += v;
    return s;
  }
};

/// Law with integer numerators over the common denominator n^{2t}.
struct ExactStateDistribution {
  std::vector<Integer> numer;
  Integer denom = 1;

  Rational at(std::size_t i) const { return Rational(numer[i], denom); }
};

/// One step of the walk driven by an ordered pair (i, j) uniform on [n]^2:
/// identity with weight 1/n, each transposition with weight 2/n^2.
class Stepper {
 public:
  explicit Stepper(const spectral::ProcessSpec& spec) : index_(spec.n(), spec.k()) {
    if (!spec.is_interchange()) throw CapabilityError("exact evolution supports the k-particle interchange process only");
    const int n = spec.n();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs_.emplace_back(a, b);
    // A neighbour table costs size * C(n,2) entries; build it when that is modest.
    if (index_.size() * static_cast<std::int64_t>(pairs_.size()) <= 20'000'000) {
      table_.reserve(static_cast<std::size_t>(index_.size()) * pairs_.size());
      for (std::int64_t s = 0; s < index_.size(); ++s) {
        const auto sites = index_.unrank(s);
        for (const auto& [a, b] : pairs_) table_.push_back(static_cast<std::uint32_t>(swapped(sites, a, b)));
      }
    }
  }

  const StateIndex& index() const { return index_; }

  StateDistribution point_mass() const {
    StateDistribution d;
    d.mass.assign(static_cast<std::size_t>(index_.size()), 0.0);
    d.mass[0] = 1.0;
    return d;
  }

  ExactStateDistribution exact_point_mass() const {
    ExactStateDistribution d;
    d.numer.assign(static_cast<std::size_t>(index_.size()), Integer(0));
    d.numer[0] = 1;
    return d;
  }

  StateDistribution step(const StateDistribution& in) const {
    const double n = index_.n();
    const double w_id = 1.0 / n;
    const double w_tr = 2.0 / (n * n);
    StateDistribution out;
    out.mass.assign(in.mass.size(), 0.0);
    for_each_neighbour([&](std::size_t s, std::size_t target) { out.mass[target] += w_tr * in.mass[s]; },
                       [&](std::size_t s) { out.mass[s] += w_id * in.mass[s]; });
    return out;
  }

  /// N' = n N + 2 sum_{transpositions} N o swap, denominator times n^2.
  ExactStateDistribution step(const ExactStateDistribution& in) const {
    const int n = index_.n();
    ExactStateDistribution out;
    out.numer.assign(in.numer.size(), Integer(0));
    out.denom = in.denom * n * n;
    for_each_neighbour([&](std::size_t s, std::size_t target) { out.numer[target] += 2 * in.numer[s]; },
                       [&](std::size_t s) { out.numer[s] += n * in.numer[s]; });
    return out;
  }

 private:
  std::int64_t swapped(std::vector<int> sites, int a, int b) const {
    for (int& s : sites) {
      if (s == a) s = b;
      else if (s == b) s = a;
    }
    return index_.rank(sites);
  }

  template <class OnPair, class OnStay>
  void for_each_neighbour(OnPair on_pair, OnStay on_stay) const {
    const std::size_t pairs = pairs_.size();
    for (std::int64_t s = 0; s < index_.size(); ++s) {
      const auto us = static_cast<std::size_t>(s);
      on_stay(us);
      if (!table_.empty()) {
        const std::uint32_t* row = &table_[us * pairs];
        for (std::size_t p = 0; p < pairs; ++p) on_pair(us, row[p]);
      } else {
        const auto sites = index_.unrank(s);
        for (const auto& [a, b] : pairs_) on_pair(us, static_cast<std::size_t>(swapped(sites, a, b)));
      }
    }
  }

  StateIndex index_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::uint32_t> table_;
};

inline StateDistribution step(const StateDistribution& d, const spectral::ProcessSpec& spec) { return Stepper(spec).step(d); }

inline double tv_to_uniform(const StateDistribution& d) {
  const double u = 1.0 / static_cast<double>(d.mass.size());
  double s = 0.0;
  for (double v : d.mass) s += std::fabs(v - u);
  return 0.5 * s;
}

inline Rational tv_to_uniform(const ExactStateDistribution& d) {
  const Integer size = d.numer.size();
  Integer s = 0;
  for (const auto& v : d.numer) s += abs(v * size - d.denom);
  return Rational(s, 2 * d.denom * size);
}

/// TV(nu_t, Unif) for t = 0..t_max from the identity placement.
struct DistanceCurve {
  std::vector<double> tv;
  std::optional<std::vector<Rational>> exact;
};

inline constexpr int kRationalMaxN = 7;

inline DistanceCurve exact_tv_curve(const spectral::ProcessSpec& spec, int t_max, bool rational = false) {
  require(t_max >= 0, "exact_tv_curve: t_max must be nonnegative");
  if (rational && spec.n() > kRationalMaxN)
    throw CapabilityError("exact_tv_curve: rational mode needs n <= " + std::to_string(kRationalMaxN));
  const Stepper stepper(spec);
  DistanceCurve curve;
  if (rational) {
    curve.exact.emplace();
    auto d = stepper.exact_point_mass();
    for (int t = 0; t <= t_max; ++t) {
      if (t > 0) d = stepper.step(d);
      curve.exact->push_back(tv_to_uniform(d));
      curve.tv.push_back(to_double(curve.exact->back()));
    }
    return curve;
  }
  auto d = stepper.point_mass();
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) d = stepper.step(d);
    curve.tv.push_back(tv_to_uniform(d));
  }
  return curve;
}

/// TV of the kSmall projection never exceeds that of the kBig process.
inline bool projection_monotonicity_check(int n, int k_big, int k_small, int t) {
  require(0 <= k_small && k_small <= k_big && k_big <= n, "projection check: need kSmall <= kBig <= n");
  require(t >= 0, "projection check: t must be nonnegative");
  const double big = exact_tv_curve(spectral::ProcessSpec::interchange(n, k_big), t).tv.back();
  const double small = exact_tv_curve(spectral::ProcessSpec::interchange(n, k_small), t).tv.back();
  return small <= big + 1e-12;
}

}  // namespace mixprof::exact
