#pragma once

#include "mixprof/spectral/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>

namespace mixprof::spectral {

inline constexpr int kErrorTermMaxN = 40;

/// Which constant multiplies the squared-distance bound: 1/2 by default, or
/// the classical Diaconis-Shahshahani 1/4.
enum class DsConstant { Half, Quarter };

/// c * sum_{lambda != (n)} m_lambda d_lambda |q_lambda|^{2t}, an upper bound
/// on d_TV(t)^2. Summed in log space.
inline double ds_bound(std::span<const IrrepData> catalog, double t, DsConstant constant = DsConstant::Half) {
  require(t >= 0, "ds_bound: t must be nonnegative");
  LogSum acc;
  for (const auto& irr : catalog) {
    if (irr.trivial() || irr.mult == 0) continue;
    const double p = abs_pow(irr.ratio_value, 2 * t);
    if (p == 0.0) continue;
    acc.add(irr.log_mult + irr.log_dim + std::log(p));
  }
  const double c = constant == DsConstant::Half ? 0.5 : 0.25;
  return c * acc.value();
}

inline double ds_bound(const ProcessSpec& spec, double t, DsConstant constant = DsConstant::Half) {
  const auto cat = irrep_catalog(spec);
  return ds_bound(cat, t, constant);
}

/// The usable TV bound min(1, sqrt(ds_bound)).
inline double ds_tv_bound(std::span<const IrrepData> catalog, double t, DsConstant constant = DsConstant::Half) {
  return std::min(1.0, std::sqrt(ds_bound(catalog, t, constant)));
}

/// ET_t = sum_{lambda_1 < n - M} sqrt(m_lambda d_lambda) |q_lambda|^t.
inline double error_term(std::span<const IrrepData> catalog, double t, int big_m) {
  require(t >= 0, "error_term: t must be nonnegative");
  const ApproxSplit split(big_m);
  LogSum acc;
  for (const auto& irr : catalog) {
    if (!split.in_error(irr.depth) || irr.mult == 0) continue;
    const double p = abs_pow(irr.ratio_value, t);
    if (p == 0.0) continue;
    acc.add(0.5 * (irr.log_mult + irr.log_dim) + std::log(p));
  }
  return acc.value();
}

inline double error_term(const ProcessSpec& spec, double t, int big_m) {
  if (spec.n() > kErrorTermMaxN)
    throw CapabilityError("error_term: exact enumeration needs n <= " + std::to_string(kErrorTermMaxN) + " (got n = " +
                          std::to_string(spec.n()) + ")");
  require(big_m >= 1 && big_m < spec.n(), "error_term: need 1 <= M < n");
  const auto cat = irrep_catalog(spec);
  return error_term(cat, t, big_m);
}

/// Largest character ratio over lambda |- n with lambda_1 = n - r.
///
/// The ratio increases along dominance order, so the maximiser stacks rows
/// of length n - r as high as possible.
inline double max_ratio_at_depth(int n, int r) {
  require(r >= 0 && r < n, "max_ratio_at_depth: need 0 <= r < n");
  const double v = n - r;
  const long long rows = r / (n - r);
  const double b = r % (n - r);
  const double a = static_cast<double>(rows);
  double s = v * (v - 1);
  s += a * v * v - v * ((a + 1) * (a + 1) - 1);
  s += b * (b - 2 * a - 3);
  return 1.0 / n + s / (static_cast<double>(n) * n);
}

/// Dominating series for the nonnegative-ratio part of ET at t = t_c:
/// sum_{r > M} (2/alpha)^{r/2} q_r^t k^r / sqrt(r!), q_r = max ratio at depth r, floored at 0.
inline double error_term_series_bound(const ProcessSpec& spec, double c, int big_m) {
  const int n = spec.n();
  const int k = spec.k();
  require(k >= 1, "error_term_series_bound: alpha = k/n must be positive");
  require(big_m >= 1, "error_term_series_bound: M must be >= 1");
  const double alpha = spec.alpha_value();
  const double t = cutoff_time(n, k, c);
  require(t >= 0, "error_term_series_bound: t_c is negative for this c");
  LogSum acc;
  for (int r = big_m + 1; r <= n - 1; ++r) {
    const double q = std::max(0.0, max_ratio_at_depth(n, r));
    if (q == 0.0 && t > 0) continue;
    const double log_q_pow = t == 0 ? 0.0 : t * std::log(q);
    acc.add(0.5 * r * std::log(2.0 / alpha) + log_q_pow + r * std::log(static_cast<double>(k)) - 0.5 * log_factorial(r));
  }
  return acc.value();
}

/// Outcome of the three character-power inequalities at t = t_c; nullopt
/// when an inequality's hypothesis does not hold.
struct CharPowerCheck {
  std::optional<bool> short_range;  // r >= n/100 and q >= 0
  std::optional<bool> long_upper;   // r <= n/4
  std::optional<bool> long_lower;   // r <= n/4

  bool all_pass() const {
    return short_range.value_or(true) && long_upper.value_or(true) && long_lower.value_or(true);
  }
  int applicable() const { return short_range.has_value() + long_upper.has_value() + long_lower.has_value(); }
};

inline CharPowerCheck char_power_check(const Partition& lambda, const ProcessSpec& spec, double c) {
  const int n = spec.n();
  const int k = spec.k();
  CharPowerCheck out;
  if (k < 2) return out;
  const double log_k = std::log(static_cast<double>(k));
  const double t = cutoff_time(n, k, c);
  // The inequalities are stated for t_c <= n log k (k large in terms of c).
  if (t < 0 || t > n * log_k) return out;
  const double q = char_ratio(lambda, spec);
  const int r = lambda.depth();
  const double log_ek = c + log_k;
  auto leq = [](double lhs, double rhs) { return lhs <= rhs + 1e-12 * std::max(1.0, std::fabs(rhs)); };
  const double neg_inf = -std::numeric_limits<double>::infinity();
  const double log_pow = q > 0 ? t * std::log(q) : (t == 0 ? 0.0 : neg_inf);

  if (100.0 * r >= n && q >= 0) out.short_range = leq(log_pow, -0.5 * r * (1.0 + 1.0 / 200.0) * log_ek);
  if (4.0 * r <= n) {
    const double rr = static_cast<double>(r) * r;
    out.long_upper = leq(log_pow, -r * log_ek + 2.0 * rr * log_k / n);
    out.long_lower = leq(-r * log_ek - 7.0 * rr * log_k / n, log_pow);
  }
  return out;
}

/// d_lambda q^{t_c} / [d_{lambda*} (e^{-c} n/k)^r / r!], evaluated in log space.
inline double dimension_power_ratio(const Partition& lambda, int k, double c) {
  const int n = lambda.size();
  const int r = lambda.depth();
  const double q = to_double(char_ratio_exact(lambda));
  require(q > 0, "dimension_power_ratio: needs a positive character ratio");
  const double t = cutoff_time(n, k, c);
  const double log_num = symfunc::log_dim(lambda) + t * std::log(q);
  const double log_den = symfunc::log_dim(lambda.without_first_row()) + r * (-c + std::log(static_cast<double>(n) / k)) -
                         log_factorial(r);
  return std::exp(log_num - log_den);
}

}  // namespace mixprof::spectral
