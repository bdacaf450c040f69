#pragma once

#include "mixprof/profile/laws.hpp"
#include "mixprof/spectral/process.hpp"

#include <cmath>
#include <optional>

namespace mixprof::profile {

/// Parameters of one point of the cutoff window.
struct ProfileParams {
  int n = 0;
  int k = 0;
  int m = 0;  // n - k
  double alpha = 0.0;
  double c = 0.0;
  double beta = 0.0;  // e^{-c} / alpha
  double t_c = 0.0;

  static ProfileParams make(int n, int k, double c) {
    require(n >= 1 && k >= 1 && k <= n, "profile params: need 1 <= k <= n");
    require(std::isfinite(c), "profile params: c must be finite");
    ProfileParams p;
    p.n = n;
    p.k = k;
    p.m = n - k;
    p.alpha = static_cast<double>(k) / n;
    p.c = c;
    p.beta = std::exp(-c) / p.alpha;
    p.t_c = spectral::cutoff_time(n, k, c);
    return p;
  }

  /// 1 - m/n, which equals alpha.
  double lambda_star() const { return 1.0 - static_cast<double>(m) / n; }

  bool consistent() const {
    const double tol = 1e-12;
    return m == n - k && beta > 0 && std::fabs(lambda_star() - alpha) <= tol &&
           std::fabs(t_c - spectral::cutoff_time(n, k, c)) <= tol * std::max(1.0, std::fabs(t_c));
  }
};

namespace detail {

inline double poisson_weight(double a, int y) {
  if (a == 0.0) return y == 0 ? 1.0 : 0.0;
  return std::exp(-a + y * std::log(a) - log_factorial(y));
}

/// sum_y | s Pois(a)(y) - Pois(b)(y) |, summed until both upper tails fall
/// below 1e-15.
inline double scaled_poisson_l1(double s, double a, double b) {
  const int end = std::max(poisson_pmf(a).support_end(), poisson_pmf(b).support_end());
  double total = 0.0;
  for (int y = 0; y < end; ++y) total += std::fabs(s * poisson_weight(a, y) - poisson_weight(b, y));
  return total;
}

/// E_{Y ~ Pois(lambda0)} | e^{-beta + beta L/m} (1 + beta)^Y - 1 |.
///
/// The tilt e^{beta lambda0}(1+beta)^y Pois(lambda0)(y) = Pois(lambda0 (1+beta))(y)
/// keeps every summand bounded.
inline double given_l_expectation(double beta, double l_over_m, double lambda0) {
  const double scale = std::exp(-beta + beta * l_over_m + beta * lambda0);
  return scaled_poisson_l1(scale, lambda0 * (1.0 + beta), lambda0);
}

}  // namespace detail

/// E_L[ sum_y Pois(lambda0(L))(y) | e^{-beta + beta L/m} (1 + beta)^y - 1 | ],
/// lambda0(L) = 1 - (m - L)/(n - m), L ~ HG(m, m, n). l1 units.
inline double finite_n_profile(const ProfileParams& p) {
  require(p.k >= 1, "finite_n_profile: k must be positive");
  if (p.m == 0) return detail::given_l_expectation(p.beta, 0.0, 1.0);
  const auto hg = hypergeom_pmf(p.m, p.n);
  double total = 0.0;
  for (std::size_t i = 0; i < hg.weights.size(); ++i) {
    const int big_l = hg.offset + static_cast<int>(i);
    const double lambda0 = 1.0 - static_cast<double>(p.m - big_l) / (p.n - p.m);
    total += hg.weights[i] * detail::given_l_expectation(p.beta, static_cast<double>(big_l) / p.m, lambda0);
  }
  return total;
}

struct MgfChecks {
  bool poisson_mgf = false;
  double poisson_gap = 0.0;
  bool hypergeo_mgf = false;
  double hypergeo_lhs = 0.0;
  double hypergeo_rhs = 0.0;
  bool given_l = false;
  int given_l_points = 0;
  double given_l_worst_slack = 0.0;  // min over L of rhs - lhs

  bool all_pass() const { return poisson_mgf && hypergeo_mgf && given_l; }
};

/// E[(1 + gamma)^Z], Z ~ Pois(z), by direct summation of the pmf.
inline double poisson_mgf_direct(double z, double gamma) {
  const int end = poisson_pmf(z * (1.0 + gamma)).support_end() + 8;
  double s = 0.0;
  for (int y = 0; y < end; ++y) s += detail::poisson_weight(z, y) * std::pow(1.0 + gamma, y);
  return s;
}

/// E exp(gamma |L/m - m/n|), L ~ HG(m, m, n), summed from the exact law.
inline double hypergeo_mgf(int n, int m, double gamma) {
  require(m >= 1 && m <= n, "hypergeo_mgf: need 1 <= m <= n");
  const auto hg = hypergeom_pmf_exact(m, n);
  const double centre = static_cast<double>(m) / n;
  double s = 0.0;
  for (std::size_t i = 0; i < hg.weights.size(); ++i) {
    const double l = hg.offset + static_cast<double>(i);
    s += to_double(hg.weights[i]) * std::exp(gamma * std::fabs(l / m - centre));
  }
  return s;
}

/// Right-hand side of the given-L bound.
inline double given_l_bound(const ProfileParams& p, int big_l) {
  const double dev = std::fabs(static_cast<double>(big_l) / p.m - static_cast<double>(p.m) / p.n);
  const double a = std::exp(p.beta * p.n / (p.n - p.m) * dev);
  const double b = std::exp(p.beta * p.beta * dev);
  const double e = std::exp(p.beta * p.beta);
  return e * (a - 1) * (a - 1) + e * a * (b - 1);
}

/// Left-hand side of the given-L bound.
inline double given_l_deviation(const ProfileParams& p, int big_l) {
  const double lambda0 = 1.0 - static_cast<double>(p.m - big_l) / (p.n - p.m);
  const double inner = detail::given_l_expectation(p.beta, static_cast<double>(big_l) / p.m, lambda0);
  const double ls = p.lambda_star();
  return std::fabs(inner - poisson_l1(ls * (1.0 + p.beta), ls));
}

/// (a) Poisson mgf identity at z in {alpha, 1}; (b) hypergeometric mgf
/// bound; (c) given-L bound at every L in the support. gamma defaults to beta.
inline MgfChecks mgf_inequality_checks(const ProfileParams& p, double omega, std::optional<double> gamma_in = std::nullopt) {
  require(p.m >= 1 && p.m < p.n, "mgf checks: need 1 <= m < n");
  const double gamma = gamma_in.value_or(p.beta);
  require(gamma >= 0 && omega > 0, "mgf checks: need gamma >= 0 and omega > 0");
  require(gamma * omega <= p.m, "mgf checks: need gamma * omega <= m");
  MgfChecks out;

  for (double z : {p.alpha, 1.0})
    out.poisson_gap = std::max(out.poisson_gap, std::fabs(poisson_mgf_direct(z, gamma) - std::exp(gamma * z)));
  out.poisson_mgf = out.poisson_gap < 1e-10;

  out.hypergeo_lhs = std::fabs(hypergeo_mgf(p.n, p.m, gamma) - 1.0);
  out.hypergeo_rhs = 2.0 * gamma * omega / p.m + 2.0 * std::exp(-2.0 * omega * omega / p.m);
  out.hypergeo_mgf = out.hypergeo_lhs <= out.hypergeo_rhs + 1e-12;

  out.given_l = true;
  out.given_l_worst_slack = std::numeric_limits<double>::infinity();
  for (int big_l = std::max(0, 2 * p.m - p.n); big_l <= p.m; ++big_l) {
    const double slack = given_l_bound(p, big_l) - given_l_deviation(p, big_l);
    out.given_l_worst_slack = std::min(out.given_l_worst_slack, slack);
    if (slack < -1e-12) out.given_l = false;
    ++out.given_l_points;
  }
  return out;
}

}  // namespace mixprof::profile
