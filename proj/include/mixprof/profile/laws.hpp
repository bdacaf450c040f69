#pragma once

#include "mixprof/profile/pmf.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>

namespace mixprof::profile {

inline constexpr double kPoissonTail = 1e-15;

/// Pois(a) on {0, ..., Y}. With cutoff < 0, Y is the first value whose
/// upper tail P(X > Y) drops below 1e-15. The tail is reported, not
/// folded back into the weights.
inline PmfVector poisson_pmf(double a, int cutoff = -1) {
  require(a >= 0 && std::isfinite(a), "poisson_pmf: need a finite a >= 0");
  if (a == 0.0) return PmfVector::point_mass(0);
  PmfVector p;
  const double log_a = std::log(a);
  for (int y = 0;; ++y) {
    p.weights.push_back(std::exp(-a + y * log_a - log_factorial(y)));
    if (cutoff >= 0) {
      if (y >= cutoff) break;
    } else if (y >= a) {
      const double upper = boost::math::gamma_p(y + 1.0, a);  // P(X > y)
      if (upper < kPoissonTail) break;
    }
  }
  p.tail = boost::math::gamma_p(static_cast<double>(p.weights.size()), a);
  return p;
}

/// sum_y |Pois(a)(y) - Pois(b)(y)|, truncation error below 1e-12.
inline double poisson_l1(double a, double b) {
  require(a >= 0 && b >= 0, "poisson_l1: rates must be nonnegative");
  if (a == b) return 0.0;
  const auto pa = poisson_pmf(a);
  const auto pb = poisson_pmf(b);
  return 2.0 * total_variation(pa, pb);
}

/// d_TV(Pois(alpha + e^{-c}), Pois(alpha)).
inline double limit_profile(double alpha, double c) {
  require(alpha > 0 && alpha <= 1, "limit_profile: alpha must lie in (0, 1]");
  return 0.5 * poisson_l1(alpha + std::exp(-c), alpha);
}

/// HG(m, m, n) as exact rationals on l in {max(0, 2m - n), ..., m}.
inline ExactPmf hypergeom_pmf_exact(int m, int n) {
  require(m >= 0 && m <= n, "hypergeom_pmf: need 0 <= m <= n");
  ExactPmf p;
  p.offset = std::max(0, 2 * m - n);
  const Integer total = binomial(n, m);
  for (int l = p.offset; l <= m; ++l) p.weights.emplace_back(binomial(m, l) * binomial(n - m, m - l), total);
  return p;
}

/// HG(m, m, n) in floating point.
///
/// Small n is the exact law rounded. Large n walks the ratio
/// P(l+1)/P(l) = (m-l)^2 / ((l+1)(n-2m+l+1)) outward from the mode and drops
/// weights below 1e-20 of the peak before normalising.
inline PmfVector hypergeom_pmf(int m, int n) {
  require(m >= 0 && m <= n, "hypergeom_pmf: need 0 <= m <= n");
  if (n <= 200) return hypergeom_pmf_exact(m, n).to_float();
  const int lo = std::max(0, 2 * m - n);
  const long double nn = n, mm = m;
  int mode = static_cast<int>(std::floor((mm + 1) * (mm + 1) / (nn + 2)));
  mode = std::clamp(mode, lo, m);
  auto ratio = [&](int l) {  // P(l+1) / P(l)
    const long double a = static_cast<long double>(m - l);
    return a * a / ((l + 1.0L) * (static_cast<long double>(n) - 2.0L * m + l + 1.0L));
  };
  std::vector<long double> up{1.0L}, down;
  for (int l = mode; l < m; ++l) {
    const long double w = up.back() * ratio(l);
    if (w < 1e-20L) break;
    up.push_back(w);
  }
  long double w = 1.0L;
  for (int l = mode - 1; l >= lo; --l) {
    w /= ratio(l);
    if (w < 1e-20L) break;
    down.push_back(w);
  }
  PmfVector p;
  p.offset = mode - static_cast<int>(down.size());
  long double total = 0;
  for (auto v : down) total += v;
  for (auto v : up) total += v;
  for (auto it = down.rbegin(); it != down.rend(); ++it) p.weights.push_back(static_cast<double>(*it / total));
  for (auto v : up) p.weights.push_back(static_cast<double>(v / total));
  return p;
}

/// Law of the number of fixed points among L marked indices of a uniform
/// permutation of m indices:
///   P(r) = (1/r!) sum_{l=0}^{L-r} ((-1)^l / l!) (L)_{r+l} / (m)_{r+l}.
inline ExactPmf fix_law_uncond_exact(int m, int big_l) {
  require(big_l >= 0, "fix_law_uncond: L must be nonnegative");
  if (big_l > m) throw PreconditionError("fix_law_uncond: L = " + std::to_string(big_l) + " exceeds m = " + std::to_string(m));
  ExactPmf p;
  if (big_l == 0) {
    p.weights = {Rational(1)};
    return p;
  }
  std::vector<Rational> rho(static_cast<std::size_t>(big_l) + 1);  // (L)_j / (m)_j
  rho[0] = 1;
  for (int j = 1; j <= big_l; ++j) rho[static_cast<std::size_t>(j)] = rho[static_cast<std::size_t>(j - 1)] * Rational(big_l - j + 1, m - j + 1);
  for (int r = 0; r <= big_l; ++r) {
    Rational s = 0;
    for (int l = 0; l <= big_l - r; ++l) {
      Rational term = rho[static_cast<std::size_t>(r + l)] / Rational(factorial(l));
      s += (l % 2 ? -term : term);
    }
    p.weights.push_back(s / Rational(factorial(r)));
  }
  return p;
}

/// Floating-point version; the sum over l and the support in r are cut once
/// 1/l! and 1/r! fall below 1e-20, which bounds every dropped term.
inline PmfVector fix_law_uncond(int m, int big_l) {
  require(big_l >= 0, "fix_law_uncond: L must be nonnegative");
  if (big_l > m) throw PreconditionError("fix_law_uncond: L = " + std::to_string(big_l) + " exceeds m = " + std::to_string(m));
  if (big_l == 0) return PmfVector::point_mass(0);
  constexpr int kTerms = 24;  // 1/24! < 1e-23
  const int r_max = std::min(big_l, kTerms);
  std::vector<double> rho(static_cast<std::size_t>(std::min(big_l, 2 * kTerms)) + 1);
  rho[0] = 1.0;
  for (std::size_t j = 1; j < rho.size(); ++j)
    rho[j] = rho[j - 1] * (static_cast<double>(big_l) - (j - 1)) / (static_cast<double>(m) - (j - 1));
  PmfVector p;
  for (int r = 0; r <= r_max; ++r) {
    double s = 0.0;
    const int l_max = std::min(big_l - r, kTerms);
    for (int l = 0; l <= l_max; ++l) {
      const double term = rho[static_cast<std::size_t>(r + l)] * std::exp(-log_factorial(l));
      s += (l % 2 ? -term : term);
    }
    p.weights.push_back(std::max(0.0, s * std::exp(-log_factorial(r))));
  }
  return p;
}

inline void check_cond_args(int n, int m, int big_l) {
  if (!(m >= 0 && m <= n && big_l >= 0 && m - big_l >= 0 && m - big_l <= n - m))
    throw PreconditionError("fix_law_cond: need 0 <= m - L <= n - m (n = " + std::to_string(n) + ", m = " + std::to_string(m) +
                            ", L = " + std::to_string(big_l) + ")");
}

/// Fixed points among indices > m given L; substitutes (L, m) -> (n - 2m + L, n - m).
inline ExactPmf fix_law_cond_exact(int n, int m, int big_l) {
  check_cond_args(n, m, big_l);
  return fix_law_uncond_exact(n - m, n - 2 * m + big_l);
}

inline PmfVector fix_law_cond(int n, int m, int big_l) {
  check_cond_args(n, m, big_l);
  return fix_law_uncond(n - m, n - 2 * m + big_l);
}

inline ExactPmf convolve(const ExactPmf& a, const ExactPmf& b) {
  ExactPmf out;
  out.offset = a.offset + b.offset;
  if (a.weights.empty() || b.weights.empty()) return out;
  out.weights.assign(a.weights.size() + b.weights.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.weights.size(); ++i)
    for (std::size_t j = 0; j < b.weights.size(); ++j) out.weights[i + j] += a.weights[i] * b.weights[j];
  return out;
}

/// Law of Fix(Sigma Pi), Sigma uniform on S_n and Pi uniform on the S_m
/// acting on the first m indices, as a mixture over L = L_Sigma.
inline ExactPmf fix_product_law_exact(int n, int m) {
  require(m >= 0 && m <= n, "fix_product_law: need 0 <= m <= n");
  ExactPmf out;
  out.weights.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  const auto hg = hypergeom_pmf_exact(m, n);
  for (std::size_t i = 0; i < hg.weights.size(); ++i) {
    const int big_l = hg.offset + static_cast<int>(i);
    const auto joint = convolve(fix_law_uncond_exact(m, big_l), fix_law_cond_exact(n, m, big_l));
    for (std::size_t v = 0; v < joint.weights.size(); ++v)
      out.weights[static_cast<std::size_t>(joint.offset) + v] += hg.weights[i] * joint.weights[v];
  }
  return out;
}

inline PmfVector fix_product_law(int n, int m) {
  require(m >= 0 && m <= n, "fix_product_law: need 0 <= m <= n");
  if (n <= 30) return fix_product_law_exact(n, m).to_float();
  PmfVector out;
  out.weights.assign(static_cast<std::size_t>(n) + 1, 0.0);
  const auto hg = hypergeom_pmf(m, n);
  for (std::size_t i = 0; i < hg.weights.size(); ++i) {
    const int big_l = hg.offset + static_cast<int>(i);
    const auto joint = convolve(fix_law_uncond(m, big_l), fix_law_cond(n, m, big_l));
    for (std::size_t v = 0; v < joint.weights.size(); ++v)
      out.weights[static_cast<std::size_t>(joint.offset) + v] += hg.weights[i] * joint.weights[v];
  }
  while (out.weights.size() > 1 && out.weights.back() == 0.0) out.weights.pop_back();
  return out;
}

}  // namespace mixprof::profile
