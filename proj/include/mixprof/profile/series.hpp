#pragma once

#include "mixprof/core.hpp"

#include <cmath>

namespace mixprof::profile {

/// T_r(z) = sum_{i=0}^r C(z, r - i) (-1)^i / i!, with C(z, l) = 0 for l > z.
inline Rational t_r_poly(int r, int z) {
  require(r >= 0 && z >= 0, "t_r_poly: need r >= 0 and z >= 0");
  Rational s = 0;
  for (int i = 0; i <= r; ++i) {
    const Integer c = binomial(z, r - i);
    if (c == 0) continue;
    Rational term(c, factorial(i));
    s += (i % 2 ? -term : term);
  }
  return s;
}

/// Convert an exact rational into any floating type constructible from
/// big integers (double, long double, boost::multiprecision floats).
template <class Real>
Real rational_to(const Rational& x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return x.convert_to<Real>();
  } else {
    return Real(boost::multiprecision::numerator(x)) / Real(boost::multiprecision::denominator(x));
  }
}

/// f_beta(N) = e^{-beta} (1 + beta)^N - 1.
template <class Real = double>
Real f_beta(Real beta, int n) {
  using std::exp;
  using std::pow;
  require(beta > 0 && n >= 0, "f_beta: need beta > 0 and N >= 0");
  return exp(-beta) * pow(Real(1) + beta, n) - Real(1);
}

/// Partial sum sum_{r=1}^{R} beta^r T_r(N).
///
/// Swapping the order of summation gives e^{-beta} (1 + beta)^N in the
/// limit, so the series has no extra 1/r! (the r! in the depth-r character
/// sum cancels the 1/r! of the dimension estimate).
template <class Real = double>
Real t_r_series(Real beta, int n, int big_r) {
  require(big_r >= 0 && n >= 0, "t_r_series: need R >= 0 and N >= 0");
  Real sum = 0;
  Real power = 1;
  for (int r = 1; r <= big_r; ++r) {
    power = power * beta;
    sum += power * rational_to<Real>(t_r_poly(r, n));
  }
  return sum;
}

/// The series summed until a term drops below 1e-16 of the running sum,
/// capped at r = 200.
template <class Real = double>
Real t_r_series_auto(Real beta, int n) {
  using std::abs;
  Real sum = 0;
  Real power = 1;
  for (int r = 1; r <= 200; ++r) {
    power = power * beta;
    const Real term = power * rational_to<Real>(t_r_poly(r, n));
    sum += term;
    if (r > n + 1 && abs(term) <= Real(1e-16) * abs(sum)) break;
  }
  return sum;
}

}  // namespace mixprof::profile
