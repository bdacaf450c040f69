#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixprof {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr const char* kVersion = "0.3.0";

// Error taxonomy. The CLI maps CapabilityError to exit code 2.

/// Inputs violate a documented precondition (size mismatch, bad range).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation was requested beyond the enumeration guard of an operation.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Falling factorial (n)_j = n(n-1)...(n-j+1); zero once a factor hits zero.
inline Integer falling(int n, int j) {
  Integer r = 1;
  for (int i = 0; i < j; ++i) r *= (n - i);
  return r;
}

inline double log_factorial(double n) { return std::lgamma(n + 1.0); }

inline double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

inline double to_double(const Integer& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// log of a positive big integer without overflowing double.
inline double log_of(const Integer& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(to_double(x));
  const unsigned shift = static_cast<unsigned>(bits) - 60;
  const Integer top = x >> shift;
  return std::log(to_double(top)) + static_cast<double>(shift) * std::log(2.0);
}

/// Streaming log-sum-exp accumulator.
class LogSum {
 public:
  void add(double log_term) {
    if (log_term == -std::numeric_limits<double>::infinity()) return;
    if (log_term <= max_) {
      sum_ += std::exp(log_term - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    }
  }
  double log_value() const {
    if (sum_ == 0.0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_);
  }
  double value() const { return sum_ == 0.0 ? 0.0 : std::exp(log_value()); }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

/// |q|^t for real t >= 0 with the convention 0^0 = 1.
inline double abs_pow(double q, double t) {
  const double a = std::fabs(q);
  if (t == 0.0) return 1.0;
  if (a == 0.0) return 0.0;
  return std::exp(t * std::log(a));
}

/// Decimal rendering of a rational to a fixed number of significant digits.
inline std::string to_decimal_string(const Rational& x, int digits = 30) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer num = numerator(x);
  const Integer den = denominator(x);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  if (num == 0) return "0";
  // Scale so that the integer part has at least `digits` digits.
  int exp10 = 0;
  Integer scaled_num = num;
  Integer scaled_den = den;
  while (scaled_num / scaled_den >= pow(Integer(10), digits)) {
    scaled_den *= 10;
    ++exp10;
  }
  while (scaled_num / scaled_den < pow(Integer(10), digits - 1)) {
    scaled_num *= 10;
    --exp10;
  }
  Integer q = scaled_num / scaled_den;
  const Integer rem = scaled_num % scaled_den;
  if (rem * 2 >= scaled_den) ++q;
  if (q >= pow(Integer(10), digits)) {
    q /= 10;
    ++exp10;
  }
  std::string mant = q.str();
  // value = mant * 10^exp10
  const int point = static_cast<int>(mant.size()) + exp10;
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<size_t>(-point), '0') + mant;
  } else if (point >= static_cast<int>(mant.size())) {
    out = mant + std::string(static_cast<size_t>(point - static_cast<int>(mant.size())), '0');
  } else {
    out = mant.substr(0, static_cast<size_t>(point)) + "." + mant.substr(static_cast<size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign + out;
}

}  // namespace mixprof
