#pragma once

#include "mixprof/core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mixprof::profile {

/// Probability mass function on {offset, offset + 1, ...}. `tail` is the
/// mass known to lie beyond the stored support (zero for exact laws).
struct PmfVector {
  int offset = 0;
  std::vector<double> weights;
  double tail = 0.0;

  static PmfVector point_mass(int at) { return PmfVector{at, {1.0}, 0.0}; }

  int support_begin() const { return offset; }
  int support_end() const { return offset + static_cast<int>(weights.size()); }

  double at(int value) const {
    const int i = value - offset;
    return i < 0 || i >= static_cast<int>(weights.size()) ? 0.0 : weights[static_cast<std::size_t>(i)];
  }

  double total() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }

  double mean() const {
    double s = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) s += (offset + static_cast<double>(i)) * weights[i];
    return s;
  }

  double variance() const {
    const double mu = mean();
    double s = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const double d = offset + static_cast<double>(i) - mu;
      s += d * d * weights[i];
    }
    return s;
  }
};

/// Distribution of the sum of independent variables.
inline PmfVector convolve(const PmfVector& a, const PmfVector& b) {
  PmfVector out;
  out.offset = a.offset + b.offset;
  if (a.weights.empty() || b.weights.empty()) return out;
  out.weights.assign(a.weights.size() + b.weights.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.weights.size(); ++i)
    for (std::size_t j = 0; j < b.weights.size(); ++j) out.weights[i + j] += a.weights[i] * b.weights[j];
  out.tail = a.tail + b.tail;
  return out;
}

/// Half the l1 distance, treating values outside either support as 0.
inline double total_variation(const PmfVector& a, const PmfVector& b) {
  const int lo = std::min(a.support_begin(), b.support_begin());
  const int hi = std::max(a.support_end(), b.support_end());
  double s = 0.0;
  for (int v = lo; v < hi; ++v) s += std::fabs(a.at(v) - b.at(v));
  return 0.5 * s;
}

/// Exact rational law on {offset, ...}.
struct ExactPmf {
  int offset = 0;
  std::vector<Rational> weights;

  Rational at(int value) const {
    const int i = value - offset;
    return i < 0 || i >= static_cast<int>(weights.size()) ? Rational(0) : weights[static_cast<std::size_t>(i)];
  }

  PmfVector to_float() const {
    PmfVector p;
    p.offset = offset;
    for (const auto& w : weights) p.weights.push_back(to_double(w));
    return p;
  }
};

}  // namespace mixprof::profile
