#pragma once

#include "mixprof/spectral/process.hpp"
#include "mixprof/symfunc/kostka.hpp"
#include "mixprof/symfunc/partition.hpp"

#include <cmath>
#include <vector>

namespace mixprof::spectral {

using symfunc::Partition;

/// Character ratio of the lazy random-transposition measure
/// (1/n) delta_id + ((n-1)/n) Unif(transpositions) at the irrep lambda:
/// q = 1/n + (1/n^2) sum_i lambda_i (lambda_i - (2i - 1)).
inline Rational char_ratio_exact(const Partition& lambda) {
  const int n = lambda.size();
  require(n >= 1, "char_ratio: empty partition");
  long long s = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    const long long li = lambda[i];
    s += li * (li - (2LL * (i + 1) - 1));
  }
  return Rational(1, n) + Rational(s, static_cast<long long>(n) * n);
}

inline Rational char_ratio_exact(const Partition& lambda, const ProcessSpec& spec) {
  if (lambda.size() != spec.n())
    throw PreconditionError("char_ratio: |lambda| = " + std::to_string(lambda.size()) + " but n = " + std::to_string(spec.n()));
  return char_ratio_exact(lambda);
}

inline double char_ratio(const Partition& lambda, const ProcessSpec& spec) {
  return to_double(char_ratio_exact(lambda, spec));
}

/// Multiplicity of the trivial representation of K inside lambda.
///
/// k-IP: zero iff r > k; C(k, r) d_{lambda*} when r <= n - k; otherwise the
/// first n-k boxes of row one hold the repeated colour and the rest is a
/// standard filling of the skew shape lambda / (n - k). CEP: Young's rule.
inline Integer multiplicity(const Partition& lambda, const ProcessSpec& spec) {
  if (lambda.size() != spec.n())
    throw PreconditionError("multiplicity: |lambda| = " + std::to_string(lambda.size()) + " but n = " + std::to_string(spec.n()));
  if (!spec.is_interchange()) return symfunc::kostka(lambda, spec.colours());
  const int r = lambda.depth();
  const int k = spec.k();
  if (r > k) return 0;
  if (r <= spec.m()) return binomial(k, r) * symfunc::dim_hook(lambda.without_first_row());
  if (spec.m() == 0) return symfunc::dim_hook(lambda);
  return symfunc::skew_standard_count(lambda, Partition{spec.m()});
}

struct IrrepData {
  Partition lambda;
  int depth = 0;  // r = n - lambda_1
  Integer dim;
  double log_dim = 0.0;
  Rational ratio;
  double ratio_value = 0.0;
  Integer mult;
  double log_mult = 0.0;  // -inf when mult == 0

  bool trivial() const { return depth == 0; }
};

inline IrrepData make_irrep(const Partition& lambda, const ProcessSpec& spec) {
  IrrepData d;
  d.lambda = lambda;
  d.depth = lambda.depth();
  d.dim = symfunc::dim_hook(lambda);
  d.log_dim = log_of(d.dim);
  d.ratio = char_ratio_exact(lambda, spec);
  d.ratio_value = to_double(d.ratio);
  d.mult = multiplicity(lambda, spec);
  d.log_mult = log_of(d.mult);
  return d;
}

/// One record per partition of n, canonical order.
inline std::vector<IrrepData> irrep_catalog(const ProcessSpec& spec) {
  std::vector<IrrepData> out;
  for (const auto& lambda : symfunc::enumerate_partitions(spec.n())) out.push_back(make_irrep(lambda, spec));
  return out;
}

/// The main-term irrep set {lambda != (n) : lambda_1 >= n - M}.
struct ApproxSplit {
  int cutoff = 1;  // M

  explicit ApproxSplit(int m) : cutoff(m) { require(m >= 1, "approximation split: M must be >= 1"); }

  bool in_main(int depth) const { return depth >= 1 && depth <= cutoff; }
  bool in_error(int depth) const { return depth > cutoff; }
};

}  // namespace mixprof::spectral
