#pragma once

#include "mixprof/core.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace mixprof::spectral {

/// The walk being analysed: k-particle interchange on n sites, or a
/// coloured exclusion process with colour counts a_1..a_N (sum n).
///
/// Both are walks on S_n / K with K the Young subgroup of the colour
/// blocks. The k-IP is the colouring (1, ..., 1, n - k).
class ProcessSpec {
 public:
  static ProcessSpec interchange(int n, int k) {
    require(n >= 1, "process: n must be positive");
    require(k >= 0 && k <= n, "process: need 0 <= k <= n");
    ProcessSpec s;
    s.n_ = n;
    s.k_ = k;
    s.interchange_ = true;
    s.colours_.assign(static_cast<std::size_t>(k), 1);
    s.colours_.push_back(n - k);
    return s;
  }

  static ProcessSpec coloured(std::vector<int> colours) {
    require(!colours.empty(), "process: need at least one colour");
    for (int a : colours) require(a >= 0, "process: colour counts must be nonnegative");
    ProcessSpec s;
    s.n_ = std::accumulate(colours.begin(), colours.end(), 0);
    require(s.n_ >= 1, "process: colour counts must sum to a positive n");
    s.k_ = s.n_ - colours.back();
    s.interchange_ = false;
    s.colours_ = std::move(colours);
    return s;
  }

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return n_ - k_; }
  bool is_interchange() const { return interchange_; }

  /// Colour composition; for the k-IP this is (1, ..., 1, n - k).
  const std::vector<int>& colours() const { return colours_; }

  Rational alpha() const { return Rational(k_, n_); }
  double alpha_value() const { return static_cast<double>(k_) / n_; }

  /// |K| = prod a_j!.
  Integer stabilizer_order() const {
    Integer r = 1;
    for (int a : colours_) r *= factorial(a);
    return r;
  }

  std::string describe() const {
    if (interchange_) return "k-IP(n=" + std::to_string(n_) + ", k=" + std::to_string(k_) + ")";
    std::string s = "CEP(";
    for (std::size_t i = 0; i < colours_.size(); ++i) s += (i ? "," : "") + std::to_string(colours_[i]);
    return s + ")";
  }

 private:
  ProcessSpec() = default;
  int n_ = 0;
  int k_ = 0;
  bool interchange_ = true;
  std::vector<int> colours_;
};

/// Proposed mixing time t_c = n (log k + c) / 2.
inline double cutoff_time(int n, int k, double c) {
  require(k >= 1, "cutoff_time: k must be positive");
  return 0.5 * n * (std::log(static_cast<double>(k)) + c);
}

}  // namespace mixprof::spectral
