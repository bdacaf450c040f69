#pragma once

#include "mixprof/exact/enumerate.hpp"
#include "mixprof/io/format.hpp"
#include "mixprof/exact/evolve.hpp"
#include "mixprof/montecarlo/simulate.hpp"
#include "mixprof/profile/finite_n.hpp"
#include "mixprof/profile/series.hpp"
#include "mixprof/spectral/bounds.hpp"
#include "mixprof/spectral/fourier.hpp"
#include "mixprof/symfunc/characters.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace mixprof::io {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"symfunc", "spectral", "profile", "exact", "montecarlo"};
  return names;
}

namespace detail {

using Checks = std::vector<CheckResult>;

inline void record(Checks& out, const std::string& suite, const std::string& name, bool ok, std::string detail = {}) {
  out.push_back(CheckResult{suite, name, ok, std::move(detail)});
}

inline Checks symfunc_suite(int n_max) {
  using namespace symfunc;
  Checks out;
  const std::string s = "symfunc";

  bool burnside = true;
  for (int n = 1; n <= std::min(10, n_max); ++n) {
    Integer sum = 0;
    for (const auto& l : enumerate_partitions(n)) sum += dim_hook(l) * dim_hook(l);
    burnside = burnside && sum == factorial(n);
  }
  record(out, s, "Burnside sum of d^2 = n! (n <= 10)", burnside);

  bool syt = true, conj = true;
  for (int n = 1; n <= std::min(8, n_max); ++n)
    for (const auto& l : enumerate_partitions(n)) syt = syt && dim_hook(l) == kostka(l, std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int n = 1; n <= std::min(10, n_max); ++n)
    for (const auto& l : enumerate_partitions(n)) conj = conj && dim_hook(l) == dim_hook(transpose(l));
  record(out, s, "hook dimension = SYT count (n <= 8)", syt);
  record(out, s, "dimension invariant under transpose (n <= 10)", conj);

  bool rows = true, cols = true;
  for (int n = 1; n <= std::min(10, n_max); ++n) {
    const CharacterTable tab(n);
    const std::size_t p = tab.size();
    std::vector<Integer> csize;
    for (const auto& mu : tab.classes()) csize.push_back(class_size(mu));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i; j < p; ++j) {
        Integer acc = 0;
        for (std::size_t c = 0; c < p; ++c) acc += csize[c] * tab.at(i, c) * tab.at(j, c);
        rows = rows && acc == (i == j ? factorial(n) : Integer(0));
      }
    for (std::size_t c = 0; c < p; ++c)
      for (std::size_t d = c; d < p; ++d) {
        Integer acc = 0;
        for (std::size_t i = 0; i < p; ++i) acc += tab.at(i, c) * tab.at(i, d);
        cols = cols && acc == (c == d ? centralizer_order(tab.classes()[c]) : Integer(0));
      }
  }
  record(out, s, "character row orthogonality (n <= 10)", rows);
  record(out, s, "character column orthogonality (n <= 10)", cols);

  bool dims = true;
  for (int n = 1; n <= std::min(12, n_max); ++n)
    for (const auto& l : enumerate_partitions(n)) {
      const int r = l.depth();
      const Rational upper = Rational(binomial(n, r) * dim_hook(l.without_first_row()));
      const Rational d = Rational(dim_hook(l));
      const Rational lower = 2 * r <= n ? upper * Rational(n - 2 * r, n) : Rational(0);
      dims = dims && lower <= d && d <= upper;
    }
  record(out, s, "dimension bounds via C(n,r) d_{lambda*} (n <= 12)", dims);
  return out;
}

inline Checks spectral_suite(int n_max) {
  using namespace spectral;
  Checks out;
  const std::string s = "spectral";

  bool raw = true, corrected = true, mono = true, reweighted = true;
  for (int n = 1; n <= std::min(12, n_max); ++n)
    for (const auto& l : symfunc::enumerate_partitions(n)) {
      const int r = l.depth();
      const Rational q = char_ratio_exact(l);
      const Rational rn(r, n);
      raw = raw && 1 - 2 * rn * (1 + rn) <= q && q <= 1 - rn;
      if (2 * l.first_row() >= n) corrected = corrected && q <= 1 - 2 * rn * (1 - rn);
      if (r >= 1 && 2 * r <= n) mono = mono && q <= char_ratio_exact(Partition{n - r, r});
      for (int k = 0; k <= n; ++k) {
        const auto spec = ProcessSpec::interchange(n, k);
        const double lhs = 0.5 * (log_of(multiplicity(l, spec)) + symfunc::log_dim(l));
        const double mid = symfunc::log_dim(l.without_first_row()) + 0.5 * (log_of(binomial(k, r)) + log_of(binomial(n, r)));
        const double rhs = symfunc::log_dim(l.without_first_row()) + (r ? 0.5 * r * std::log(static_cast<double>(n) * k) : 0.0) - log_factorial(r);
        if (std::isinf(lhs)) continue;
        reweighted = reweighted && lhs <= mid + 1e-9 && mid <= rhs + 1e-9;
      }
    }
  record(out, s, "character ratio two-sided bound (n <= 12)", raw);
  record(out, s, "long-row ratio bound q <= 1 - (2r/n)(1 - r/n) (n <= 12)", corrected);
  record(out, s, "q_lambda <= q_(n-r,r) for r <= n/2 (n <= 12)", mono);
  record(out, s, "reweighted multiplicity bound (n <= 12)", reweighted);

  bool sandwich = true, ds = true;
  std::string where;
  for (int n = 2; n <= std::min(7, n_max); ++n)
    for (int k = 1; k <= n; ++k) {
      const auto spec = ProcessSpec::interchange(n, k);
      const auto tv = exact::exact_tv_curve(spec, 40).tv;
      const FourierEvaluator fe(spec);
      const auto cat = irrep_catalog(spec);
      for (int t = 0; t <= 40; ++t) {
        if (ds_tv_bound(cat, t) < tv[static_cast<std::size_t>(t)] - 1e-12) ds = false;
        for (int m = 1; m < n; ++m) {
          const double gap = std::fabs(tv[static_cast<std::size_t>(t)] - 0.5 * fe.main_term(t, m));
          if (gap > 0.5 * error_term(cat, t, m) + 1e-12) {
            sandwich = false;
            where = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " M=" + std::to_string(m) + " t=" + std::to_string(t);
          }
        }
      }
    }
  record(out, s, "approximation sandwich |TV - MT/2| <= ET/2 (n <= 7)", sandwich, where);
  record(out, s, "square-root bound dominates TV (n <= 7)", ds);
  return out;
}

inline Checks profile_suite(int n_max) {
  using namespace profile;
  using Big = boost::multiprecision::cpp_bin_float_50;
  Checks out;
  const std::string s = "profile";

  double worst = 0.0;
  for (double b : {0.5, 1.0, 2.0, 4.0})
    for (int n = 0; n <= 20; ++n) {
      const Big gap = abs(t_r_series<Big>(Big(b), n, 120) - f_beta<Big>(Big(b), n));
      worst = std::max(worst, gap.convert_to<double>());
    }
  record(out, s, "series sum beta^r T_r(N) = f_beta(N)", worst < 1e-10, "max gap " + format_double(worst));

  bool derange = true;
  for (int m = 1; m <= 9; ++m) {
    Integer d = 1;  // D_0
    for (int j = 1; j <= m; ++j) d = j * d + (j % 2 ? -1 : 1);
    derange = derange && fix_law_uncond_exact(m, m).at(0) == Rational(d, factorial(m));
  }
  record(out, s, "derangement ratio at L = m (m <= 9)", derange);

  bool product = true, mean = true, split = true;
  for (int n = 1; n <= std::min(7, n_max); ++n)
    for (int m = 1; m <= n; ++m) {
      const auto joint = exact::enumerate_fix_joint(n, m);
      const auto law = fix_product_law_exact(n, m);
      product = product && total_variation(law.to_float(), joint.marginal_fix().to_float()) < 1e-12;
      Rational direct = 0, via = 0;
      for (int v = 0; v <= n; ++v) direct += v * law.at(v);
      const auto hg = hypergeom_pmf_exact(m, n);
      for (std::size_t i = 0; i < hg.weights.size(); ++i) {
        const int l = hg.offset + static_cast<int>(i);
        via += hg.weights[i] * (Rational(l, m) + (n == m ? Rational(0) : Rational(n - 2 * m + l, n - m)));
      }
      mean = mean && direct == via;
      if (m <= 4) split = split && exact::fix_split_failures(n, m) == 0;
    }
  record(out, s, "fix_product_law equals enumeration (n <= 7)", product);
  record(out, s, "mean of Fix(Sigma Pi) via E_L[L/m + lambda0(L)]", mean);
  record(out, s, "fixed-point split per sigma (n <= 7, m <= 4)", split);

  const double limit = poisson_l1(1.5, 0.5);
  const double g3 = std::fabs(finite_n_profile(ProfileParams::make(1000, 500, 0.0)) - limit);
  const double g6 = std::fabs(finite_n_profile(ProfileParams::make(1000000, 500000, 0.0)) - limit);
  record(out, s, "finite-n evaluator approaches the Poisson limit", g6 < g3 && g6 < 1e-2,
         "gap 1e3 " + format_double(g3) + ", gap 1e6 " + format_double(g6));
  return out;
}

inline Checks exact_suite(int n_max) {
  Checks out;
  const std::string s = "exact";

  bool bij = true;
  for (int n = 1; n <= std::min(9, n_max); ++n)
    for (int k = 0; k <= n; ++k) {
      if (exact::state_count(n, k) > 100000) continue;
      const exact::StateIndex idx(n, k);
      for (std::int64_t r = 0; r < idx.size(); ++r) bij = bij && idx.rank(idx.unrank(r)) == r;
    }
  record(out, s, "rank/unrank bijection ((n)_k <= 1e5)", bij);

  {
    const auto spec = spectral::ProcessSpec::interchange(6, 3);
    const exact::Stepper st(spec);
    auto e = st.exact_point_mass();
    for (int t = 0; t < 10; ++t) e = st.step(e);
    Integer total = 0;
    for (const auto& v : e.numer) total += v;
    auto f = st.point_mass();
    double drift = 0.0;
    for (int t = 0; t < 200; ++t) {
      f = st.step(f);
      drift = std::max(drift, std::fabs(f.total() - 1.0));
    }
    record(out, s, "rational mass exactly 1", total == e.denom);
    record(out, s, "float mass drift < 1e-12 over 200 steps", drift < 1e-12, format_double(drift));
  }

  bool equal = true;
  double worst = 0.0;
  for (int n = 1; n <= std::min(7, n_max); ++n)
    for (int k = 1; k <= n; ++k) {
      const auto spec = spectral::ProcessSpec::interchange(n, k);
      const auto tv = exact::exact_tv_curve(spec, 40).tv;
      const spectral::FourierEvaluator fe(spec);
      for (int t = 0; t <= 40; ++t) worst = std::max(worst, std::fabs(2 * tv[static_cast<std::size_t>(t)] - fe.l1(t)));
    }
  equal = worst < 1e-10;
  record(out, s, "spectral l1 equals brute force (n <= 7)", equal, "max gap " + format_double(worst));

  bool poly = true;
  for (int n = 2; n <= std::min(8, n_max); ++n)
    for (int r = 1; r <= std::min(4, n - 1); ++r) poly = poly && exact::poly_identity_failures(n, r).empty();
  record(out, s, "depth-r character sum equals T_r(Fix) (n <= 8, r <= 4)", poly);

  bool split = true;
  for (int n = 1; n <= std::min(7, n_max); ++n)
    for (int m = 0; m <= std::min(4, n); ++m) split = split && exact::fix_split_failures(n, m) == 0;
  record(out, s, "fixed-point split by enumeration (n <= 7, m <= 4)", split);
  return out;
}

inline Checks montecarlo_suite(int n_max) {
  Checks out;
  const std::string s = "montecarlo";
  {
    const auto a = montecarlo::sample_fix_stats(20, 10, 20000, 7, 1);
    const auto b = montecarlo::sample_fix_stats(20, 10, 20000, 7, 3);
    record(out, s, "results independent of thread count", a.fix.counts == b.fix.counts && a.l.counts == b.l.counts);
  }
  bool uniform = true;
  for (int n = 1; n <= std::min(5, n_max); ++n) {
    const std::int64_t samples = 1000000;
    const auto h = montecarlo::sample_cycle_types(n, samples, 11);
    for (const auto& mu : symfunc::enumerate_partitions(n)) {
      const symfunc::CycleType ct(mu);
      const double p = to_double(symfunc::class_size(ct)) / to_double(factorial(n));
      const auto it = h.counts.find(static_cast<std::int64_t>(cycle_type_key(ct)));
      const double observed = it == h.counts.end() ? 0.0 : static_cast<double>(it->second);
      const double sigma = std::sqrt(samples * p * (1 - p));
      uniform = uniform && std::fabs(observed - samples * p) <= 4 * sigma + 1e-9;
    }
  }
  record(out, s, "permutation sampler matches class sizes (n <= 5)", uniform);

  if (n_max >= 6) {
    const auto spec = spectral::ProcessSpec::interchange(6, 3);
    montecarlo::SimConfig cfg;
    cfg.spec = spec;
    cfg.t = 10;
    cfg.samples = 1000000;
    cfg.seed = 2024;
    cfg.graph = montecarlo::Graph::complete_graph(6);
    const auto h = montecarlo::run_chain(cfg);
    const exact::Stepper st(spec);
    auto d = st.point_mass();
    for (int t = 0; t < 10; ++t) d = st.step(d);
    profile::PmfVector ref{0, d.mass, 0.0};
    const double tv = montecarlo::empirical_tv(h, ref);
    record(out, s, "chain agrees with exact evolution (n = 6, k = 3, t = 10)", tv < 0.02, "TV " + format_double(tv));
  }
  return out;
}

}  // namespace detail

/// Runs one suite, or all of them for "all". Throws PreconditionError for
/// an unknown suite name.
inline std::vector<CheckResult> run_suite(const std::string& suite, int n_max) {
  require(n_max >= 1, "verify: n-max must be positive");
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, n_max);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "symfunc") return detail::symfunc_suite(n_max);
  if (suite == "spectral") return detail::spectral_suite(n_max);
  if (suite == "profile") return detail::profile_suite(n_max);
  if (suite == "exact") return detail::exact_suite(n_max);
  if (suite == "montecarlo") return detail::montecarlo_suite(n_max);
  throw PreconditionError("unknown suite '" + suite + "' (expected symfunc, spectral, profile, exact, montecarlo or all)");
}

}  // namespace mixprof::io
