// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "mixprof/exact/enumerate.hpp"
#include "mixprof/exact/evolve.hpp"
#include "mixprof/io/format.hpp"
#include "mixprof/montecarlo/simulate.hpp"
#include "mixprof/profile/finite_n.hpp"
#include "mixprof/profile/laws.hpp"
#include "mixprof/spectral/bounds.hpp"
#include "mixprof/spectral/fourier.hpp"
#include "mixprof/symfunc/characters.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

namespace {

using namespace mixprof;
using spectral::ProcessSpec;

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string fmt(double v) { return io::format_double(v); }

std::string where(int n, int k, int t) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " t=" + std::to_string(t);
}

Outcome identities() {
  bool burnside = true, orth = true, hook = true, poly = true;
  for (int n = 1; n <= 10; ++n) {
    const symfunc::CharacterTable table(n);
    Integer sum = 0;
    for (const auto& l : table.irreps()) sum += symfunc::dim_hook(l) * symfunc::dim_hook(l);
    burnside = burnside && sum == factorial(n);
    std::vector<Integer> sizes;
    for (const auto& mu : table.classes()) sizes.push_back(symfunc::class_size(mu));
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = i; j < table.size(); ++j) {
        Integer inner = 0;
        for (std::size_t c = 0; c < sizes.size(); ++c) inner += sizes[c] * table.at(i, c) * table.at(j, c);
        orth = orth && inner == (i == j ? factorial(n) : Integer(0));
      }
    if (n <= 8)
      for (const auto& l : table.irreps()) hook = hook && symfunc::dim_hook(l) == oracle::syt_count(l.parts());
  }
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r <= std::min(4, n - 1); ++r) poly = poly && exact::poly_identity_failures(n, r).empty();
  std::string d = std::string("burnside ") + (burnside ? "ok" : "bad") + ", orthogonality " + (orth ? "ok" : "bad") +
                  ", hook/SYT " + (hook ? "ok" : "bad") + ", depth-r polynomial " + (poly ? "ok" : "bad");
  return {burnside && orth && hook && poly, d};
}

// Exact TV curves for every n <= 7 and 1 <= k <= n, t = 0..40.
const std::map<std::pair<int, int>, std::vector<double>>& curves() {
  static const auto out = [] {
    std::map<std::pair<int, int>, std::vector<double>> m;
    for (int n = 1; n <= 7; ++n)
      for (int k = 0; k <= n; ++k) m[{n, k}] = exact::exact_tv_curve(ProcessSpec::interchange(n, k), 40).tv;
    return m;
  }();
  return out;
}

Outcome brute_force_equivalence() {
  double worst = 0.0;
  std::string at;
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      const spectral::FourierEvaluator fe(ProcessSpec::interchange(n, k));
      const auto& tv = curves().at({n, k});
      for (int t = 0; t <= 40; ++t) {
        const double gap = std::fabs(2 * tv[static_cast<std::size_t>(t)] - fe.l1(t));
        if (gap > worst) {
          worst = gap;
          at = where(n, k, t);
        }
      }
    }
  return {worst < 1e-10, "max |2 TV - l1| = " + fmt(worst) + (at.empty() ? "" : " at " + at)};
}

Outcome sandwich() {
  double slack = -INFINITY;
  std::string at;
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto spec = ProcessSpec::interchange(n, k);
      const spectral::FourierEvaluator fe(spec);
      const auto cat = spectral::irrep_catalog(spec);
      const auto& tv = curves().at({n, k});
      for (int t = 0; t <= 40; ++t)
        for (int m = 1; m < n; ++m) {
          const double s = std::fabs(tv[static_cast<std::size_t>(t)] - 0.5 * fe.main_term(t, m)) - 0.5 * spectral::error_term(cat, t, m);
          if (s > slack) {
            slack = s;
            at = where(n, k, t) + " M=" + std::to_string(m);
          }
        }
    }
  return {slack <= 1e-12, "max of |TV - MT/2| - ET/2 = " + fmt(slack) + " at " + at};
}

Outcome ds_dominance() {
  double slack = -INFINITY;
  std::string at;
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto cat = spectral::irrep_catalog(ProcessSpec::interchange(n, k));
      const auto& tv = curves().at({n, k});
      for (int t = 0; t <= 40; ++t) {
        double sum = 0.0;
        for (const auto& ir : cat) {
          if (ir.trivial() || ir.mult == 0) continue;
          sum += to_double(ir.mult) * to_double(ir.dim) * std::pow(std::fabs(ir.ratio_value), 2 * t);
        }
        const double s = tv[static_cast<std::size_t>(t)] - std::sqrt(0.5 * sum);
        if (s > slack) {
          slack = s;
          at = where(n, k, t);
        }
      }
    }
  return {slack <= 1e-12, "max of TV - bound = " + fmt(slack) + " at " + at};
}

struct Counted {
  std::map<int, Integer> l, fix;
  std::map<int, std::map<int, Integer>> high_given_l;
  std::map<int, Integer> l_total;
  Integer total_fix = 0;
};

// Pi acts on the first m indices; Fix counts i with sigma(pi(i)) = i.
Counted enumerate_pairs(int n, int m) {
  Counted c;
  const auto group = oracle::permutations(n);
  const auto small = oracle::permutations(m);
  std::vector<std::int64_t> fix(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& sigma : group) {
    int l = 0, high = 0;
    for (int i = 0; i < m; ++i) l += sigma[static_cast<std::size_t>(i)] < m;
    for (int i = m; i < n; ++i) high += sigma[static_cast<std::size_t>(i)] == i;
    c.l[l] += 1;
    c.high_given_l[l][high] += 1;
    c.l_total[l] += 1;
    for (const auto& pi : small) {
      int f = high;
      for (int i = 0; i < m; ++i) f += sigma[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] == i;
      ++fix[static_cast<std::size_t>(f)];
    }
  }
  for (int v = 0; v <= n; ++v)
    if (fix[static_cast<std::size_t>(v)]) c.fix[v] = fix[static_cast<std::size_t>(v)];
  c.total_fix = factorial(n) * factorial(m);
  return c;
}

bool same(const profile::ExactPmf& got, const std::map<int, Integer>& counts, const Integer& total) {
  Rational mass = 0;
  for (const auto& w : got.weights) mass += w;
  if (mass != 1) return false;
  for (const auto& [v, c] : counts)
    if (got.at(v) != Rational(c, total)) return false;
  return true;
}

Outcome closed_forms() {
  bool hg = true, uncond = true, cond = true, split = true, product = true;
  double worst_tv = 0.0;
  for (int m = 0; m <= 7; ++m) {
    const auto perms = oracle::permutations(m);
    for (int big_l = 0; big_l <= m; ++big_l) {
      std::map<int, Integer> counts;
      for (const auto& p : perms) {
        int f = 0;
        for (int i = 0; i < big_l; ++i) f += p[static_cast<std::size_t>(i)] == i;
        counts[f] += 1;
      }
      uncond = uncond && same(profile::fix_law_uncond_exact(m, big_l), counts, factorial(m));
    }
  }
  for (int n = 1; n <= 7; ++n)
    for (int m = 0; m <= n; ++m) {
      const auto c = enumerate_pairs(n, m);
      hg = hg && same(profile::hypergeom_pmf_exact(m, n), c.l, factorial(n));
      for (const auto& [l, law] : c.high_given_l) cond = cond && same(profile::fix_law_cond_exact(n, m, l), law, c.l_total.at(l));
      if (m <= 4) split = split && exact::fix_split_failures(n, m) == 0;
      profile::PmfVector enumerated;
      enumerated.offset = 0;
      for (int v = 0; v <= n; ++v) enumerated.weights.push_back(c.fix.contains(v) ? to_double(Rational(c.fix.at(v), c.total_fix)) : 0.0);
      const double gap = profile::total_variation(profile::fix_product_law(n, m), enumerated);
      worst_tv = std::max(worst_tv, gap);
      product = product && gap < 1e-12;
    }
  std::string d = std::string("hypergeometric ") + (hg ? "ok" : "bad") + ", unconditional " + (uncond ? "ok" : "bad") +
                  ", conditional " + (cond ? "ok" : "bad") + ", split " + (split ? "ok" : "bad") + ", product law max TV " + fmt(worst_tv);
  return {hg && uncond && cond && split && product, d};
}

Outcome limit_convergence() {
  bool ok = true;
  std::ostringstream d;
  const double alpha = 0.5;
  for (int c = -2; c <= 2; ++c) {
    const double limit = 0.5 * profile::poisson_l1(alpha + std::exp(-c), alpha);
    const double g3 = std::fabs(0.5 * profile::finite_n_profile(profile::ProfileParams::make(1000, 500, c)) - limit);
    const double g6 = std::fabs(0.5 * profile::finite_n_profile(profile::ProfileParams::make(1000000, 500000, c)) - limit);
    ok = ok && g6 < 1e-2 && g6 < g3;
    d << (c == -2 ? "" : "; ") << "c=" << c << " gap " << fmt(g3) << " -> " << fmt(g6);
  }
  return {ok, d.str()};
}

Outcome small_n_trend() {
  bool ok = true;
  double prev = INFINITY;
  std::ostringstream d;
  for (int n : {6, 7, 8}) {
    const int k = static_cast<int>(std::lround(n / 2.0));
    const int t = static_cast<int>(std::lround(spectral::cutoff_time(n, k, 0.0)));
    const double tv = exact::exact_tv_curve(ProcessSpec::interchange(n, k), t).tv.back();
    const double alpha = static_cast<double>(k) / n;
    const double limit = 0.5 * profile::poisson_l1(alpha + 1.0, alpha);
    const double gap = std::fabs(tv - limit);
    ok = ok && gap <= 0.2 && gap <= prev;
    prev = gap;
    d << (n == 6 ? "" : "; ") << "n=" << n << " k=" << k << " t=" << t << " TV " << fmt(tv) << " limit " << fmt(limit) << " gap " << fmt(gap);
  }
  return {ok, d.str()};
}

Outcome char_powers() {
  bool ok = true;
  int checked = 0;
  std::string at;
  for (int n : {20, 30, 40}) {
    const auto spec = ProcessSpec::interchange(n, n / 2);
    for (const auto& l : symfunc::enumerate_partitions(n))
      for (double c : {-1.0, 0.0, 1.0}) {
        const auto r = spectral::char_power_check(l, spec, c);
        checked += r.applicable();
        if (!r.all_pass() && at.empty()) at = " first failure " + l.to_string() + " n=" + std::to_string(n) + " c=" + fmt(c);
        ok = ok && r.all_pass();
      }
  }
  return {ok, std::to_string(checked) + " inequality instances" + at};
}

Outcome projection() {
  double slack = -INFINITY;
  std::string at;
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      for (int kp = 0; kp <= k; ++kp)
        for (int t = 0; t <= 40; ++t) {
          const double s = curves().at({n, kp})[static_cast<std::size_t>(t)] - curves().at({n, k})[static_cast<std::size_t>(t)];
          if (s > slack) {
            slack = s;
            at = where(n, k, t) + " k'=" + std::to_string(kp);
          }
        }
  return {slack <= 1e-12, "max of TV_k' - TV_k = " + fmt(slack) + " at " + at};
}

std::string csv(const montecarlo::Histogram& h) {
  std::ostringstream os;
  for (const auto& [v, c] : h.counts) os << v << ',' << c << '\n';
  return os.str();
}

Outcome monte_carlo() {
  const std::int64_t samples = 1000000;
  const auto a = montecarlo::sample_fix_stats(20, 10, samples, 20240601, 1);
  const auto b = montecarlo::sample_fix_stats(20, 10, samples, 20240601, 1);
  const double tv_l = montecarlo::empirical_tv(a.l, profile::hypergeom_pmf(10, 20));
  const double tv_fix = montecarlo::empirical_tv(a.fix, profile::fix_product_law(20, 10));
  const bool rerun = csv(a.l) == csv(b.l) && csv(a.fix) == csv(b.fix);
  return {tv_l < 0.01 && tv_fix < 0.02 && rerun,
          "TV(L, HG) " + fmt(tv_l) + ", TV(Fix, product law) " + fmt(tv_fix) + ", rerun " + (rerun ? "identical" : "differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"spectral-combinatorial identities", identities},
      {"brute-force equivalence", brute_force_equivalence},
      {"approximation sandwich", sandwich},
      {"square-root bound dominance", ds_dominance},
      {"closed-form laws by enumeration", closed_forms},
      {"limit-profile convergence", limit_convergence},
      {"small-n profile trend", small_n_trend},
      {"character power bounds", char_powers},
      {"projection monotonicity", projection},
      {"Monte Carlo certification", monte_carlo},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.ok;
    std::printf("[%s] %2zu %s (%.1f s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
