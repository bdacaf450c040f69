#pragma once

#include "mixprof/exact/evolve.hpp"
#include "mixprof/io/format.hpp"
#include "mixprof/montecarlo/simulate.hpp"
#include "mixprof/profile/finite_n.hpp"
#include "mixprof/spectral/bounds.hpp"
#include "mixprof/spectral/fourier.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mixprof::io {

// ---- argument parsing -------------------------------------------------------

inline double parse_real(const std::string& text, const std::string& what) {
  double v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v))
    throw PreconditionError(what + ": '" + text + "' is not a number");
  return v;
}

/// Integer count; scientific notation such as 1e6 is accepted.
inline std::int64_t parse_count(const std::string& text, const std::string& what) {
  const double v = parse_real(text, what);
  if (v != std::floor(v) || std::fabs(v) > 9e15) throw PreconditionError(what + ": '" + text + "' is not an integer");
  return static_cast<std::int64_t>(v);
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

/// `lo:hi[:step]`, inclusive of hi up to rounding. Points are lo + i * step.
inline std::vector<double> parse_grid(const std::string& text, const std::string& what, bool step_required) {
  const auto parts = split(text, ':');
  if (parts.size() != 3 && (step_required || parts.size() != 2))
    throw PreconditionError(what + ": expected lo:hi" + std::string(step_required ? ":step" : "[:step]") + ", got '" + text + "'");
  const double lo = parse_real(parts[0], what);
  const double hi = parse_real(parts[1], what);
  const double step = parts.size() == 3 ? parse_real(parts[2], what) : 1.0;
  if (hi < lo) throw PreconditionError(what + ": hi must be >= lo");
  if (step <= 0) throw PreconditionError(what + ": step must be positive");
  const auto count = static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 1'000'000) throw PreconditionError(what + ": grid has more than 10^6 points");
  std::vector<double> out;
  for (std::int64_t i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

inline std::vector<std::int64_t> parse_count_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_count(p, what));
  return out;
}

/// Edge list file: one `a b` pair per line (0-based sites); `#` starts a comment.
inline montecarlo::Graph read_edge_list(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list " + path);
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int a = 0, b = 0;
    if (!(ls >> a)) continue;
    std::string rest;
    if (!(ls >> b) || (ls >> rest)) throw PreconditionError("edge list " + path + ":" + std::to_string(lineno) + ": expected two site indices");
    edges.emplace_back(a, b);
  }
  return montecarlo::Graph::from_edges(n, std::move(edges));
}

inline bool is_integral(double t) { return std::fabs(t - std::round(t)) < 1e-9; }

// ---- commands ---------------------------------------------------------------

/// `t,tv` for t = 0..t_max. Rational mode prints 30 significant digits.
inline Table exact_table(int n, int k, int t_max, bool rational) {
  const auto spec = spectral::ProcessSpec::interchange(n, k);
  const auto curve = exact::exact_tv_curve(spec, t_max, rational);
  Table table({"t", "tv"});
  for (int t = 0; t <= t_max; ++t)
    table.add_row({cell(t), rational ? cell(to_decimal_string((*curve.exact)[static_cast<std::size_t>(t)]))
                                     : cell(curve.tv[static_cast<std::size_t>(t)])});
  return table;
}

struct BoundsArgs {
  int n = 0;
  int k = 0;
  double c = 0.0;
  int big_m = 1;
  std::optional<std::vector<double>> t_grid;
  bool with_tv = false;
};

/// `t,ds_bound,main_term,error_term[,tv,sandwich]`.
///
/// ds_bound and exact error_term need n <= 40; beyond that error_term is the
/// dominating series at c = 2t/n - log k. main_term needs n <= 9 and integer t.
inline Table bounds_table(const BoundsArgs& a) {
  const auto spec = spectral::ProcessSpec::interchange(a.n, a.k);
  require(a.k >= 1, "bounds: k must be positive");
  require(a.big_m >= 1 && a.big_m < a.n, "bounds: need 1 <= M < n");
  const bool enumerable = a.n <= spectral::kErrorTermMaxN;
  const bool fourier = a.n <= spectral::kFourierMaxN;
  std::vector<double> grid;
  if (a.t_grid) {
    grid = *a.t_grid;
  } else {
    const double tc = spectral::cutoff_time(a.n, a.k, a.c);
    grid = {fourier ? std::round(tc) : tc};
  }
  for (double t : grid) require(t >= 0, "bounds: t must be nonnegative");

  std::vector<spectral::IrrepData> catalog;
  if (enumerable) catalog = spectral::irrep_catalog(spec);
  std::optional<spectral::FourierEvaluator> fe;
  if (fourier) fe.emplace(spec);
  std::optional<std::vector<double>> tv;
  if (a.with_tv) {
    double t_hi = 0;
    for (double t : grid)
      if (is_integral(t)) t_hi = std::max(t_hi, std::round(t));
    tv = exact::exact_tv_curve(spec, static_cast<int>(t_hi)).tv;
  }

  std::vector<std::string> header{"t", "ds_bound", "main_term", "error_term"};
  if (a.with_tv) {
    header.emplace_back("tv");
    header.emplace_back("sandwich");
  }
  Table table(header);
  const double log_k = std::log(static_cast<double>(a.k));
  for (double t : grid) {
    std::vector<Cell> row{cell(t)};
    std::optional<double> ds, mt, et;
    if (enumerable) {
      ds = spectral::ds_bound(catalog, t);
      et = spectral::error_term(catalog, t, a.big_m);
    } else {
      et = spectral::error_term_series_bound(spec, 2.0 * t / a.n - log_k, a.big_m);
    }
    if (fe && is_integral(t)) mt = fe->main_term(static_cast<int>(std::round(t)), a.big_m);
    row.push_back(ds ? cell(*ds) : blank());
    row.push_back(mt ? cell(*mt) : blank());
    row.push_back(et ? cell(*et) : blank());
    if (a.with_tv) {
      std::optional<double> v;
      if (is_integral(t)) v = (*tv)[static_cast<std::size_t>(std::round(t))];
      row.push_back(v ? cell(*v) : blank());
      if (v && mt && enumerable) row.push_back(cell(std::fabs(*v - 0.5 * *mt) <= 0.5 * *et + 1e-12 ? 1 : 0));
      else row.push_back(blank());
    }
    table.add_row(std::move(row));
  }
  return table;
}

/// `c,limit,finite_n@N...` in TV units; k = round(alpha N) for each N.
inline Table profile_table(double alpha, const std::vector<double>& c_grid, const std::vector<std::int64_t>& n_list) {
  require(alpha > 0 && alpha <= 1, "profile: alpha must lie in (0, 1]");
  std::vector<std::string> header{"c", "limit"};
  std::vector<std::pair<int, int>> sizes;
  for (auto n : n_list) {
    require(n >= 1 && n <= 1'000'000'000, "profile: n must lie in [1, 10^9]");
    const auto k = static_cast<int>(std::llround(alpha * static_cast<double>(n)));
    require(k >= 1, "profile: alpha * n rounds to 0 particles at n = " + std::to_string(n));
    sizes.emplace_back(static_cast<int>(n), k);
    header.push_back("finite_n@" + std::to_string(n));
  }
  Table table(header);
  for (double c : c_grid) {
    std::vector<Cell> row{cell(c), cell(profile::limit_profile(alpha, c))};
    for (const auto& [n, k] : sizes) row.push_back(cell(0.5 * profile::finite_n_profile(profile::ProfileParams::make(n, k, c))));
    table.add_row(std::move(row));
  }
  return table;
}

inline Table histogram_table(const montecarlo::Histogram& h) {
  Table table({"value", "count", "probability"});
  for (const auto& [v, c] : h.counts) table.add_row({cell(v), cell(c), cell(static_cast<double>(c) / static_cast<double>(h.samples))});
  return table;
}

}  // namespace mixprof::io
