// mixprof: command-line front end. Exit codes: 0 success, 1 I/O failure,
// 2 invalid input or guard violation, 3 verification failure.

#include "mixprof/io/commands.hpp"
#include "mixprof/io/verify.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

namespace {

using namespace mixprof;
using nlohmann::json;

enum Exit { kOk = 0, kIo = 1, kInput = 2, kVerify = 3 };

void write_table(const io::Table& table, const std::string& out, const std::string& format, const io::RunManifest& manifest) {
  if (format != "csv" && format != "json") throw PreconditionError("--format must be csv or json");
  io::emit(out, manifest, [&](std::ostream& os) {
    if (format == "csv") table.write_csv(os);
    else os << table.to_json().dump(2) << '\n';
  });
}

struct Options {
  int n = 0;
  int k = 0;
  int t_max = 40;
  bool rational = false;
  std::string out;
  std::string format = "csv";

  double c = 0.0;
  int big_m = 1;
  std::string t_grid;
  bool with_tv = false;

  double alpha = 0.5;
  std::string c_range = "0:0:1";
  std::string n_list;

  std::string t = "-1";
  std::string samples = "1e4";
  std::uint64_t seed = 1;
  std::string graph = "complete";
  std::string mode = "chain";
  std::string stat;
  std::optional<int> threads;

  std::string suite = "all";
  int n_max = 8;
};

int run_exact(const Options& o) {
  io::Stopwatch clock;
  const auto table = io::exact_table(o.n, o.k, o.t_max, o.rational);
  io::RunManifest man{"exact", {{"n", o.n}, {"k", o.k}, {"t_max", o.t_max}, {"rational", o.rational}}, std::nullopt};
  man.wall_seconds = clock.seconds();
  write_table(table, o.out, o.format, man);
  return kOk;
}

int run_bounds(const Options& o) {
  io::Stopwatch clock;
  io::BoundsArgs a;
  a.n = o.n;
  a.k = o.k;
  a.c = o.c;
  a.big_m = o.big_m;
  a.with_tv = o.with_tv;
  if (!o.t_grid.empty()) a.t_grid = io::parse_grid(o.t_grid, "--t-grid", false);
  const auto table = io::bounds_table(a);
  io::RunManifest man{"bounds", {{"n", o.n}, {"k", o.k}, {"c", o.c}, {"big_m", o.big_m}, {"t_grid", o.t_grid}, {"with_tv", o.with_tv}}, std::nullopt};
  man.wall_seconds = clock.seconds();
  write_table(table, o.out, o.format, man);
  return kOk;
}

int run_profile(const Options& o) {
  io::Stopwatch clock;
  const auto grid = io::parse_grid(o.c_range, "--c-range", true);
  const auto sizes = o.n_list.empty() ? std::vector<std::int64_t>{} : io::parse_count_list(o.n_list, "--n-list");
  const auto table = io::profile_table(o.alpha, grid, sizes);
  io::RunManifest man{"profile", {{"alpha", o.alpha}, {"c_range", o.c_range}, {"n_list", sizes}}, std::nullopt};
  man.wall_seconds = clock.seconds();
  write_table(table, o.out, o.format, man);
  return kOk;
}

int run_simulate(const Options& o) {
  io::Stopwatch clock;
  const auto samples = io::parse_count(o.samples, "--samples");
  require(samples >= 1, "--samples must be >= 1");
  require(o.n >= 1 && o.k >= 0 && o.k <= o.n, "simulate: need 0 <= k <= n");
  const int threads = montecarlo::resolve_threads(o.threads);
  json params{{"n", o.n}, {"k", o.k}, {"samples", samples}, {"seed", o.seed}, {"mode", o.mode}, {"threads", threads}};
  montecarlo::Histogram hist;
  if (o.mode == "chain") {
    std::int64_t t = io::parse_count(o.t, "--t");
    if (t < 0) {
      require(o.k >= 1, "simulate: --t is required when k = 0");
      t = std::llround(spectral::cutoff_time(o.n, o.k, 0.0));
    }
    montecarlo::SimConfig cfg;
    cfg.spec = spectral::ProcessSpec::interchange(o.n, o.k);
    cfg.t = t;
    cfg.samples = samples;
    cfg.seed = o.seed;
    cfg.graph = o.graph == "complete" ? montecarlo::Graph::complete_graph(o.n) : io::read_edge_list(o.graph, o.n);
    const std::string stat = o.stat.empty() ? "state" : o.stat;
    if (stat == "state") cfg.stat = montecarlo::ChainStat::State;
    else if (stat == "fixed") cfg.stat = montecarlo::ChainStat::FixedTagged;
    else throw PreconditionError("--stat for chain mode must be state or fixed");
    params["t"] = t;
    params["graph"] = o.graph;
    params["stat"] = stat;
    hist = montecarlo::run_chain(cfg, threads);
  } else if (o.mode == "fix-stats") {
    const std::string stat = o.stat.empty() ? "fix" : o.stat;
    if (stat != "fix" && stat != "l") throw PreconditionError("--stat for fix-stats mode must be fix or l");
    params["m"] = o.n - o.k;
    params["stat"] = stat;
    const auto fs = montecarlo::sample_fix_stats(o.n, o.n - o.k, samples, o.seed, threads);
    hist = stat == "fix" ? fs.fix : fs.l;
  } else {
    throw PreconditionError("--mode must be chain or fix-stats");
  }
  io::RunManifest man{"simulate", params, o.seed};
  man.wall_seconds = clock.seconds();
  write_table(io::histogram_table(hist), o.out, o.format, man);
  return kOk;
}

int run_verify(const Options& o) {
  const auto results = io::run_suite(o.suite, o.n_max);
  bool ok = true;
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::cout << std::left << std::setw(11) << "suite" << std::setw(static_cast<int>(width) + 2) << "check" << "result\n";
  for (const auto& r : results) {
    ok = ok && r.passed;
    std::cout << std::setw(11) << r.suite << std::setw(static_cast<int>(width) + 2) << r.name << (r.passed ? "PASS" : "FAIL");
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << '\n';
  }
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixprof: mixing profiles of the interchange process on the complete graph"};
  app.set_version_flag("--version", std::string(mixprof::kVersion));
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "output file (stdout when omitted; manifest goes to <out>.manifest.json or stderr)");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* exact = app.add_subcommand("exact", "exact TV curve from the identity placement");
  exact->add_option("--n", o.n, "number of sites")->required();
  exact->add_option("--k", o.k, "number of particles")->required();
  exact->add_option("--t-max", o.t_max, "last time step");
  exact->add_flag("--rational", o.rational, "exact rational arithmetic (n <= 7)");
  add_out(exact);

  auto* bounds = app.add_subcommand("bounds", "square-root bound, main term and error term");
  bounds->add_option("--n", o.n)->required();
  bounds->add_option("--k", o.k)->required();
  bounds->add_option("--c", o.c, "window parameter used for the default t = t_c");
  bounds->add_option("--big-m", o.big_m, "depth cutoff M")->required();
  bounds->add_option("--t-grid", o.t_grid, "lo:hi[:step]");
  bounds->add_flag("--with-tv", o.with_tv, "add exact tv and sandwich columns");
  add_out(bounds);

  auto* prof = app.add_subcommand("profile", "limit profile and finite-n evaluator");
  prof->add_option("--alpha", o.alpha, "particle density k/n")->required();
  prof->add_option("--c-range", o.c_range, "lo:hi:step");
  prof->add_option("--n-list", o.n_list, "comma-separated sizes, e.g. 1e4,1e6");
  add_out(prof);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo histograms");
  sim->add_option("--n", o.n)->required();
  sim->add_option("--k", o.k)->required();
  sim->add_option("--t", o.t, "steps (default round(t_c) at c = 0)");
  sim->add_option("--samples", o.samples, "sample count, 1e6 notation accepted");
  sim->add_option("--seed", o.seed);
  sim->add_option("--graph", o.graph, "complete or a path to an edge list");
  sim->add_option("--mode", o.mode, "chain or fix-stats");
  sim->add_option("--stat", o.stat, "chain: state|fixed; fix-stats: fix|l");
  sim->add_option("--threads", o.threads, "worker threads (falls back to MIXPROF_THREADS, then 1)");
  add_out(sim);

  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  ver->add_option("--suite", o.suite, "symfunc, spectral, profile, exact, montecarlo or all");
  ver->add_option("--n-max", o.n_max, "largest n used by size-dependent checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*exact) return run_exact(o);
    if (*bounds) return run_bounds(o);
    if (*prof) return run_profile(o);
    if (*sim) return run_simulate(o);
    if (*ver) return run_verify(o);
  } catch (const mixprof::io::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const mixprof::CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const mixprof::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
