#pragma once

#include "mixprof/exact/state.hpp"
#include "mixprof/montecarlo/philox.hpp"
#include "mixprof/permutation.hpp"
#include "mixprof/profile/pmf.hpp"
#include "mixprof/spectral/process.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

namespace mixprof::montecarlo {

/// Integer counts per observed value. Merging adds counts, so the result
/// does not depend on how samples were split among workers.
struct Histogram {
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t samples = 0;

  void add(std::int64_t value) {
    ++counts[value];
    ++samples;
  }

  void merge(const Histogram& other) {
    for (const auto& [v, c] : other.counts) counts[v] += c;
    samples += other.samples;
  }

  double probability(std::int64_t value) const {
    const auto it = counts.find(value);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(samples);
  }

  /// Dense pmf from the smallest to the largest observed value.
  profile::PmfVector to_pmf() const {
    profile::PmfVector p;
    if (counts.empty()) return p;
    p.offset = static_cast<int>(counts.begin()->first);
    p.weights.assign(static_cast<std::size_t>(counts.rbegin()->first - counts.begin()->first + 1), 0.0);
    for (const auto& [v, c] : counts) p.weights[static_cast<std::size_t>(v - p.offset)] = static_cast<double>(c) / static_cast<double>(samples);
    return p;
  }
};

/// Half the l1 distance between an empirical histogram and a reference law.
inline double empirical_tv(const Histogram& samples, const profile::PmfVector& reference) {
  return profile::total_variation(samples.to_pmf(), reference);
}

inline double empirical_tv(const profile::PmfVector& samples, const profile::PmfVector& reference) {
  return profile::total_variation(samples, reference);
}

/// Sites and edges; an empty edge list means the complete graph with the
/// ordered-pair rule.
struct Graph {
  int sites = 0;
  std::vector<std::pair<int, int>> edges;

  bool complete() const { return edges.empty(); }

  static Graph complete_graph(int n) { return Graph{n, {}}; }

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    require(n >= 1, "graph: need at least one site");
    require(!edges.empty(), "graph: edge list is empty");
    for (const auto& [a, b] : edges)
      require(a >= 0 && a < n && b >= 0 && b < n,
              "graph: edge (" + std::to_string(a) + ", " + std::to_string(b) + ") has an endpoint outside [0, " + std::to_string(n) + ")");
    return Graph{n, std::move(edges)};
  }
};

/// What to record from each final configuration.
enum class ChainStat {
  State,        // k-IP rank of the tagged particle positions
  FixedTagged,  // number of sites still holding their initial colour
};

struct SimConfig {
  spectral::ProcessSpec spec = spectral::ProcessSpec::interchange(1, 0);
  std::int64_t t = 0;
  std::int64_t samples = 1;
  std::uint64_t seed = 0;
  Graph graph;
  ChainStat stat = ChainStat::State;

  void validate() const {
    require(samples >= 1, "simulation: samples must be >= 1");
    require(t >= 0, "simulation: t must be >= 0");
    require(graph.sites == spec.n(), "simulation: graph has " + std::to_string(graph.sites) + " sites but n = " + std::to_string(spec.n()));
    if (stat == ChainStat::State && !spec.is_interchange())
      throw PreconditionError("simulation: the state statistic needs the k-particle interchange process");
  }
};

/// Worker count: explicit value, else MIXPROF_THREADS, else 1.
inline int resolve_threads(std::optional<int> requested) {
  if (requested) return std::max(1, *requested);
  if (const char* env = std::getenv("MIXPROF_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

namespace detail {

/// Splits [0, samples) into contiguous chunks, runs `body(lo, hi, hist)` per
/// chunk and merges the integer histograms.
template <class Body>
Histogram parallel_histogram(std::int64_t samples, int threads, Body body) {
  threads = static_cast<int>(std::min<std::int64_t>(std::max(1, threads), samples));
  std::vector<Histogram> parts(static_cast<std::size_t>(threads));
  auto chunk = [&](int w) {
    const std::int64_t lo = samples * w / threads;
    const std::int64_t hi = samples * (w + 1) / threads;
    body(lo, hi, parts[static_cast<std::size_t>(w)]);
  };
  if (threads == 1) {
    chunk(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(chunk, w);
    for (auto& th : pool) th.join();
  }
  Histogram out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace detail

/// Runs `samples` independent trajectories from the identity placement.
/// Sample i uses Philox stream i; step s draws from counter (s, i).
inline Histogram run_chain(const SimConfig& cfg, std::optional<int> threads = std::nullopt) {
  cfg.validate();
  const int n = cfg.spec.n();
  const int k = cfg.spec.k();
  std::optional<exact::StateIndex> index;
  if (cfg.stat == ChainStat::State) index.emplace(n, k);

  // Colour of each site at time 0: tagged particles 0..k-1 for the k-IP,
  // consecutive blocks for a general colouring.
  std::vector<int> start(static_cast<std::size_t>(n));
  {
    int site = 0, colour = 0;
    for (int a : cfg.spec.colours()) {
      for (int j = 0; j < a; ++j) start[static_cast<std::size_t>(site++)] = colour;
      ++colour;
    }
  }
  const Philox4x32 gen(cfg.seed);
  const auto edges = static_cast<std::uint64_t>(cfg.graph.edges.size());

  return detail::parallel_histogram(cfg.samples, resolve_threads(threads), [&](std::int64_t lo, std::int64_t hi, Histogram& h) {
    std::vector<int> config(start.size());
    std::vector<int> where(static_cast<std::size_t>(k));
    for (std::int64_t s = lo; s < hi; ++s) {
      config = start;
      for (std::int64_t step = 0; step < cfg.t; ++step) {
        const auto w = gen.draw(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(step));
        std::size_t a, b;
        if (cfg.graph.complete()) {
          a = uniform_below(w[0], w[1], static_cast<std::uint64_t>(n));
          b = uniform_below(w[2], w[3], static_cast<std::uint64_t>(n));
        } else {
          const auto& e = cfg.graph.edges[uniform_below(w[0], w[1], edges)];
          a = static_cast<std::size_t>(e.first);
          b = static_cast<std::size_t>(e.second);
        }
        std::swap(config[a], config[b]);
      }
      if (cfg.stat == ChainStat::State) {
        for (int site = 0; site < n; ++site) {
          const int c = config[static_cast<std::size_t>(site)];
          if (c < k) where[static_cast<std::size_t>(c)] = site;
        }
        h.add(index->rank(where));
      } else {
        std::int64_t same = 0;
        for (std::size_t site = 0; site < config.size(); ++site) same += config[site] == start[site];
        h.add(same);
      }
    }
  });
}

/// Uniform permutation of {0, ..., n-1} by Fisher-Yates.
inline void shuffle_into(std::vector<int>& p, PhiloxStream& rng) {
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
}

struct FixStats {
  Histogram fix;  // Fix(Sigma Pi)
  Histogram l;    // L_Sigma
};

/// Empirical laws of Fix(Sigma Pi) and L_Sigma for Sigma uniform on S_n and
/// Pi uniform on S_m acting on the first m indices.
inline FixStats sample_fix_stats(int n, int m, std::int64_t samples, std::uint64_t seed, std::optional<int> threads = std::nullopt) {
  require(n >= 1 && m >= 0 && m <= n, "sample_fix_stats: need 0 <= m <= n");
  require(samples >= 1, "sample_fix_stats: samples must be >= 1");
  const Philox4x32 gen(seed);
  // Both statistics come from the same draws; pack them as fix * (n + 1) + L.
  const auto joint = detail::parallel_histogram(samples, resolve_threads(threads), [&](std::int64_t lo, std::int64_t hi, Histogram& h) {
    std::vector<int> sigma(static_cast<std::size_t>(n)), pi(static_cast<std::size_t>(m));
    for (std::int64_t s = lo; s < hi; ++s) {
      PhiloxStream rng(gen, static_cast<std::uint64_t>(s), 0);
      shuffle_into(sigma, rng);
      shuffle_into(pi, rng);
      std::int64_t fix = 0, l = 0;
      for (int i = 0; i < m; ++i) {
        fix += sigma[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] == i;
        l += sigma[static_cast<std::size_t>(i)] < m;
      }
      for (int i = m; i < n; ++i) fix += sigma[static_cast<std::size_t>(i)] == i;
      h.add(fix * (n + 1) + l);
    }
  });
  FixStats out;
  for (const auto& [v, c] : joint.counts) {
    out.fix.counts[v / (n + 1)] += c;
    out.l.counts[v % (n + 1)] += c;
  }
  out.fix.samples = out.l.samples = joint.samples;
  return out;
}

/// Uniform permutations of S_n by cycle-type key, for sampler checks.
inline Histogram sample_cycle_types(int n, std::int64_t samples, std::uint64_t seed, std::optional<int> threads = std::nullopt) {
  require(n >= 1 && n <= 15, "sample_cycle_types: need 1 <= n <= 15");
  require(samples >= 1, "sample_cycle_types: samples must be >= 1");
  const Philox4x32 gen(seed);
  return detail::parallel_histogram(samples, resolve_threads(threads), [&](std::int64_t lo, std::int64_t hi, Histogram& h) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (std::int64_t s = lo; s < hi; ++s) {
      PhiloxStream rng(gen, static_cast<std::uint64_t>(s), 0);
      shuffle_into(sigma, rng);
      h.add(static_cast<std::int64_t>(cycle_type_key(sigma)));
    }
  });
}

}  // namespace mixprof::montecarlo
