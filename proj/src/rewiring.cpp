#include "semnet/rewiring.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "semnet/degree_stats.hpp"
#include "semnet/random.hpp"

namespace semnet {
namespace {

std::uint64_t key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

void RewireConfig::validate() const {
  if (!(budget_multiplier >= 1.0)) throw std::invalid_argument("rewire budget multiplier must be >= 1");
  if (!(attempt_cap_multiplier >= 1.0)) throw std::invalid_argument("rewire attempt cap must be >= T");
  if (realizations == 0) throw std::invalid_argument("rewire realizations must be >= 1");
}

RewireResult rewire(const Graph& g, const RewireConfig& cfg) {
  cfg.validate();
  if (g.link_count() < 2) throw std::invalid_argument("rewire needs at least two links");

  std::vector<Edge> links = g.edges();
  std::unordered_set<std::uint64_t> present;
  present.reserve(links.size() * 2);
  for (auto [u, v] : links) present.insert(key(u, v));

  RewireResult res;
  res.swaps_target = static_cast<std::uint64_t>(std::ceil(cfg.budget_multiplier * static_cast<double>(links.size())));
  const auto cap = static_cast<std::uint64_t>(std::ceil(cfg.attempt_cap_multiplier * static_cast<double>(res.swaps_target)));
  auto rng = make_rng(cfg.seed);
  const std::uint64_t m = links.size();

  while (res.swaps_done < res.swaps_target) {
    if (res.attempts >= cap) {
      res.cap_exhausted = true;
      break;
    }
    ++res.attempts;
    const auto e1 = uniform_below(rng, m);
    const auto e2 = uniform_below(rng, m);
    auto [a, b] = links[e1];
    auto [c, d] = links[e2];
    if (a == c || a == d || b == c || b == d) continue;  // fewer than 4 distinct nodes
    // pick a from the first link and c from the second; they trade places
    if (rng() & 1) std::swap(a, b);
    if (rng() & 1) std::swap(c, d);
    if (present.contains(key(c, b)) || present.contains(key(a, d))) continue;
    present.erase(key(a, b));
    present.erase(key(c, d));
    present.insert(key(c, b));
    present.insert(key(a, d));
    links[e1] = {c, b};
    links[e2] = {a, d};
    ++res.swaps_done;
  }
  res.graph = Graph::from_edges(g.labels(), links);
  if (res.graph.link_count() != g.link_count() || res.graph.degrees() != g.degrees())
    throw std::logic_error("rewire: degree sequence changed");
  return res;
}

EnsembleMetric parse_ensemble_metric(std::string_view name) {
  if (name == "lcc_fraction") return EnsembleMetric::LccFraction;
  if (name == "annd_by_degree") return EnsembleMetric::AnndByDegree;
  if (name == "c_by_degree") return EnsembleMetric::ClusteringByDegree;
  if (name == "c_G") return EnsembleMetric::ClusteringGlobal;
  throw std::invalid_argument("unknown ensemble metric: " + std::string(name));
}

std::string_view to_string(EnsembleMetric m) {
  switch (m) {
    case EnsembleMetric::LccFraction: return "lcc_fraction";
    case EnsembleMetric::AnndByDegree: return "annd_by_degree";
    case EnsembleMetric::ClusteringByDegree: return "c_by_degree";
    case EnsembleMetric::ClusteringGlobal: return "c_G";
  }
  return "unknown";
}

MeanStd mean_std(std::span<const double> values) {
  MeanStd out;
  if (values.empty()) return out;
  const double n = static_cast<double>(values.size());
  for (double v : values) out.mean += v;
  out.mean /= n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(ss / (n - 1.0));
  }
  return out;
}

EnsembleStats rewired_ensemble_stats(const Graph& g, const RewireConfig& cfg, EnsembleMetric metric) {
  cfg.validate();
  const std::size_t r_count = cfg.realizations;
  std::vector<std::map<std::size_t, double>> per_run(r_count);
  std::vector<char> exhausted(r_count, 0);

#ifdef SEMNET_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(r_count); ++r) {
    RewireConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
    auto res = rewire(g, run_cfg);
    exhausted[r] = res.cap_exhausted ? 1 : 0;
    auto& out = per_run[r];
    switch (metric) {
      case EnsembleMetric::LccFraction: out[0] = connected_components(res.graph).lcc_fraction; break;
      case EnsembleMetric::AnndByDegree: out = annd(res.graph).annd_by_degree; break;
      case EnsembleMetric::ClusteringByDegree: out = clustering(res.graph).by_degree; break;
      case EnsembleMetric::ClusteringGlobal: out[0] = clustering(res.graph).global; break;
    }
  }

  EnsembleStats stats;
  stats.metric = metric;
  stats.realizations = r_count;
  stats.seed = cfg.seed;
  for (char e : exhausted) stats.cap_exhausted_runs += e != 0 ? 1 : 0;
  std::map<std::size_t, std::vector<double>> pooled;
  for (const auto& run : per_run)
    for (const auto& [k, v] : run) pooled[k].push_back(v);
  for (const auto& [k, vs] : pooled) stats.values[k] = mean_std(vs);
  return stats;
}

}  // namespace semnet
