#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "semnet/graph.hpp"

namespace semnet {

struct RewireConfig {
  double budget_multiplier = 4.0;      // T = multiplier * L successful swaps
  double attempt_cap_multiplier = 100; // attempts allowed = cap multiplier * T
  std::uint64_t seed = 0;
  std::size_t realizations = 10;

  /// Throws std::invalid_argument if the multipliers violate
  /// multiplier >= 1 or cap >= T.
  void validate() const;
};

struct RewireResult {
  Graph graph;
  std::uint64_t swaps_target = 0;     // T
  std::uint64_t swaps_done = 0;
  std::uint64_t attempts = 0;
  bool cap_exhausted = false;
};

/// Degree-preserving randomization by repeated endpoint swaps.
///
/// Each attempt draws two links (a, b), (c, d) uniformly with replacement,
/// rejects them if they share a node, orients each link at random and
/// proposes (c, b), (a, d). Proposals that duplicate an existing link are
/// rejected. T counts accepted swaps only; a cap on attempts bounds the loop
/// for graphs with few or no valid swaps. Node ids and labels are kept.
RewireResult rewire(const Graph& g, const RewireConfig& cfg);

enum class EnsembleMetric { LccFraction, AnndByDegree, ClusteringByDegree, ClusteringGlobal };

EnsembleMetric parse_ensemble_metric(std::string_view name);
std::string_view to_string(EnsembleMetric m);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single value
};

struct EnsembleStats {
  EnsembleMetric metric{};
  /// Scalar metrics are stored under key 0; per-degree metrics per degree.
  std::map<std::size_t, MeanStd> values;
  std::size_t realizations = 0;
  std::size_t cap_exhausted_runs = 0;
  std::uint64_t seed = 0;
};

/// R realizations with seeds seed + r, evaluated independently.
EnsembleStats rewired_ensemble_stats(const Graph& g, const RewireConfig& cfg, EnsembleMetric metric);

MeanStd mean_std(std::span<const double> values);

}  // namespace semnet
