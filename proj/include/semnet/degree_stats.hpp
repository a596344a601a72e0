#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "semnet/graph.hpp"

namespace semnet {

/// Degree histogram; probability = count / total. Counts are real-valued so
/// an analytic density can be binned the same way as an observed one.
struct DegreeDensity {
  std::map<std::size_t, double> counts;
  double total = 0.0;

  double probability(std::size_t k) const;
  static DegreeDensity from_degrees(std::span<const std::size_t> degrees);
};

DegreeDensity degree_density(const Graph& g);

/// Logarithmically binned density. Bin i covers [edges[i], edges[i+1]) with
/// edges[i+1] / edges[i] = e^b, starting at k = 1. Height is the bin's
/// probability mass divided by its linear width, so sum(height * width) is
/// the mass of all degrees >= 1.
struct BinnedDensity {
  double log_width = 0.0;
  std::vector<double> edges;       // size = bins + 1
  std::vector<double> heights;     // mass / width
  std::vector<double> mass;        // probability mass x per bin
  std::vector<double> counts;      // raw node counts per bin
  std::vector<std::size_t> min_degree;  // smallest observed degree per bin (0 if empty)
  std::vector<std::size_t> max_degree;
  double total = 0.0;              // node count behind the probabilities

  std::size_t size() const { return heights.size(); }
  double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
  /// Geometric bin center, used as the regression abscissa.
  double center(std::size_t i) const;
};

/// Degrees < 1 are excluded. Throws std::invalid_argument when b <= 0.
BinnedDensity log_bin(const DegreeDensity& density, double log_width);

/// b such that about `bins` bins span [1, d_max]; never below 0.1.
double default_log_width(std::size_t max_degree, std::size_t bins = 20);

struct MixingStats {
  std::map<std::size_t, double> annd_by_degree;
  double rho_d = 0.0;
  bool rho_degenerate = false;  // zero degree variance across link ends
};

/// Two-stage average: each node's mean neighbor degree, then the mean of
/// that over nodes of equal degree. rho_d is the Pearson correlation of the
/// end degrees over both orientations of every link.
MixingStats annd(const Graph& g);

/// Per-node mean neighbor degree (0 for isolated nodes).
std::vector<double> mean_neighbor_degree(const Graph& g);

struct ClusteringStats {
  std::vector<double> local;  // c_i, 0 when d_i < 2
  double global = 0.0;        // mean of c_i over all N nodes
  std::map<std::size_t, double> by_degree;
};

ClusteringStats clustering(const Graph& g);

/// Least-squares fit y = intercept + slope * x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

struct DegreeWindow {
  double lo = 1.0;
  double hi = 0.0;  // hi <= 0 means unbounded
  bool contains(double k) const { return k >= lo && (hi <= 0.0 || k <= hi); }
};

/// Regression window starting at the mode of the raw density and running to
/// d_max.
DegreeWindow default_tail_window(const DegreeDensity& density);

}  // namespace semnet
