#include "semnet/degree_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace semnet {

double DegreeDensity::probability(std::size_t k) const {
  auto it = counts.find(k);
  if (it == counts.end() || total <= 0.0) return 0.0;
  return it->second / total;
}

DegreeDensity DegreeDensity::from_degrees(std::span<const std::size_t> degrees) {
  DegreeDensity d;
  for (auto k : degrees) d.counts[k] += 1.0;
  d.total = static_cast<double>(degrees.size());
  return d;
}

DegreeDensity degree_density(const Graph& g) {
  const auto deg = g.degrees();
  return DegreeDensity::from_degrees(deg);
}

double BinnedDensity::center(std::size_t i) const { return std::sqrt(edges[i] * edges[i + 1]); }

BinnedDensity log_bin(const DegreeDensity& density, double log_width) {
  if (!(log_width > 0.0)) throw std::invalid_argument("log_bin: log width must be positive");
  BinnedDensity out;
  out.log_width = log_width;
  out.total = density.total;
  auto first = density.counts.lower_bound(1);
  if (first == density.counts.end()) return out;
  const auto k_max = static_cast<double>(density.counts.rbegin()->first);

  const double ratio = std::exp(log_width);
  out.edges.push_back(1.0);
  while (out.edges.back() <= k_max) out.edges.push_back(out.edges.back() * ratio);
  const std::size_t bins = out.edges.size() - 1;
  out.heights.assign(bins, 0.0);
  out.mass.assign(bins, 0.0);
  out.counts.assign(bins, 0.0);
  out.min_degree.assign(bins, 0);
  out.max_degree.assign(bins, 0);

  std::size_t bin = 0;
  for (auto it = first; it != density.counts.end(); ++it) {
    const auto k = static_cast<double>(it->first);
    while (k >= out.edges[bin + 1]) ++bin;
    if (out.counts[bin] == 0.0) out.min_degree[bin] = it->first;
    out.max_degree[bin] = it->first;
    out.counts[bin] += it->second;
    out.mass[bin] += density.probability(it->first);
  }
  for (std::size_t i = 0; i < bins; ++i) out.heights[i] = out.mass[i] / out.width(i);
  return out;
}

double default_log_width(std::size_t max_degree, std::size_t bins) {
  const double span = std::log(static_cast<double>(std::max<std::size_t>(max_degree, 1)) + 1.0);
  return std::max(span / static_cast<double>(std::max<std::size_t>(bins, 1)), 0.1);
}

std::vector<double> mean_neighbor_degree(const Graph& g) {
  std::vector<double> out(g.node_count(), 0.0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto nb = g.neighbors(i);
    if (nb.empty()) continue;
    std::size_t sum = 0;
    for (NodeId j : nb) sum += g.degree(j);
    out[i] = static_cast<double>(sum) / static_cast<double>(nb.size());
  }
  return out;
}

MixingStats annd(const Graph& g) {
  if (g.link_count() == 0) throw std::invalid_argument("annd: graph has no links");
  MixingStats out;
  const auto knn = mean_neighbor_degree(g);
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto d = g.degree(i);
    if (d == 0) continue;
    auto& [sum, n] = acc[d];
    sum += knn[i];
    ++n;
  }
  for (const auto& [k, v] : acc) out.annd_by_degree[k] = v.first / static_cast<double>(v.second);

  // Over both orientations E[x] = E[y] = sum d^2 / 2L and Var x = Var y.
  double s1 = 0.0, s2 = 0.0, sxy = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto di = static_cast<double>(g.degree(i));
    s1 += di * di;
    s2 += di * di * di;
    for (NodeId j : g.neighbors(i)) sxy += di * static_cast<double>(g.degree(j));
  }
  const double m = 2.0 * static_cast<double>(g.link_count());
  const double mu = s1 / m;
  const double var = s2 / m - mu * mu;
  const double cov = sxy / m - mu * mu;
  if (var <= 1e-12 * std::max(1.0, mu * mu)) {
    out.rho_d = 0.0;
    out.rho_degenerate = true;
  } else {
    out.rho_d = std::clamp(cov / var, -1.0, 1.0);
  }
  return out;
}

ClusteringStats clustering(const Graph& g) {
  ClusteringStats out;
  const std::size_t n = g.node_count();
  out.local.assign(n, 0.0);
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t epoch = 0;
  for (NodeId i = 0; i < n; ++i) {
    const auto nb = g.neighbors(i);
    const auto d = nb.size();
    if (d < 2) continue;
    ++epoch;
    for (NodeId j : nb) mark[j] = epoch;
    std::size_t linked = 0;  // each neighbor-neighbor link seen twice
    for (NodeId j : nb)
      for (NodeId k : g.neighbors(j)) linked += mark[k] == epoch ? 1 : 0;
    const double y = static_cast<double>(linked / 2);
    out.local[i] = 2.0 * y / (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  double total = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    total += out.local[i];
    auto& [sum, cnt] = acc[g.degree(i)];
    sum += out.local[i];
    ++cnt;
  }
  out.global = n == 0 ? 0.0 : total / static_cast<double>(n);
  for (const auto& [k, v] : acc) out.by_degree[k] = v.first / static_cast<double>(v.second);
  return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_line: size mismatch");
  LineFit f;
  f.points = x.size();
  if (x.size() < 2) throw std::invalid_argument("fit_line: need at least two points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissa");
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

DegreeWindow default_tail_window(const DegreeDensity& density) {
  DegreeWindow w;
  double best = 0.0;
  for (const auto& [k, c] : density.counts) {
    if (k == 0) continue;
    if (c > best) {
      best = c;
      w.lo = static_cast<double>(k);
    }
  }
  // hi stays open: the last bin's center may sit above d_max
  return w;
}

}  // namespace semnet
