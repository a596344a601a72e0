#include "semnet/tail.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace semnet {
namespace {

void check_order_args(std::span<const double> desc, std::size_t k) {
  if (k < 2 || k >= desc.size()) throw std::invalid_argument("tail size must satisfy 2 <= k < n");
  if (desc[k] <= 0.0) throw std::invalid_argument("tail sample must be positive");
}

double biweight(double u) {
  if (u >= 1.0) return 0.0;
  const double t = 1.0 - u * u;
  return 15.0 / 16.0 * t * t;
}

}  // namespace

std::string_view to_string(TailVerdict v) {
  switch (v) {
    case TailVerdict::PowerLaw: return "power_law";
    case TailVerdict::HardlyPowerLaw: return "hardly_power_law";
    case TailVerdict::NotPowerLaw: return "not_power_law";
  }
  return "unknown";
}

double slope_exponent(const BinnedDensity& binned, const DegreeWindow& window) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < binned.size(); ++i) {
    const double k = binned.center(i);
    if (binned.heights[i] > 0.0 && window.contains(k)) {
      x.push_back(std::log(k));
      y.push_back(std::log(binned.heights[i]));
    }
  }
  if (x.size() < 3) throw EstimationError("slope estimate needs at least 3 non-empty bins in the window");
  return -fit_line(x, y).slope;
}

double hill_xi(std::span<const double> desc, std::size_t k) {
  check_order_args(desc, k);
  // log of the ratio, so rescaling by a power of two changes nothing
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += std::log(desc[i] / desc[k]);
  return sum / static_cast<double>(k);
}

MomentsXi moments_xi(std::span<const double> desc, std::size_t k) {
  check_order_args(desc, k);
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double e = std::log(desc[i] / desc[k]);
    m1 += e;
    m2 += e * e;
  }
  m1 /= static_cast<double>(k);
  m2 /= static_cast<double>(k);
  MomentsXi out;
  if (m2 <= 0.0) {
    out.degenerate = true;
    return out;
  }
  out.xi = m1 + 1.0 - 0.5 / (1.0 - m1 * m1 / m2);
  return out;
}

double kernel_xi(std::span<const double> desc, double bandwidth) {
  if (!(bandwidth > 0.0 && bandwidth < 1.0)) throw std::invalid_argument("kernel bandwidth must lie in (0, 1)");
  const std::size_t n = desc.size();
  if (n < 2) throw std::invalid_argument("kernel estimator needs at least two values");
  const double scale = bandwidth * static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double w = biweight(static_cast<double>(i) / scale);
    if (w == 0.0) break;
    if (desc[i] <= 0.0) throw std::invalid_argument("tail sample must be positive");
    num += w * static_cast<double>(i) * std::log(desc[i - 1] / desc[i]);
    den += w;
  }
  return den > 0.0 ? num / den : 0.0;
}

TailVerdict classify(double xi_hill, double xi_moments, double xi_kernel) {
  const double xs[] = {xi_hill, xi_moments, xi_kernel};
  if (std::any_of(std::begin(xs), std::end(xs), [](double x) { return x < 0.0; })) return TailVerdict::NotPowerLaw;
  if (std::all_of(std::begin(xs), std::end(xs), [](double x) { return x > 0.25; })) return TailVerdict::PowerLaw;
  return TailVerdict::HardlyPowerLaw;
}

std::vector<double> sorted_descending(std::span<const double> sample) {
  std::vector<double> v(sample.begin(), sample.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

TailSizeChoice select_tail_size(std::span<const double> desc, std::size_t min_tail, std::size_t grid_points) {
  const std::size_t n = desc.size();
  if (n < 4) throw EstimationError("tail size selection needs at least 4 values");
  const std::size_t hi = std::max<std::size_t>(n / 2, 2);
  const std::size_t lo = std::clamp<std::size_t>(min_tail, 2, hi);

  std::vector<std::size_t> grid;
  const double llo = std::log(static_cast<double>(lo));
  const double lhi = std::log(static_cast<double>(hi));
  const std::size_t pts = std::max<std::size_t>(grid_points, 2);
  for (std::size_t g = 0; g < pts; ++g) {
    const double t = static_cast<double>(g) / static_cast<double>(pts - 1);
    const auto k = static_cast<std::size_t>(std::llround(std::exp(llo + t * (lhi - llo))));
    if (grid.empty() || grid.back() != k) grid.push_back(std::clamp(k, lo, hi));
  }

  TailSizeChoice best{0, 2.0};
  for (std::size_t k : grid) {
    const double xi = hill_xi(desc, k);
    if (!(xi > 0.0)) continue;
    const double alpha = 1.0 / xi;
    const double x_min = desc[k];
    // Top-k sample ascending is desc[k-1], ..., desc[0]; walk distinct values.
    double d = 0.0;
    std::size_t below = 0;
    std::size_t idx = k;
    while (idx > 0) {
      const double v = desc[idx - 1];
      std::size_t run = 0;
      while (idx > 0 && desc[idx - 1] == v) {
        --idx;
        ++run;
      }
      const double fit = 1.0 - std::pow(v / x_min, -alpha);
      const double before = static_cast<double>(below) / static_cast<double>(k);
      below += run;
      const double after = static_cast<double>(below) / static_cast<double>(k);
      d = std::max({d, std::abs(fit - before), std::abs(fit - after)});
    }
    if (d < best.ks_distance) best = {k, d};
  }
  if (best.k == 0) {
    // No grid point with a positive Hill index: fall back to the widest tail.
    best = {grid.back(), 1.0};
  }
  return best;
}

TailEstimate estimate_tail(std::span<const double> sample, const TailOptions& opts, const BinnedDensity* binned,
                           const DegreeWindow* window) {
  const auto desc = sorted_descending(sample);
  if (desc.empty() || desc.back() <= 0.0) throw EstimationError("tail estimation needs a positive sample");
  TailEstimate est;
  if (binned != nullptr && window != nullptr) {
    try {
      est.gamma_slope = slope_exponent(*binned, *window);
    } catch (const EstimationError&) {
    }
  }
  const auto choice = select_tail_size(desc, opts.min_tail, opts.grid_points);
  est.tail_size = choice.k;
  est.ks_distance = choice.ks_distance;
  est.xi_hill = hill_xi(desc, choice.k);
  const auto mom = moments_xi(desc, choice.k);
  est.xi_moments = mom.xi;
  est.moments_degenerate = mom.degenerate;
  est.bandwidth = std::clamp(static_cast<double>(choice.k) / static_cast<double>(desc.size()), 1e-9, 0.999);
  est.xi_kernel = kernel_xi(desc, est.bandwidth);

  auto gamma = [](double xi) -> std::optional<double> {
    if (xi > 0.0) return gamma_from_xi(xi);
    return std::nullopt;
  };
  est.gamma_hill = gamma(est.xi_hill);
  est.gamma_moments = gamma(est.xi_moments);
  est.gamma_kernel = gamma(est.xi_kernel);
  est.verdict = classify(est.xi_hill, est.xi_moments, est.xi_kernel);
  return est;
}

TailEstimate estimate_tail(const Graph& g, const TailOptions& opts) {
  std::vector<double> sample;
  sample.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.degree(v) > 0) sample.push_back(static_cast<double>(g.degree(v)));
  const auto density = degree_density(g);
  const auto binned = log_bin(density, default_log_width(g.max_degree()));
  const auto window = default_tail_window(density);
  return estimate_tail(sample, opts, &binned, &window);
}

}  // namespace semnet
