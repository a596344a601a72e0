#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "semnet/degree_stats.hpp"

namespace semnet {

class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TailVerdict { PowerLaw, HardlyPowerLaw, NotPowerLaw };

std::string_view to_string(TailVerdict v);

/// The extreme value index and the density exponent are linked by
/// xi = 1 / (gamma - 1).
inline double gamma_from_xi(double xi) { return 1.0 + 1.0 / xi; }
inline double xi_from_gamma(double gamma) { return 1.0 / (gamma - 1.0); }

/// Least-squares slope of log(height) against log(bin center) over the bins
/// inside `window` with non-zero height; returns -slope. Throws
/// EstimationError with fewer than three usable bins.
double slope_exponent(const BinnedDensity& binned, const DegreeWindow& window);

// The estimators below take the sample sorted in descending order, Y_0 >= Y_1
// >= ..., with every value > 0. `k` is the number of upper order statistics.

/// Hill: (1/k) sum_{i<k} ln(Y_i / Y_k).
double hill_xi(std::span<const double> desc, std::size_t k);

struct MomentsXi {
  double xi = 0.0;
  bool degenerate = false;  // second log-moment is zero
};

/// Dekkers-Einmahl-de Haan moment estimator
///   M1 + 1 - 1 / (2 (1 - M1^2 / M2)),  Mr = (1/k) sum_{i<k} ln(Y_i / Y_k)^r.
MomentsXi moments_xi(std::span<const double> desc, std::size_t k);

/// Kernel-weighted Hill estimator with the biweight kernel
/// K(u) = (15/16)(1 - u^2)^2 on [0, 1):
///   sum_i K(i / (h n)) i ln(Y_{i-1} / Y_i) / sum_i K(i / (h n)).
/// i ln(Y_{i-1}/Y_i) are the scaled log-spacings, each with mean xi in a
/// Pareto tail. Throws std::invalid_argument unless 0 < h < 1.
double kernel_xi(std::span<const double> desc, double bandwidth);

/// PowerLaw iff all three > 1/4, NotPowerLaw iff any < 0, else HardlyPowerLaw
/// (xi = 0 exactly lands there).
TailVerdict classify(double xi_hill, double xi_moments, double xi_kernel);

struct TailSizeChoice {
  std::size_t k = 0;
  double ks_distance = 0.0;
};

/// Tail size minimising the Kolmogorov-Smirnov distance between the top-k
/// sample and a Pareto with Hill's exponent and scale Y_k, over a log-spaced
/// grid of k in [min_tail, n/2].
TailSizeChoice select_tail_size(std::span<const double> desc, std::size_t min_tail = 10,
                                std::size_t grid_points = 60);

struct TailEstimate {
  std::optional<double> gamma_slope;
  std::optional<double> gamma_hill;
  std::optional<double> gamma_moments;
  std::optional<double> gamma_kernel;
  double xi_hill = 0.0;
  double xi_moments = 0.0;
  double xi_kernel = 0.0;
  bool moments_degenerate = false;
  TailVerdict verdict = TailVerdict::NotPowerLaw;
  std::size_t tail_size = 0;   // k* shared by Hill and moments
  double bandwidth = 0.0;      // kernel h = k*/n
  double ks_distance = 0.0;
};

struct TailOptions {
  std::size_t min_tail = 10;
  std::size_t grid_points = 60;
};

/// Full estimate from a raw sample (any order, values > 0). The slope route
/// is filled only when a binned density and window are supplied and have
/// enough bins.
TailEstimate estimate_tail(std::span<const double> sample, const TailOptions& opts = {},
                           const BinnedDensity* binned = nullptr, const DegreeWindow* window = nullptr);

TailEstimate estimate_tail(const Graph& g, const TailOptions& opts = {});

/// Networks at or below this size are not classified.
inline constexpr std::size_t kMinNodesForTailEstimate = 1000;

std::vector<double> sorted_descending(std::span<const double> sample);

}  // namespace semnet
