#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "semnet/graph.hpp"

namespace semnet {

class UbcmError : public std::runtime_error {
 public:
  UbcmError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected binary configuration model: links are independent with
/// p_ij = x_i x_j / (1 + x_i x_j). Nodes with equal degree share one
/// parameter, so the model is stored per degree class.
class UbcmModel {
 public:
  UbcmModel() = default;

  /// Model with explicit per-node parameters (x may be 0 or +inf).
  static UbcmModel from_parameters(std::span<const double> x);

  std::size_t node_count() const { return class_of_.size(); }
  std::size_t class_count() const { return class_x_.size(); }
  double x(NodeId i) const { return class_x_[class_of_[i]]; }
  double probability(NodeId i, NodeId j) const;
  std::vector<double> expected_degrees() const;

  /// max_i |expected degree - target degree| at the end of the fit
  double residual() const { return residual_; }
  std::size_t iterations() const { return iterations_; }

  std::span<const std::uint32_t> class_of() const { return class_of_; }
  std::span<const double> class_x() const { return class_x_; }
  std::span<const std::size_t> class_size() const { return class_size_; }

 private:
  friend UbcmModel fit_ubcm(std::span<const std::size_t>, double, std::size_t);

  std::vector<std::uint32_t> class_of_;
  std::vector<double> class_x_;
  std::vector<std::size_t> class_size_;
  double residual_ = 0.0;
  std::size_t iterations_ = 0;
};

double link_probability(double xi, double xj);

/// Erdős–Gallai test.
bool is_graphical(std::span<const std::size_t> degrees);

/// Solves sum_{j != i} p_ij = d_i per degree class: fixed-point sweeps
/// x_i <- d_i / sum_{j != i} x_j / (1 + x_i x_j) for a warm start, then
/// damped Newton in log x while the class count allows a dense Jacobian.
/// Throws std::invalid_argument for zero degrees or non-graphical
/// sequences, UbcmError if the residual stays above `tolerance`.
UbcmModel fit_ubcm(std::span<const std::size_t> degrees, double tolerance = 1e-8, std::size_t max_iterations = 20000);

/// Independent link draws, one per unordered pair. Pairs within a class
/// block share p, so absent links are skipped geometrically.
Graph sample_ubcm(const UbcmModel& model, std::uint64_t seed, std::span<const std::string> labels = {});

/// O(N^2) Bernoulli sweep; the reference the block sampler is checked against.
Graph sample_ubcm_exhaustive(const UbcmModel& model, std::uint64_t seed);

enum class CoefficientKind { Similarity, Complementarity };
std::string_view to_string(CoefficientKind k);

struct CalibrationResult {
  CoefficientKind kind{};
  double observed = 0.0;
  std::vector<double> samples;   // x(G_r) for every draw, zeros included
  double calibrated = 0.0;       // mean of log(x(G) / x(G_r)) over x(G_r) > 0
  double log_ratio_std = 0.0;    // sample standard deviation of those log ratios
  std::size_t used = 0;
  std::size_t excluded = 0;      // draws with x(G_r) = 0
  std::uint64_t seed = 0;
};

struct CalibrationOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  std::size_t min_nodes = 100;
  double fit_tolerance = 1e-8;
};

struct CalibrationPair {
  CalibrationResult similarity;
  CalibrationResult complementarity;
  double fit_residual = 0.0;
};

/// Fits the UBCM to g's degrees, draws R graphs (seed + r) and calibrates
/// both coefficients against them. Throws CalibrationError for graphs below
/// min_nodes or when a coefficient cannot be calibrated.
CalibrationPair calibrate_coefficients(const Graph& g, const CalibrationOptions& opts);

/// Same, against a given model rather than a fit to g.
CalibrationPair calibrate_against(const Graph& g, const UbcmModel& model, const CalibrationOptions& opts);

CalibrationResult calibrate(const Graph& g, CoefficientKind kind, const CalibrationOptions& opts);

/// Log-ratio aggregation shared by the calibration entry points.
CalibrationResult calibrated_value(CoefficientKind kind, double observed, std::vector<double> samples);

}  // namespace semnet
