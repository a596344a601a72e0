#include "semnet/ubcm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "semnet/motifs.hpp"
#include "semnet/random.hpp"

namespace semnet {
namespace {

// Above this many degree classes the dense Newton step is too expensive and
// the fit relies on fixed-point sweeps alone.
constexpr std::size_t kDenseNewtonLimit = 4000;

double sigmoid(double s) {
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

struct ClassSystem {
  std::vector<double> size;    // n_a
  std::vector<double> degree;  // d_a

  std::size_t classes() const { return size.size(); }

  // F_a = sum_b n_b p_ab - p_aa - d_a, in log-parameters theta
  std::vector<double> residual(const std::vector<double>& theta) const {
    const std::size_t c = classes();
    std::vector<double> f(c, 0.0);
    for (std::size_t a = 0; a < c; ++a) {
      double e = 0.0;
      for (std::size_t b = 0; b < c; ++b) e += size[b] * sigmoid(theta[a] + theta[b]);
      f[a] = e - sigmoid(2.0 * theta[a]) - degree[a];
    }
    return f;
  }

  Eigen::MatrixXd jacobian(const std::vector<double>& theta) const {
    const std::size_t c = classes();
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c));
    for (std::size_t a = 0; a < c; ++a) {
      double diag = 0.0;
      for (std::size_t b = 0; b < c; ++b) {
        const double p = sigmoid(theta[a] + theta[b]);
        const double w = p * (1.0 - p);
        if (b == a) {
          diag += 2.0 * (size[a] - 1.0) * w;
        } else {
          j(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = size[b] * w;
          diag += size[b] * w;
        }
      }
      j(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) = diag;
    }
    return j;
  }

  // x_a <- d_a / (sum_b n_b x_b / (1 + x_a x_b) - x_a / (1 + x_a^2))
  void fixed_point_sweep(std::vector<double>& theta) const {
    const std::size_t c = classes();
    std::vector<double> next(c);
    for (std::size_t a = 0; a < c; ++a) {
      double denom = 0.0;
      for (std::size_t b = 0; b < c; ++b) {
        // x_b / (1 + x_a x_b) = sigmoid(theta_a + theta_b) / x_a
        denom += size[b] * sigmoid(theta[a] + theta[b]);
      }
      denom -= sigmoid(2.0 * theta[a]);
      // denom here is x_a * (the bracket), so x_a' = d_a x_a / denom
      next[a] = std::log(degree[a]) + theta[a] - std::log(denom);
    }
    theta = std::move(next);
  }
};

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double link_probability(double xi, double xj) {
  if (xi <= 0.0 || xj <= 0.0) return 0.0;
  const double prod = xi * xj;
  if (std::isinf(prod)) return 1.0;
  return prod / (1.0 + prod);
}

bool is_graphical(std::span<const std::size_t> degrees) {
  std::vector<std::size_t> d(degrees.begin(), degrees.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const std::size_t n = d.size();
  std::uint64_t total = 0;
  for (auto x : d) total += x;
  if (total % 2 != 0) return false;
  if (n > 0 && d.front() >= n) return false;
  // prefix sums of the ascending tail for the min(d_i, k) term
  std::uint64_t lhs = 0;
  std::size_t tail = n;  // first index with d < k+1 ... maintained lazily
  std::vector<std::uint64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + d[i];
  for (std::size_t k = 1; k <= n; ++k) {
    lhs += d[k - 1];
    // nodes after position k with degree >= k contribute k, the rest d_i
    while (tail > k && d[tail - 1] < k) --tail;
    const std::size_t first_small = std::max(tail, k);
    const std::uint64_t rhs = static_cast<std::uint64_t>(k) * (k - 1) +
                              static_cast<std::uint64_t>(k) * (first_small - k) + suffix[first_small];
    if (lhs > rhs) return false;
  }
  return true;
}

UbcmModel UbcmModel::from_parameters(std::span<const double> x) {
  UbcmModel m;
  std::map<double, std::uint32_t> index;
  m.class_of_.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [it, inserted] = index.try_emplace(x[i], static_cast<std::uint32_t>(m.class_x_.size()));
    if (inserted) {
      m.class_x_.push_back(x[i]);
      m.class_size_.push_back(0);
    }
    m.class_of_[i] = it->second;
    ++m.class_size_[it->second];
  }
  return m;
}

double UbcmModel::probability(NodeId i, NodeId j) const {
  if (i == j) return 0.0;
  return link_probability(x(i), x(j));
}

std::vector<double> UbcmModel::expected_degrees() const {
  const std::size_t c = class_count();
  std::vector<double> per_class(c, 0.0);
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b)
      per_class[a] += static_cast<double>(class_size_[b]) * link_probability(class_x_[a], class_x_[b]);
    per_class[a] -= link_probability(class_x_[a], class_x_[a]);
  }
  std::vector<double> out(node_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = per_class[class_of_[i]];
  return out;
}

UbcmModel fit_ubcm(std::span<const std::size_t> degrees, double tolerance, std::size_t max_iterations) {
  if (degrees.empty()) throw std::invalid_argument("fit_ubcm: empty degree sequence");
  if (std::any_of(degrees.begin(), degrees.end(), [](std::size_t d) { return d == 0; }))
    throw std::invalid_argument("fit_ubcm: every degree must be >= 1");
  if (!is_graphical(degrees)) throw std::invalid_argument("fit_ubcm: degree sequence is not graphical");

  UbcmModel model;
  std::map<std::size_t, std::uint32_t> index;
  for (auto d : degrees) index.emplace(d, 0);
  ClassSystem sys;
  {
    std::uint32_t c = 0;
    for (auto& [d, id] : index) {
      id = c++;
      sys.degree.push_back(static_cast<double>(d));
    }
  }
  sys.size.assign(index.size(), 0.0);
  model.class_of_.resize(degrees.size());
  model.class_size_.assign(index.size(), 0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const auto c = index.at(degrees[i]);
    model.class_of_[i] = c;
    sys.size[c] += 1.0;
    ++model.class_size_[c];
  }

  const double stubs = std::accumulate(degrees.begin(), degrees.end(), 0.0,
                                       [](double acc, std::size_t d) { return acc + static_cast<double>(d); });
  std::vector<double> theta(sys.classes());
  for (std::size_t a = 0; a < theta.size(); ++a) theta[a] = std::log(sys.degree[a] / std::sqrt(stubs));

  auto f = sys.residual(theta);
  double res = max_abs(f);
  std::size_t it = 0;
  const bool dense = sys.classes() <= kDenseNewtonLimit;
  while (res >= tolerance && it < max_iterations) {
    ++it;
    bool stepped = false;
    if (dense) {
      const auto jac = sys.jacobian(theta);
      Eigen::VectorXd rhs(static_cast<Eigen::Index>(f.size()));
      for (std::size_t a = 0; a < f.size(); ++a) rhs(static_cast<Eigen::Index>(a)) = -f[a];
      const Eigen::VectorXd step = jac.fullPivLu().solve(rhs);
      if (step.allFinite()) {
        double alpha = 1.0;
        for (int tries = 0; tries < 40; ++tries, alpha *= 0.5) {
          std::vector<double> trial(theta);
          for (std::size_t a = 0; a < trial.size(); ++a) trial[a] += alpha * step(static_cast<Eigen::Index>(a));
          auto ft = sys.residual(trial);
          const double rt = max_abs(ft);
          if (std::isfinite(rt) && rt < res) {
            theta = std::move(trial);
            f = std::move(ft);
            res = rt;
            stepped = true;
            break;
          }
        }
      }
    }
    if (!stepped) {
      auto trial = theta;
      sys.fixed_point_sweep(trial);
      auto ft = sys.residual(trial);
      const double rt = max_abs(ft);
      if (!std::isfinite(rt)) break;
      theta = std::move(trial);
      f = std::move(ft);
      res = rt;
    }
  }

  model.class_x_.resize(theta.size());
  for (std::size_t a = 0; a < theta.size(); ++a) model.class_x_[a] = std::exp(theta[a]);
  model.residual_ = res;
  model.iterations_ = it;
  if (!(res < tolerance))
    throw UbcmError("UBCM fit did not converge: residual " + std::to_string(res) + " after " + std::to_string(it) +
                        " iterations",
                    res);
  return model;
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

// Number of Bernoulli(p) failures before the next success, or `limit` if
// that would run past the end of the block.
std::uint64_t geometric_skip(Rng& rng, double log_q, std::uint64_t limit) {
  const double u = 1.0 - uniform01(rng);  // (0, 1]
  const double skip = std::floor(std::log(u) / log_q);
  if (!(skip < static_cast<double>(limit))) return limit;
  return static_cast<std::uint64_t>(skip);
}

}  // namespace

Graph sample_ubcm(const UbcmModel& model, std::uint64_t seed, std::span<const std::string> labels) {
  const std::size_t n = model.node_count();
  const std::size_t c = model.class_count();
  std::vector<std::vector<NodeId>> members(c);
  for (NodeId i = 0; i < n; ++i) members[model.class_of()[i]].push_back(i);

  auto rng = make_rng(seed);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < c; ++a) {
    const auto& ma = members[a];
    for (std::size_t b = a; b < c; ++b) {
      const auto& mb = members[b];
      const double p = link_probability(model.class_x()[a], model.class_x()[b]);
      const std::uint64_t pairs = a == b ? ma.size() * (ma.size() - (ma.empty() ? 0 : 1)) / 2
                                         : static_cast<std::uint64_t>(ma.size()) * mb.size();
      if (pairs == 0 || p <= 0.0) continue;
      auto emit = [&](std::uint64_t idx) {
        if (a != b) {
          edges.emplace_back(ma[idx / mb.size()], mb[idx % mb.size()]);
        } else {
          // idx enumerates pairs (r, s), s < r, row by row: r(r-1)/2 + s
          auto r = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
          while (r * (r - 1) / 2 > idx) --r;
          while ((r + 1) * r / 2 <= idx) ++r;
          const std::uint64_t s = idx - r * (r - 1) / 2;
          edges.emplace_back(ma[r], ma[s]);
        }
      };
      if (p >= 1.0) {
        for (std::uint64_t idx = 0; idx < pairs; ++idx) emit(idx);
        continue;
      }
      const double log_q = std::log1p(-p);
      std::uint64_t idx = geometric_skip(rng, log_q, pairs);
      while (idx < pairs) {
        emit(idx);
        idx += 1 + geometric_skip(rng, log_q, pairs);
      }
    }
  }
  std::vector<std::string> names = labels.empty() ? default_labels(n) : std::vector<std::string>(labels.begin(), labels.end());
  return Graph::from_edges(std::move(names), edges);
}

Graph sample_ubcm_exhaustive(const UbcmModel& model, std::uint64_t seed) {
  const std::size_t n = model.node_count();
  auto rng = make_rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (uniform01(rng) < model.probability(i, j)) edges.emplace_back(i, j);
  return Graph::from_edges(default_labels(n), edges);
}

std::string_view to_string(CoefficientKind k) {
  return k == CoefficientKind::Similarity ? "similarity" : "complementarity";
}

CalibrationResult calibrated_value(CoefficientKind kind, double observed, std::vector<double> samples) {
  CalibrationResult r;
  r.kind = kind;
  r.observed = observed;
  r.samples = std::move(samples);
  if (!(observed > 0.0))
    throw CalibrationError(std::string("observed ") + std::string(to_string(kind)) + " coefficient is zero");
  std::vector<double> logs;
  for (double s : r.samples) {
    if (s > 0.0) {
      logs.push_back(std::log(observed / s));
    } else {
      ++r.excluded;
    }
  }
  r.used = logs.size();
  if (logs.empty())
    throw CalibrationError(std::string("every sampled ") + std::string(to_string(kind)) + " coefficient is zero");
  double sum = 0.0;
  for (double v : logs) sum += v;
  r.calibrated = sum / static_cast<double>(logs.size());
  if (logs.size() > 1) {
    double ss = 0.0;
    for (double v : logs) ss += (v - r.calibrated) * (v - r.calibrated);
    r.log_ratio_std = std::sqrt(ss / static_cast<double>(logs.size() - 1));
  }
  return r;
}

CalibrationPair calibrate_against(const Graph& g, const UbcmModel& model, const CalibrationOptions& opts) {
  if (g.node_count() < opts.min_nodes)
    throw CalibrationError("graph has " + std::to_string(g.node_count()) + " nodes; calibration needs at least " +
                           std::to_string(opts.min_nodes));
  if (opts.samples == 0) throw std::invalid_argument("calibration needs at least one sample");
  const auto observed = graph_coefficients(g);
  std::vector<double> s(opts.samples), c(opts.samples);
#ifdef SEMNET_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(opts.samples); ++r) {
    const auto sample = sample_ubcm(model, opts.seed + static_cast<std::uint64_t>(r));
    const auto coeff = graph_coefficients(sample);
    s[r] = coeff.s;
    c[r] = coeff.c;
  }
  CalibrationPair out;
  out.fit_residual = model.residual();
  out.similarity = calibrated_value(CoefficientKind::Similarity, observed.s, std::move(s));
  out.complementarity = calibrated_value(CoefficientKind::Complementarity, observed.c, std::move(c));
  out.similarity.seed = out.complementarity.seed = opts.seed;
  return out;
}

CalibrationPair calibrate_coefficients(const Graph& g, const CalibrationOptions& opts) {
  if (g.node_count() < opts.min_nodes)
    throw CalibrationError("graph has " + std::to_string(g.node_count()) + " nodes; calibration needs at least " +
                           std::to_string(opts.min_nodes));
  const auto degrees = g.degrees();
  const auto model = fit_ubcm(degrees, opts.fit_tolerance);
  return calibrate_against(g, model, opts);
}

CalibrationResult calibrate(const Graph& g, CoefficientKind kind, const CalibrationOptions& opts) {
  auto pair = calibrate_coefficients(g, opts);
  return kind == CoefficientKind::Similarity ? pair.similarity : pair.complementarity;
}

}  // namespace semnet
