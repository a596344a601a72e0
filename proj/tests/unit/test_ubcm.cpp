#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "semnet/motifs.hpp"
#include "semnet/ubcm.hpp"

using namespace semnet;

namespace {

std::vector<std::size_t> graphical_power_law(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto d = oracle::power_law_degrees(n, 2.5, 1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))), rng);
  std::size_t sum = 0;
  for (auto x : d) sum += x;
  if (sum % 2) ++d[0];
  return d;
}

double max_residual(const UbcmModel& m, std::span<const std::size_t> d) {
  const auto e = m.expected_degrees();
  double r = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) r = std::max(r, std::abs(e[i] - static_cast<double>(d[i])));
  return r;
}

}  // namespace

TEST_CASE("link probability edge values") {
  CHECK(link_probability(1.0, 1.0) == 0.5);
  CHECK(link_probability(0.0, 5.0) == 0.0);
  CHECK(link_probability(INFINITY, 2.0) == 1.0);
}

TEST_CASE("Erdos-Gallai against exhaustive realizability") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::vector<std::size_t>> realizable;
    oracle::for_each_graph(n, [&](const Graph& g) {
      auto d = g.degrees();
      std::sort(d.begin(), d.end());
      realizable.insert(d);
    });
    // every non-decreasing sequence with entries < n
    std::vector<std::size_t> d(n, 0);
    while (true) {
      CHECK(is_graphical(d) == realizable.contains(d));
      std::size_t i = n;
      while (i > 0 && d[i - 1] == n - 1) --i;
      if (i == 0) break;
      ++d[i - 1];
      for (std::size_t j = i; j < n; ++j) d[j] = d[i - 1];
    }
  }
  const std::vector<std::size_t> too_big{5, 1, 1};
  CHECK_FALSE(is_graphical(too_big));
}

TEST_CASE("regular sequence has p = k / (N - 1)") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{50, 4}, {200, 17}, {11, 10}}) {
    if (k == n - 1) continue;  // complete graph: p = 1, x infinite
    const std::vector<std::size_t> d(n, k);
    const auto m = fit_ubcm(d);
    CHECK(m.class_count() == 1);
    const double want = static_cast<double>(k) / static_cast<double>(n - 1);
    CHECK(std::abs(m.probability(0, 1) - want) < 1e-9);
    CHECK(m.residual() < 1e-8);
  }
}

TEST_CASE("star sequence") {
  const std::vector<std::size_t> d{5, 1, 1, 1, 1, 1};
  const auto m = fit_ubcm(d);
  const auto e = m.expected_degrees();
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(std::abs(e[i] - static_cast<double>(d[i])) < 1e-6);
}

TEST_CASE("heterogeneous sequences converge") {
  for (std::size_t n : {100u, 1000u, 10000u}) {
    const auto d = graphical_power_law(n, n);
    const auto m = fit_ubcm(d);
    CHECK(m.residual() < 1e-8);
    CHECK(max_residual(m, d) < 1e-8);
  }
}

TEST_CASE("precondition errors") {
  const std::vector<std::size_t> zeros(5, 0);
  CHECK_THROWS_AS(fit_ubcm(zeros), std::invalid_argument);
  const std::vector<std::size_t> odd{1, 1, 1};
  CHECK_THROWS_AS(fit_ubcm(odd), std::invalid_argument);
  const std::vector<std::size_t> d{3, 2, 2, 2, 1};
  CHECK_THROWS_AS(fit_ubcm(d, 1e-8, 0), UbcmError);
}

TEST_CASE("sampling extremes") {
  const std::vector<double> ones(7, INFINITY);
  const auto full = sample_ubcm(UbcmModel::from_parameters(ones), 1);
  CHECK(full.link_count() == 21);
  const std::vector<double> zero(7, 0.0);
  CHECK(sample_ubcm(UbcmModel::from_parameters(zero), 1).link_count() == 0);
}

TEST_CASE("regular model: sampled mean degree concentrates at k") {
  const std::size_t n = 100, k = 6;
  const auto m = fit_ubcm(std::vector<std::size_t>(n, k));
  const double p = m.probability(0, 1);
  double total = 0.0;
  const std::size_t samples = 1000;
  for (std::size_t s = 0; s < samples; ++s) total += sample_ubcm(m, s).mean_degree();
  const double mean = total / static_cast<double>(samples);
  // mean degree = 2L / N with L ~ Binomial(N(N-1)/2, p)
  const double pairs = static_cast<double>(n * (n - 1) / 2);
  const double sigma = 2.0 * std::sqrt(pairs * p * (1 - p)) / static_cast<double>(n) / std::sqrt(static_cast<double>(samples));
  CHECK(std::abs(mean - static_cast<double>(k)) <= 3.0 * sigma);
}

TEST_CASE("block sampler agrees with the exhaustive sweep in distribution") {
  const auto d = graphical_power_law(300, 4);
  const auto m = fit_ubcm(d);
  // per-node degree means over many draws, against the model's expectation
  const std::size_t R = 400;
  std::vector<double> block(d.size(), 0.0), sweep(d.size(), 0.0);
  for (std::size_t r = 0; r < R; ++r) {
    const auto a = sample_ubcm(m, r);
    const auto b = sample_ubcm_exhaustive(m, r + 100000);
    for (NodeId i = 0; i < d.size(); ++i) {
      block[i] += static_cast<double>(a.degree(i)) / R;
      sweep[i] += static_cast<double>(b.degree(i)) / R;
    }
  }
  // pooled by degree class to keep the check tight
  std::map<std::size_t, std::array<double, 3>> by_class;
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto& c = by_class[d[i]];
    c[0] += block[i];
    c[1] += sweep[i];
    c[2] += 1.0;
  }
  for (const auto& [k, c] : by_class) {
    const double nodes = c[2];
    // variance of a node degree is at most k; of the class mean, k / (nodes R)
    const double sigma = std::sqrt(static_cast<double>(k) / (nodes * R));
    INFO("class " << k);
    CHECK(std::abs(c[0] / nodes - static_cast<double>(k)) <= 4.0 * sigma);
    CHECK(std::abs(c[1] / nodes - static_cast<double>(k)) <= 4.0 * sigma);
  }
  CHECK(sample_ubcm(m, 9) == sample_ubcm(m, 9));
}

TEST_CASE("calibrated value aggregation") {
  const auto r = calibrated_value(CoefficientKind::Similarity, 0.2, {0.1, 0.0, 0.4, 0.2});
  CHECK(r.used == 3);
  CHECK(r.excluded == 1);
  CHECK(r.calibrated == doctest::Approx((std::log(2.0) + std::log(0.5) + 0.0) / 3.0));
  CHECK(r.samples.size() == 4);
  CHECK_THROWS_AS(calibrated_value(CoefficientKind::Similarity, 0.0, {0.1}), CalibrationError);
  CHECK_THROWS_AS(calibrated_value(CoefficientKind::Complementarity, 0.3, {0.0, 0.0}), CalibrationError);
}

TEST_CASE("calibration guards") {
  CalibrationOptions opts;
  CHECK_THROWS_AS(calibrate_coefficients(oracle::complete(10), opts), CalibrationError);
}

TEST_CASE("bipartite structure calibrates to complementarity over similarity") {
  // many overlapping K_{3,3} blocks on a ring: quadrangle rich, triangle free
  std::vector<Edge> e;
  const std::size_t blocks = 40;
  for (std::size_t b = 0; b < blocks; ++b)
    for (NodeId i = 0; i < 3; ++i)
      for (NodeId j = 0; j < 3; ++j) {
        const auto u = static_cast<NodeId>(6 * b + i);
        const auto v = static_cast<NodeId>((6 * b + 3 + j) % (6 * blocks));
        e.emplace_back(u, v);
      }
  for (std::size_t b = 0; b < blocks; ++b)
    e.emplace_back(static_cast<NodeId>(6 * b + 3), static_cast<NodeId>((6 * b + 6) % (6 * blocks)));
  std::mt19937_64 rng(2);
  // a few random chords so s(G) > 0
  std::uniform_int_distribution<NodeId> pick(0, 6 * blocks - 1);
  for (int c = 0; c < 30; ++c) e.emplace_back(pick(rng), pick(rng));
  const auto g = oracle::from_pairs(6 * blocks, e);
  CalibrationOptions opts;
  opts.samples = 60;
  opts.seed = 3;
  const auto pair = calibrate_coefficients(g, opts);
  CHECK(pair.complementarity.calibrated > 0.0);
  CHECK(pair.complementarity.calibrated > pair.similarity.calibrated);
}
