#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "semnet/degree_stats.hpp"

using namespace semnet;

TEST_CASE("degree density of small shapes") {
  const auto c4 = degree_density(oracle::cycle(4));
  CHECK(c4.counts.size() == 1);
  CHECK(c4.probability(2) == 1.0);

  const auto s = degree_density(oracle::star(4));
  CHECK(s.probability(1) == doctest::Approx(0.8));
  CHECK(s.probability(4) == doctest::Approx(0.2));
  CHECK(s.probability(2) == 0.0);
}

TEST_CASE("degree density equals a direct histogram") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto g = oracle::gnp(40, 0.1, rng);
    const auto A = oracle::dense_of(g);
    std::map<std::size_t, std::size_t> hist;
    for (std::size_t i = 0; i < A.n; ++i) ++hist[A.degree(i)];
    const auto d = degree_density(g);
    CHECK(d.counts.size() == hist.size());
    for (auto [k, c] : hist) CHECK(d.probability(k) == static_cast<double>(c) / 40.0);
  }
}

TEST_CASE("log binning") {
  SUBCASE("single degree value") {
    DegreeDensity d;
    d.counts[7] = 3.0;
    d.total = 3.0;
    const auto b = log_bin(d, 0.5);
    std::size_t nonempty = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b.counts[i] == 0.0) continue;
      ++nonempty;
      CHECK(b.edges[i] <= 7.0);
      CHECK(b.edges[i + 1] > 7.0);
      CHECK(b.heights[i] == doctest::Approx(1.0 / b.width(i)));
      CHECK(b.counts[i] == 3.0);
      CHECK(b.min_degree[i] == 7);
    }
    CHECK(nonempty == 1);
  }
  SUBCASE("edges are geometric from 1") {
    DegreeDensity d;
    d.counts[100] = 1.0;
    d.total = 1.0;
    const auto b = log_bin(d, 0.3);
    CHECK(b.edges.front() == 1.0);
    for (std::size_t i = 0; i + 1 < b.edges.size(); ++i)
      CHECK(std::log(b.edges[i + 1] / b.edges[i]) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(b.center(0) == doctest::Approx(std::exp(0.15)));
  }
  SUBCASE("mass is conserved on random input") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> k(1, 5000);
    std::uniform_real_distribution<double> w(0.1, 10.0);
    for (int t = 0; t < 100; ++t) {
      DegreeDensity d;
      for (int i = 0; i < 200; ++i) d.counts[k(rng)] += 1.0;
      for (auto& [kk, c] : d.counts) d.total += c;
      const auto b = log_bin(d, w(rng) / 10.0);
      double total = 0.0;
      for (std::size_t i = 0; i < b.size(); ++i) total += b.heights[i] * b.width(i);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  SUBCASE("analytic power law keeps its slope") {
    DegreeDensity d;
    for (std::size_t k = 1; k <= 100000; ++k) {
      d.counts[k] = std::pow(static_cast<double>(k), -2.5);
      d.total += d.counts[k];
    }
    const auto b = log_bin(d, 0.2);
    std::vector<double> x, y;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b.center(i) < 10.0 || b.edges[i + 1] > 100000.0) continue;
      x.push_back(std::log(b.center(i)));
      y.push_back(std::log(b.heights[i]));
    }
    CHECK(fit_line(x, y).slope == doctest::Approx(-2.5).epsilon(0.05 / 2.5));
  }
  SUBCASE("rejects non-positive widths") {
    CHECK_THROWS_AS(log_bin(DegreeDensity{}, 0.0), std::invalid_argument);
  }
}

TEST_CASE("default log width") {
  CHECK(default_log_width(1) == 0.1);
  CHECK(default_log_width(1000) == doctest::Approx(std::log(1001.0) / 20.0));
}

TEST_CASE("ANND and assortativity") {
  SUBCASE("cycle") {
    const auto m = annd(oracle::cycle(6));
    CHECK(m.annd_by_degree.size() == 1);
    CHECK(m.annd_by_degree.at(2) == 2.0);
    CHECK(m.rho_degenerate);
  }
  SUBCASE("star") {
    const auto m = annd(oracle::star(5));
    CHECK(m.annd_by_degree.at(1) == 5.0);
    CHECK(m.annd_by_degree.at(5) == 1.0);
    CHECK(m.rho_d == doctest::Approx(-1.0));
    CHECK_FALSE(m.rho_degenerate);
  }
  SUBCASE("random graphs against a direct Pearson over both orientations") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 40; ++t) {
      const auto g = oracle::gnp(30, 0.15, rng);
      if (g.link_count() == 0) continue;
      std::vector<double> x, y;
      for (auto [u, v] : g.edges()) {
        x.push_back(static_cast<double>(g.degree(u)));
        y.push_back(static_cast<double>(g.degree(v)));
        x.push_back(static_cast<double>(g.degree(v)));
        y.push_back(static_cast<double>(g.degree(u)));
      }
      const double n = static_cast<double>(x.size());
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < x.size(); ++i) mx += x[i] / n, my += y[i] / n;
      double sxy = 0, sxx = 0, syy = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
      }
      const auto m = annd(g);
      if (sxx == 0.0) {
        CHECK(m.rho_degenerate);
        continue;
      }
      CHECK(m.rho_d == doctest::Approx(sxy / std::sqrt(sxx * syy)).epsilon(1e-9));
    }
  }
  SUBCASE("no links") { CHECK_THROWS(annd(oracle::from_pairs(3, {}))); }
}

TEST_CASE("clustering") {
  const auto k3 = clustering(oracle::complete(3));
  for (double c : k3.local) CHECK(c == 1.0);
  CHECK(k3.global == 1.0);
  CHECK(clustering(oracle::star(4)).global == 0.0);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 8;
    const auto g = oracle::gnp(n, 0.5, rng);
    const auto A = oracle::dense_of(g);
    const auto cs = clustering(g);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t closed = 0, open = 0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (j != k && j != i && k != i && A(i, j) && A(i, k)) {
            ++open;
            closed += A(j, k);
          }
      const double c = open == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(open);
      CHECK(cs.local[i] == c);
      sum += c;
    }
    CHECK(cs.global == doctest::Approx(sum / static_cast<double>(n)).epsilon(1e-15));
  }
}

TEST_CASE("default tail window starts at the mode") {
  DegreeDensity d;
  d.counts = {{1, 5.0}, {2, 9.0}, {3, 4.0}, {10, 1.0}};
  d.total = 19.0;
  const auto w = default_tail_window(d);
  CHECK(w.lo == 2.0);
  CHECK(w.contains(1e9));
  CHECK_FALSE(w.contains(1.0));
}
