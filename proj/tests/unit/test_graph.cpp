#include <doctest.h>

#include <sstream>

#include "../support/oracles.hpp"
#include "semnet/graph.hpp"

using namespace semnet;

TEST_CASE("build_graph drops loops and duplicate orientations") {
  const std::vector<LabelEdge> edges{{"a", "b"}, {"b", "a"}, {"a", "a"}};
  const auto g = build_graph(edges);
  CHECK(g.node_count() == 2);
  CHECK(g.link_count() == 1);
  g.check_invariants();
}

TEST_CASE("single directed assertion becomes one undirected link") {
  const std::vector<LabelEdge> edges{{"car", "vehicle"}};
  const auto g = build_graph(edges);
  CHECK(g.node_count() == 2);
  CHECK(g.link_count() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
  CHECK(g.label(0) == "car");
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("handshake lemma on random edge lists") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> n_of(1, 30);
  for (int t = 0; t < 100; ++t) {
    const int n = n_of(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<LabelEdge> list;
    const int m = n_of(rng) * 2;
    for (int e = 0; e < m; ++e) list.emplace_back(std::to_string(pick(rng)), std::to_string(pick(rng)));
    const auto g = build_graph(list);
    g.check_invariants();
    // recount distinct unordered non-loop pairs directly
    std::set<std::pair<std::string, std::string>> pairs;
    for (auto [a, b] : list)
      if (a != b) pairs.emplace(std::min(a, b), std::max(a, b));
    std::size_t sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.link_count());
    CHECK(g.link_count() == pairs.size());
  }
}

TEST_CASE("components of small shapes") {
  const auto two = oracle::from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto rep = connected_components(two);
  CHECK(rep.sizes == std::vector<std::size_t>{3, 3});
  CHECK(rep.lcc_fraction == doctest::Approx(0.5));
  CHECK(rep.lcc_node_ids == std::vector<NodeId>{0, 1, 2});

  const auto p5 = connected_components(oracle::path(5));
  CHECK(p5.sizes == std::vector<std::size_t>{5});
  CHECK(p5.lcc_fraction == 1.0);
}

TEST_CASE("components agree with flood fill") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::gnp(3 + t % 25, 0.08, rng);
    const auto rep = connected_components(g);
    const auto comps = oracle::bfs_components(g);
    REQUIRE(rep.sizes.size() == comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) CHECK(rep.sizes[c] == comps[c].size());
    CHECK(rep.lcc_node_ids == comps.front());
    // same partition: nodes share an oracle component iff they share a membership id
    std::vector<std::size_t> oc(g.node_count());
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (auto v : comps[c]) oc[v] = c;
    for (NodeId u = 0; u < g.node_count(); ++u)
      for (NodeId v = 0; v < g.node_count(); ++v) CHECK((oc[u] == oc[v]) == (rep.membership[u] == rep.membership[v]));
    for (auto v : comps.front()) CHECK(rep.membership[v] == 0);
  }
}

TEST_CASE("extract_lcc") {
  SUBCASE("connected graph is returned unchanged") {
    const auto g = oracle::cycle(7);
    CHECK(extract_lcc(g) == g);
  }
  SUBCASE("random disconnected graph keeps the largest flood-fill component") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
      const auto g = oracle::gnp(40, 0.04, rng);
      const auto lcc = extract_lcc(g);
      const auto comps = oracle::bfs_components(g);
      REQUIRE(lcc.node_count() == comps.front().size());
      for (NodeId i = 0; i < lcc.node_count(); ++i) CHECK(lcc.label(i) == g.label(comps.front()[i]));
      std::size_t links = 0;
      for (auto u : comps.front())
        for (auto v : comps.front()) links += u < v && g.has_edge(u, v);
      CHECK(lcc.link_count() == links);
      CHECK(connected_components(lcc).sizes.size() == 1);
    }
  }
  SUBCASE("empty graph throws") { CHECK_THROWS(extract_lcc(Graph{})); }
}

TEST_CASE("induced subgraph relabels in order") {
  const auto g = oracle::complete(5);
  const std::vector<NodeId> keep{1, 3, 4};
  const auto h = induced_subgraph(g, keep);
  CHECK(h.node_count() == 3);
  CHECK(h.link_count() == 3);
  CHECK(h.label(0) == "v1");
  CHECK(h.label(2) == "v4");
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(3);
  const auto g = oracle::gnm(30, 60, rng);
  const auto lcc = extract_lcc(g);
  std::stringstream ss;
  write_edge_list(lcc, ss);
  const auto back = read_edge_list(ss);
  CHECK(back.node_count() == lcc.node_count());
  CHECK(back.link_count() == lcc.link_count());
  for (auto [u, v] : lcc.edges()) {
    // ids may differ; compare by label
    NodeId a = 0, b = 0;
    for (NodeId i = 0; i < back.node_count(); ++i) {
      if (back.label(i) == lcc.label(u)) a = i;
      if (back.label(i) == lcc.label(v)) b = i;
    }
    CHECK(back.has_edge(a, b));
  }
}

TEST_CASE("builder rejects nothing and counts ids first-seen") {
  GraphBuilder b;
  b.add_edge("x", "y");
  b.add_edge("z", "x");
  b.add_node("w");
  const auto g = b.build();
  CHECK(g.labels() == std::vector<std::string>{"x", "y", "z", "w"});
  CHECK(g.degree(3) == 0);
  CHECK(g.max_degree() == 2);
  CHECK(g.mean_degree() == doctest::Approx(1.0));
}
