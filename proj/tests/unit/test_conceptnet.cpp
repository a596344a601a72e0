#include <doctest.h>

#include <fstream>
#include <sstream>

#include "../support/oracles.hpp"
#include "semnet/conceptnet.hpp"

using namespace semnet;

namespace {

std::string fixture(const std::string& name) { return std::string(SEMNET_FIXTURE_DIR) + "/" + name; }

std::string row(const std::string& rel, const std::string& a, const std::string& b) {
  return "/a/[" + rel + "/,...]\t" + rel + "\t" + a + "\t" + b + "\t{}";
}

}  // namespace

TEST_CASE("relation names") {
  CHECK(parse_relation("IsA") == Relation::IsA);
  CHECK(parse_relation("Is-A") == Relation::IsA);
  CHECK(parse_relation("Related-To") == Relation::RelatedTo);
  CHECK(parse_relation("Union") == Relation::Union);
  CHECK_FALSE(parse_relation("Causes").has_value());
  for (auto r : kDumpRelations) CHECK(parse_relation(to_string(r)) == r);
}

TEST_CASE("concept URIs") {
  auto n = parse_concept_uri("/c/en/ice_cream/n/wn/food");
  REQUIRE(n);
  CHECK(n->language == "en");
  CHECK(n->label == "ice_cream");
  CHECK(n->pos == PartOfSpeech::Noun);
  CHECK(n->word_count == 2);
  CHECK(parse_concept_uri("/c/en/large/s")->pos == PartOfSpeech::Adjective);
  CHECK_FALSE(parse_concept_uri("/c/en/x")->pos.has_value());
  CHECK_FALSE(parse_concept_uri("/c/en/").has_value());
  CHECK_FALSE(parse_concept_uri("http://example.org").has_value());
}

TEST_CASE("single assertion rows") {
  SUBCASE("matching row") {
    std::istringstream in(row("/r/IsA", "/c/en/car", "/c/en/vehicle"));
    const auto e = parse_assertions(in, {"en", Relation::IsA});
    REQUIRE(e.size() == 1);
    CHECK(e[0].first.label == "car");
    CHECK(e[0].second.label == "vehicle");
  }
  SUBCASE("language filter") {
    std::istringstream in(row("/r/IsA", "/c/fr/voiture", "/c/en/vehicle"));
    CHECK(parse_assertions(in, {"en", Relation::IsA}).empty());
  }
  SUBCASE("six-word phrase is dropped, five kept") {
    std::istringstream in(row("/r/IsA", "/c/en/a_b_c_d_e_f", "/c/en/x") + "\n" +
                          row("/r/IsA", "/c/en/a_b_c_d_e", "/c/en/x"));
    IngestReport rep;
    const auto e = parse_assertions(in, {"en", Relation::IsA}, &rep);
    CHECK(e.size() == 1);
    CHECK(rep.nodes_dropped_long_phrase == 1);
    CHECK(rep.rows_read == 2);
  }
  SUBCASE("Union cannot be read from a dump") { CHECK_THROWS_AS(AssertionParser({{"en", Relation::Union}}), std::invalid_argument); }
}

TEST_CASE("fixture dump matches the golden edge list") {
  std::map<std::pair<std::string, Relation>, std::vector<std::pair<std::string, std::string>>> golden;
  {
    std::ifstream in(fixture("golden_edges.tsv"));
    REQUIRE(in);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string lang, rel, a, b;
      ls >> lang >> rel >> a >> b;
      golden[{lang, *parse_relation(rel)}].emplace_back(a, b);
    }
  }
  std::vector<RelationSpec> specs;
  for (const std::string lang : {"en", "es", "fr"})
    for (auto r : kDumpRelations) specs.push_back({lang, r});
  AssertionParser p(specs);
  p.consume_file(fixture("mini_dump.csv"));
  for (std::size_t s = 0; s < specs.size(); ++s) {
    std::vector<std::pair<std::string, std::string>> got;
    for (const auto& [a, b] : p.edges(s)) got.emplace_back(a.label, b.label);
    const auto& want = golden[{specs[s].language, specs[s].relation}];
    INFO(specs[s].language << " " << to_string(specs[s].relation));
    CHECK(got == want);
    CHECK(p.report(s).rows_read == 21);
    CHECK(p.report(s).rows_malformed == 2);
    CHECK(p.report(s).rows_kept == want.size());
  }
  // the dropped six-word phrase belongs to en/RelatedTo only
  for (std::size_t s = 0; s < specs.size(); ++s)
    CHECK(p.report(s).nodes_dropped_long_phrase ==
          (specs[s].language == "en" && specs[s].relation == Relation::RelatedTo ? 1u : 0u));
}

TEST_CASE("Antonym pairs in both directions collapse to one link") {
  std::ifstream in(std::string(SEMNET_FIXTURE_DIR) + "/mini_dump.csv");
  const auto g = graph_from_concepts(parse_assertions(in, {"en", Relation::Antonym}));
  CHECK(g.node_count() == 2);
  CHECK(g.link_count() == 1);
}

TEST_CASE("POS table keeps the most frequent tag") {
  PosTable t;
  t.add({"run", "en", PartOfSpeech::Verb, 1});
  t.add({"run", "en", PartOfSpeech::Noun, 1});
  t.add({"run", "en", PartOfSpeech::Verb, 1});
  t.add({"tie", "en", PartOfSpeech::Noun, 1});
  t.add({"tie", "en", PartOfSpeech::Verb, 1});
  t.add({"bare", "en", std::nullopt, 1});
  CHECK(t.tag("run") == PartOfSpeech::Verb);
  CHECK(t.tag("tie") == PartOfSpeech::Verb);  // enum order breaks ties
  CHECK_FALSE(t.tag("bare").has_value());
  CHECK_FALSE(t.tag("absent").has_value());
  std::stringstream ss;
  t.write(ss);
  const auto back = PosTable::read(ss);
  CHECK(back.tag("run") == PartOfSpeech::Verb);
  CHECK(back.tag("tie") == PartOfSpeech::Verb);
}

TEST_CASE("union") {
  std::mt19937_64 rng(21);
  SUBCASE("with itself") {
    const auto g = oracle::gnm(20, 30, rng);
    const std::vector<Graph> two{g, g};
    CHECK(build_union(two) == g);
  }
  SUBCASE("against label-set oracle") {
    for (int t = 0; t < 30; ++t) {
      const auto a = oracle::gnm(15, 20, rng);
      std::vector<Edge> e;
      for (auto [u, v] : oracle::gnm(12, 15, rng).edges()) e.push_back({u, v});
      const auto b = Graph::from_edges(oracle::numbered_labels(12, t % 2 ? "v" : "u"), e);
      const std::vector<Graph> gs{a, b};
      const auto un = build_union(gs);
      std::set<std::string> nodes;
      std::set<std::pair<std::string, std::string>> links;
      for (const auto* g : {&a, &b}) {
        for (const auto& l : g->labels()) nodes.insert(l);
        for (auto [u, v] : g->edges())
          links.emplace(std::min(g->label(u), g->label(v)), std::max(g->label(u), g->label(v)));
      }
      CHECK(un.node_count() == nodes.size());
      CHECK(un.link_count() == links.size());
      for (auto [u, v] : un.edges())
        CHECK(links.contains({std::min(un.label(u), un.label(v)), std::max(un.label(u), un.label(v))}));
    }
  }
}

TEST_CASE("merge map") {
  SUBCASE("representative is the lexicographic minimum") {
    const std::vector<LabelEdge> fo{{"amaba", "amar"}, {"amas", "amar"}};
    const auto m = build_merge_map(build_graph(fo));
    for (const std::string w : {"amaba", "amar", "amas"}) CHECK(m.representative(w) == "amaba");
    CHECK(m.representative("other") == "other");
  }
  SUBCASE("empty Form-Of graph is the identity") {
    const auto m = build_merge_map(Graph{});
    CHECK(m.empty());
    CHECK(m.representative("x") == "x");
  }
  SUBCASE("chains form one group; union-find oracle on random forests") {
    const std::vector<LabelEdge> fo{{"a", "b"}, {"b", "c"}};
    const auto m = build_merge_map(build_graph(fo));
    CHECK(m.size() == 3);
    CHECK(m.representative("c") == "a");

    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
      const auto g = oracle::gnm(25, 12, rng);
      const auto mm = build_merge_map(g);
      oracle::UnionFind uf(g.node_count());
      for (auto [u, v] : g.edges()) uf.join(u, v);
      std::map<std::size_t, std::string> min_label;
      std::map<std::size_t, std::size_t> size;
      for (NodeId v = 0; v < g.node_count(); ++v) {
        auto r = uf.find(v);
        ++size[r];
        if (!min_label.contains(r) || g.label(v) < min_label[r]) min_label[r] = g.label(v);
      }
      for (NodeId v = 0; v < g.node_count(); ++v) {
        CHECK(mm.representative(g.label(v)) == min_label[uf.find(v)]);
        CHECK(mm.merged(g.label(v)) == (size[uf.find(v)] > 1));
      }
    }
  }
}

TEST_CASE("apply_merge") {
  SUBCASE("triangle with two nodes merged") {
    const std::vector<LabelEdge> tri{{"a", "b"}, {"b", "c"}, {"a", "c"}};
    MergeMap m;
    m.set("a", "a");
    m.set("b", "a");
    const auto g = apply_merge(build_graph(tri), m);
    CHECK(g.node_count() == 2);
    CHECK(g.link_count() == 1);
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "c");
  }
  SUBCASE("identity map leaves the graph alone") {
    std::mt19937_64 rng(8);
    const auto g = oracle::gnm(20, 40, rng);
    CHECK(apply_merge(g, MergeMap{}) == g);
  }
}
