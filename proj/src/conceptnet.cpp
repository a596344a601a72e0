#include "semnet/conceptnet.hpp"

#include <zlib.h>

#include <algorithm>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace semnet {
namespace {

struct RelationName {
  Relation relation;
  std::string_view conceptnet;
  std::string_view hyphenated;
};

constexpr RelationName kRelationNames[] = {
    {Relation::HasA, "HasA", "Has-A"},          {Relation::PartOf, "PartOf", "Part-Of"},
    {Relation::IsA, "IsA", "Is-A"},             {Relation::RelatedTo, "RelatedTo", "Related-To"},
    {Relation::Antonym, "Antonym", "Antonym"},  {Relation::Synonym, "Synonym", "Synonym"},
    {Relation::FormOf, "FormOf", "Form-Of"},    {Relation::Union, "Union", "Union"},
};

// Splits on tabs without allocating; at most `max_fields` pieces.
std::size_t split_tabs(std::string_view line, std::string_view* out, std::size_t max_fields) {
  std::size_t count = 0;
  std::size_t start = 0;
  while (count < max_fields) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out[count++] = line.substr(start);
      break;
    }
    out[count++] = line.substr(start, tab - start);
    start = tab + 1;
  }
  return count;
}

std::optional<Relation> relation_from_uri(std::string_view uri) {
  constexpr std::string_view prefix = "/r/";
  if (!uri.starts_with(prefix)) return std::nullopt;
  uri.remove_prefix(prefix.size());
  if (auto slash = uri.find('/'); slash != std::string_view::npos) uri = uri.substr(0, slash);
  for (const auto& n : kRelationNames)
    if (n.relation != Relation::Union && uri == n.conceptnet) return n.relation;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Relation r) {
  for (const auto& n : kRelationNames)
    if (n.relation == r) return n.conceptnet;
  return "Unknown";
}

std::optional<Relation> parse_relation(std::string_view name) {
  for (const auto& n : kRelationNames)
    if (name == n.conceptnet || name == n.hyphenated) return n.relation;
  return std::nullopt;
}

std::string_view to_string(PartOfSpeech p) {
  switch (p) {
    case PartOfSpeech::Verb: return "v";
    case PartOfSpeech::Noun: return "n";
    case PartOfSpeech::Adjective: return "a";
    case PartOfSpeech::Adverb: return "r";
  }
  return "?";
}

std::optional<PartOfSpeech> parse_pos(std::string_view tag) {
  if (tag == "v") return PartOfSpeech::Verb;
  if (tag == "n") return PartOfSpeech::Noun;
  // WordNet writes satellite adjectives as "s"
  if (tag == "a" || tag == "s") return PartOfSpeech::Adjective;
  if (tag == "r") return PartOfSpeech::Adverb;
  return std::nullopt;
}

std::optional<ConceptNode> parse_concept_uri(std::string_view uri) {
  constexpr std::string_view prefix = "/c/";
  if (!uri.starts_with(prefix)) return std::nullopt;
  uri.remove_prefix(prefix.size());
  std::string_view parts[3];
  std::size_t count = 0;
  while (count < 3 && !uri.empty()) {
    const auto slash = uri.find('/');
    parts[count++] = uri.substr(0, slash);
    if (slash == std::string_view::npos) break;
    uri.remove_prefix(slash + 1);
  }
  if (count < 2 || parts[0].empty() || parts[1].empty()) return std::nullopt;
  ConceptNode node;
  node.language = std::string(parts[0]);
  node.label = std::string(parts[1]);
  if (count == 3) node.pos = parse_pos(parts[2]);
  node.word_count = 1 + static_cast<std::size_t>(std::count(node.label.begin(), node.label.end(), '_'));
  return node;
}

AssertionParser::AssertionParser(std::vector<RelationSpec> specs)
    : specs_(std::move(specs)), edges_(specs_.size()), reports_(specs_.size()), long_labels_(specs_.size()) {
  for (const auto& s : specs_)
    if (s.relation == Relation::Union) throw std::invalid_argument("Union is derived, not read from the dump");
}

void AssertionParser::consume_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) return;
  for (auto& r : reports_) ++r.rows_read;

  std::string_view fields[5];
  const auto n = split_tabs(line, fields, 5);
  auto malformed = [&] {
    for (auto& r : reports_) ++r.rows_malformed;
  };
  if (n < 4 || !fields[1].starts_with("/r/")) return malformed();
  const auto relation = relation_from_uri(fields[1]);
  const auto start = parse_concept_uri(fields[2]);
  const auto end = parse_concept_uri(fields[3]);
  // Non-concept endpoints (e.g. external links) are legitimate rows of
  // other relations; only flag them as malformed when they start like one.
  if ((!start && fields[2].starts_with("/c/")) || (!end && fields[3].starts_with("/c/"))) return malformed();
  if (!relation || !start || !end) return;

  for (std::size_t s = 0; s < specs_.size(); ++s) {
    const auto& spec = specs_[s];
    if (spec.relation != *relation || start->language != spec.language || end->language != spec.language) continue;
    bool too_long = false;
    for (const auto* node : {&*start, &*end}) {
      if (node->word_count > kMaxPhraseWords) {
        too_long = true;
        if (long_labels_[s].try_emplace(node->label, 1).second) ++reports_[s].nodes_dropped_long_phrase;
      }
    }
    if (too_long) continue;
    edges_[s].emplace_back(*start, *end);
    ++reports_[s].rows_kept;
  }
}

void AssertionParser::consume(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) consume_line(line);
}

void AssertionParser::consume_file(const std::string& path) {
  // gzread passes uncompressed files through unchanged.
  std::unique_ptr<gzFile_s, decltype(&gzclose)> file(gzopen(path.c_str(), "rb"), &gzclose);
  if (!file) throw std::runtime_error("cannot open dump " + path);
  gzbuffer(file.get(), 1 << 17);
  std::string line;
  std::vector<char> buf(1 << 16);
  while (true) {
    const char* got = gzgets(file.get(), buf.data(), static_cast<int>(buf.size()));
    if (got == nullptr) break;
    std::string_view piece(got);
    line.append(piece);
    if (!piece.empty() && piece.back() == '\n') {
      line.pop_back();
      consume_line(line);
      line.clear();
    }
  }
  int err = 0;
  gzerror(file.get(), &err);
  if (err != Z_OK && err != Z_STREAM_END) throw std::runtime_error("read error in dump " + path);
  if (!line.empty()) consume_line(line);
}

IngestReport AssertionParser::report(std::size_t spec_index) const { return reports_[spec_index]; }

std::vector<ConceptEdge> parse_assertions(std::istream& in, const RelationSpec& spec, IngestReport* report) {
  AssertionParser p({spec});
  p.consume(in);
  if (report != nullptr) *report = p.report(0);
  return p.edges(0);
}

Graph graph_from_concepts(const std::vector<ConceptEdge>& edges) {
  GraphBuilder b;
  for (const auto& [a, c] : edges) b.add_edge(a.label, c.label);
  return b.build();
}

void PosTable::add(const ConceptNode& node) {
  auto& slot = counts_[node.label];
  if (node.pos) ++slot[static_cast<int>(*node.pos)];
}

void PosTable::add_all(const std::vector<ConceptEdge>& edges) {
  for (const auto& [a, b] : edges) {
    add(a);
    add(b);
  }
}

std::optional<PartOfSpeech> PosTable::tag(const std::string& label) const {
  auto it = counts_.find(label);
  if (it == counts_.end()) return std::nullopt;
  const auto& c = it->second;
  const auto best = std::max_element(c.begin(), c.end());  // first maximum wins ties
  if (*best == 0) return std::nullopt;
  return static_cast<PartOfSpeech>(best - c.begin());
}

void PosTable::write(std::ostream& out) const {
  for (const auto& [label, c] : counts_) {
    if (auto t = tag(label)) out << label << '\t' << to_string(*t) << '\n';
  }
}

PosTable PosTable::read(std::istream& in) {
  PosTable t;
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    if (auto p = parse_pos(std::string_view(line).substr(tab + 1))) t.set(line.substr(0, tab), *p);
  }
  return t;
}

Graph build_union(std::span<const Graph> graphs) {
  GraphBuilder b;
  for (const auto& g : graphs)
    for (NodeId v = 0; v < g.node_count(); ++v) b.add_node(g.label(v));
  for (const auto& g : graphs)
    for (auto [u, v] : g.edges()) b.add_edge(g.label(u), g.label(v));
  return b.build();
}

const std::string& MergeMap::representative(const std::string& label) const {
  auto it = rep_.find(label);
  return it == rep_.end() ? label : it->second;
}

MergeMap build_merge_map(const Graph& form_of) {
  MergeMap m;
  if (form_of.node_count() == 0) return m;
  const auto comps = connected_components(form_of);
  std::vector<const std::string*> smallest(comps.sizes.size(), nullptr);
  for (NodeId v = 0; v < form_of.node_count(); ++v) {
    auto& s = smallest[comps.membership[v]];
    if (s == nullptr || form_of.label(v) < *s) s = &form_of.label(v);
  }
  for (NodeId v = 0; v < form_of.node_count(); ++v) {
    if (comps.sizes[comps.membership[v]] < 2) continue;
    m.set(form_of.label(v), *smallest[comps.membership[v]]);
  }
  return m;
}

Graph apply_merge(const Graph& g, const MergeMap& m) {
  if (m.empty()) return g;
  GraphBuilder b;
  for (NodeId v = 0; v < g.node_count(); ++v) b.add_node(m.representative(g.label(v)));
  for (auto [u, v] : g.edges()) b.add_edge(m.representative(g.label(u)), m.representative(g.label(v)));
  return b.build();
}

}  // namespace semnet
