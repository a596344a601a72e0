#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semnet/graph.hpp"

namespace semnet {

enum class Relation { HasA, PartOf, IsA, RelatedTo, Antonym, Synonym, FormOf, Union };

std::string_view to_string(Relation r);
/// Accepts both the ConceptNet name ("IsA") and the hyphenated one ("Is-A").
std::optional<Relation> parse_relation(std::string_view name);

/// Relations read directly from a dump (everything except Union).
inline constexpr Relation kDumpRelations[] = {Relation::HasA,    Relation::PartOf,  Relation::IsA,   Relation::RelatedTo,
                                              Relation::Antonym, Relation::Synonym, Relation::FormOf};
/// Union members, in the order their nodes are numbered.
inline constexpr Relation kUnionMembers[] = {Relation::HasA, Relation::PartOf, Relation::IsA, Relation::RelatedTo};

struct RelationSpec {
  std::string language;
  Relation relation = Relation::IsA;
};

enum class PartOfSpeech { Verb, Noun, Adjective, Adverb };
std::string_view to_string(PartOfSpeech p);
std::optional<PartOfSpeech> parse_pos(std::string_view tag);

struct ConceptNode {
  std::string label;
  std::string language;
  std::optional<PartOfSpeech> pos;
  std::size_t word_count = 1;
};

/// Phrases with more words than this are dropped at ingest.
inline constexpr std::size_t kMaxPhraseWords = 5;

/// Parses `/c/<lang>/<term>[/<pos>[/...]]`. Returns nullopt when the URI is
/// not a concept URI or has an empty language or term.
std::optional<ConceptNode> parse_concept_uri(std::string_view uri);

struct IngestReport {
  std::size_t rows_read = 0;
  std::size_t rows_kept = 0;
  std::size_t rows_malformed = 0;
  std::size_t nodes_dropped_long_phrase = 0;  // distinct labels
};

using ConceptEdge = std::pair<ConceptNode, ConceptNode>;

/// Single pass over a dump routing each row to every matching spec. A row is
/// kept for a spec when the relation matches and both endpoints carry the
/// spec's language; endpoints with more than kMaxPhraseWords words drop the
/// row. Malformed rows are counted, never fatal. Reports are per spec.
class AssertionParser {
 public:
  explicit AssertionParser(std::vector<RelationSpec> specs);

  void consume_line(std::string_view line);
  void consume(std::istream& in);
  /// Plain or gzip-compressed file. Throws std::runtime_error if unreadable.
  void consume_file(const std::string& path);

  const std::vector<RelationSpec>& specs() const { return specs_; }
  const std::vector<ConceptEdge>& edges(std::size_t spec_index) const { return edges_[spec_index]; }
  IngestReport report(std::size_t spec_index) const;

 private:
  std::vector<RelationSpec> specs_;
  std::vector<std::vector<ConceptEdge>> edges_;
  std::vector<IngestReport> reports_;
  std::vector<std::unordered_map<std::string, char>> long_labels_;
};

std::vector<ConceptEdge> parse_assertions(std::istream& in, const RelationSpec& spec, IngestReport* report = nullptr);

/// Graph over the edge list; direction is discarded.
Graph graph_from_concepts(const std::vector<ConceptEdge>& edges);

/// Per-label POS counts, accumulated over every endpoint occurrence.
class PosTable {
 public:
  void add(const ConceptNode& node);
  void add_all(const std::vector<ConceptEdge>& edges);
  /// Most frequent tag for a label; ties resolve in enum order.
  std::optional<PartOfSpeech> tag(const std::string& label) const;
  std::size_t size() const { return counts_.size(); }

  void write(std::ostream& out) const;
  static PosTable read(std::istream& in);
  void set(const std::string& label, PartOfSpeech p) { counts_[label] = {}; counts_[label][static_cast<int>(p)] = 1; }

 private:
  std::map<std::string, std::array<std::size_t, 4>> counts_;
};

/// Node union and link union by label; node ids follow the order of the
/// input graphs, then first appearance within each.
Graph build_union(std::span<const Graph> graphs);

/// Label -> representative of its merge group.
class MergeMap {
 public:
  const std::string& representative(const std::string& label) const;
  void set(const std::string& label, const std::string& rep) { rep_[label] = rep; }
  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }
  /// true if the label belongs to a group with at least two members
  bool merged(const std::string& label) const { return rep_.contains(label); }
  const std::unordered_map<std::string, std::string>& entries() const { return rep_; }

 private:
  std::unordered_map<std::string, std::string> rep_;  // only non-singleton groups
};

/// Groups are the connected components of the Form-Of graph; the
/// representative is the lexicographically smallest label in a group.
MergeMap build_merge_map(const Graph& form_of);

/// Relabels every node by its representative and collapses the result to a
/// simple graph. Representatives keep their slot even if they end up
/// isolated.
Graph apply_merge(const Graph& g, const MergeMap& m);

}  // namespace semnet
