#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace semnet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;
using LabelEdge = std::pair<std::string, std::string>;

/// Immutable undirected simple graph.
///
/// Node ids are contiguous in [0, N). Each node carries a label, neighbor
/// lists are sorted ascending, and there are no self-loops or duplicate
/// links. The canonical form is checked on every construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an id-based edge list. Self-loops and duplicates (in either
  /// orientation) are dropped; ids must be < labels.size().
  static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t link_count() const { return link_count_; }

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;
  double mean_degree() const;

  bool has_edge(NodeId u, NodeId v) const;

  /// Links as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  /// Throws std::logic_error if any canonical-form invariant is broken.
  void check_invariants() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::size_t link_count_ = 0;
};

/// Accumulates labelled links and assigns ids in first-seen label order.
class GraphBuilder {
 public:
  NodeId add_node(std::string_view label);
  void add_edge(std::string_view a, std::string_view b);
  Graph build() const;

 private:
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

Graph build_graph(std::span<const LabelEdge> edge_list);

struct ComponentReport {
  std::vector<std::size_t> sizes;  // descending
  std::vector<NodeId> lcc_node_ids;  // ascending
  double lcc_fraction = 0.0;
  /// component index per node; the LCC has index 0
  std::vector<std::uint32_t> membership;
};

/// Ties between equally large components go to the one holding the lowest
/// node id.
ComponentReport connected_components(const Graph& g);

/// Induced subgraph on `nodes` (ascending ids), relabelled contiguously in the
/// same order.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

Graph extract_lcc(const Graph& g);

// Tab-separated `label1<TAB>label2` edge list, one link per line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace semnet
