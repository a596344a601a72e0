#include "semnet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace semnet {

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  const std::size_t n = labels.size();
  Graph g;
  g.labels_ = std::move(labels);

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint outside node range");
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    canon.emplace_back(u, v);
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  g.link_count_ = canon.size();

  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : canon) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // With canon sorted, the first pass writes each list's lower neighbors in
  // ascending order and the second appends the higher ones, also ascending.
  for (auto [u, v] : canon) g.targets_[cursor[v]++] = u;
  for (auto [u, v] : canon) g.targets_[cursor[u]++] = v;
  g.check_invariants();
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(node_count());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = offsets_[i + 1] - offsets_[i];
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t m = 0;
  for (std::size_t i = 0; i < node_count(); ++i) m = std::max(m, degree(static_cast<NodeId>(i)));
  return m;
}

double Graph::mean_degree() const {
  return node_count() == 0 ? 0.0 : 2.0 * static_cast<double>(link_count_) / static_cast<double>(node_count());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(link_count_);
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_invariants() const {
  const std::size_t n = node_count();
  if (offsets_.size() != n + 1) throw std::logic_error("graph: offset table size mismatch");
  if (offsets_[n] != 2 * link_count_) throw std::logic_error("graph: degree sum != 2L");
  for (NodeId u = 0; u < n; ++u) {
    auto nb = neighbors(u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] == u) throw std::logic_error("graph: self-loop");
      if (k > 0 && nb[k - 1] >= nb[k]) throw std::logic_error("graph: neighbor list not strictly sorted");
      auto back = neighbors(nb[k]);
      if (!std::binary_search(back.begin(), back.end(), u)) throw std::logic_error("graph: asymmetric adjacency");
    }
  }
}

NodeId GraphBuilder::add_node(std::string_view label) {
  auto [it, inserted] = index_.try_emplace(std::string(label), static_cast<NodeId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  NodeId u = add_node(a);
  NodeId v = add_node(b);
  edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() const { return Graph::from_edges(labels_, edges_); }

Graph build_graph(std::span<const LabelEdge> edge_list) {
  GraphBuilder b;
  for (const auto& [a, c] : edge_list) b.add_edge(a, c);
  return b.build();
}

ComponentReport connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(n, unset);
  std::vector<std::size_t> sizes;
  std::vector<NodeId> stack;
  // Components are discovered in order of their lowest node id.
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    const auto c = static_cast<std::uint32_t>(sizes.size());
    std::size_t size = 0;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == unset) {
          comp[v] = c;
          stack.push_back(v);
        }
      }
    }
    sizes.push_back(size);
  }

  // Stable sort keeps discovery order among equal sizes: lowest min id first.
  std::vector<std::uint32_t> order(sizes.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sizes[a] > sizes[b]; });
  std::vector<std::uint32_t> rank(sizes.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  ComponentReport rep;
  rep.sizes.reserve(sizes.size());
  for (auto c : order) rep.sizes.push_back(sizes[c]);
  rep.membership.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    rep.membership[v] = rank[comp[v]];
    if (rep.membership[v] == 0) rep.lcc_node_ids.push_back(v);
  }
  rep.lcc_fraction = n == 0 ? 0.0 : static_cast<double>(rep.sizes.front()) / static_cast<double>(n);
  return rep;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr auto absent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(g.node_count(), absent);
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    remap[nodes[i]] = static_cast<NodeId>(i);
    labels.push_back(g.label(nodes[i]));
  }
  std::vector<Edge> edges;
  for (NodeId u : nodes)
    for (NodeId v : g.neighbors(u))
      if (u < v && remap[v] != absent) edges.emplace_back(remap[u], remap[v]);
  return Graph::from_edges(std::move(labels), edges);
}

Graph extract_lcc(const Graph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("extract_lcc: empty graph");
  auto rep = connected_components(g);
  return induced_subgraph(g, rep.lcc_node_ids);
}

Graph read_edge_list(std::istream& in) {
  GraphBuilder b;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw std::runtime_error("malformed edge-list line: " + line);
    auto rest = std::string_view(line).substr(tab + 1);
    if (auto t2 = rest.find('\t'); t2 != std::string_view::npos) rest = rest.substr(0, t2);
    b.add_edge(std::string_view(line).substr(0, tab), rest);
  }
  return b.build();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << g.label(u) << '\t' << g.label(v) << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_edge_list(g, out);
}

}  // namespace semnet
