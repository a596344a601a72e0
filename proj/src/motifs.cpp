#include "semnet/motifs.hpp"

#include <algorithm>

#ifdef SEMNET_HAVE_OPENMP
#include <omp.h>
#endif

namespace semnet {
namespace {

struct NodeCounts {
  std::uint64_t two_t = 0;   // 2 T_i
  std::uint64_t t_w = 0;
  std::uint64_t t_h = 0;
  std::uint64_t two_q = 0;   // 2 Q_i
  std::uint64_t q_w = 0;
  std::uint64_t q_h = 0;
};

// Per-thread scratch, sized to N once and reset lazily via the touched list.
class Scratch {
 public:
  explicit Scratch(std::size_t n) : paths_(n, 0), in_hood_(n, 0), in_bucket_(n, 0), offset_(n, 0) {}

  NodeCounts count(const Graph& g, NodeId i) {
    NodeCounts out;
    const auto di = static_cast<std::uint64_t>(g.degree(i));
    const auto hood = g.neighbors(i);
    ++epoch_;
    for (NodeId j : hood) in_hood_[j] = epoch_;

    // paths_[l] = number of 2-paths i-j-l (l != i)
    touched_.clear();
    for (NodeId j : hood) {
      out.t_h += g.degree(j) - 1;
      for (NodeId l : g.neighbors(j)) {
        if (l == i) continue;
        if (paths_[l]++ == 0) touched_.push_back(l);
      }
    }

    std::uint64_t weighted = 0;
    for (NodeId l : touched_) {
      weighted += static_cast<std::uint64_t>(paths_[l]) * (g.degree(l) - 1);
      if (in_hood_[l] == epoch_) out.two_t += paths_[l];
    }
    out.t_w = di * (di == 0 ? 0 : di - 1);
    out.q_h = weighted - out.two_t;
    for (NodeId j : hood) {
      // paths_[j] for a neighbor j equals n_ij
      out.q_w += (di - 1) * (g.degree(j) - 1) - paths_[j];
    }

    // Chordless 4-cycles i-j-l-k need l outside N[i] and j, k non-adjacent.
    // Bucket, for every such l with >= 2 paths, the middle nodes j.
    std::size_t total = 0;
    for (NodeId l : touched_) {
      if (paths_[l] >= 2 && in_hood_[l] != epoch_) {
        offset_[l] = total;
        total += paths_[l];
      }
    }
    if (total > 0) {
      middles_.resize(total);
      for (NodeId j : hood) {
        for (NodeId l : g.neighbors(j)) {
          if (l == i || paths_[l] < 2 || in_hood_[l] == epoch_) continue;
          middles_[offset_[l]++] = j;
        }
      }
      for (NodeId l : touched_) {
        if (paths_[l] < 2 || in_hood_[l] == epoch_) continue;
        const std::uint64_t m = paths_[l];
        // offset_[l] now points one past the bucket's end
        const NodeId* begin = middles_.data() + offset_[l] - m;
        const std::uint64_t adjacent = adjacent_pairs(g, {begin, static_cast<std::size_t>(m)});
        out.two_q += m * (m - 1) - 2 * adjacent;
      }
    }

    for (NodeId l : touched_) paths_[l] = 0;
    return out;
  }

 private:
  std::uint64_t adjacent_pairs(const Graph& g, std::span<const NodeId> set) {
    const std::size_t m = set.size();
    std::size_t degree_sum = 0;
    for (NodeId j : set) degree_sum += g.degree(j);
    std::uint64_t adjacent = 0;
    if (m * m * 4 <= degree_sum || m <= 4) {
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) adjacent += g.has_edge(set[a], set[b]) ? 1 : 0;
      return adjacent;
    }
    ++bucket_epoch_;
    for (NodeId j : set) in_bucket_[j] = bucket_epoch_;
    for (NodeId j : set)
      for (NodeId x : g.neighbors(j)) adjacent += in_bucket_[x] == bucket_epoch_ ? 1 : 0;
    return adjacent / 2;
  }

  std::vector<std::uint32_t> paths_;
  std::vector<std::uint32_t> in_hood_;
  std::vector<std::uint32_t> in_bucket_;
  std::vector<std::size_t> offset_;
  std::vector<NodeId> touched_;
  std::vector<NodeId> middles_;
  std::uint32_t epoch_ = 0;
  std::uint32_t bucket_epoch_ = 0;
};

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

// Pairwise summation keeps the graph means independent of thread count.
double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

double mean(std::span<const double> xs) {
  return xs.empty() ? 0.0 : pairwise_sum(xs) / static_cast<double>(xs.size());
}

std::vector<NodeCounts> count_all(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeCounts> counts(n);
#ifdef SEMNET_HAVE_OPENMP
#pragma omp parallel
  {
    Scratch scratch(n);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      counts[i] = scratch.count(g, static_cast<NodeId>(i));
  }
#else
  Scratch scratch(n);
  for (std::size_t i = 0; i < n; ++i) counts[i] = scratch.count(g, static_cast<NodeId>(i));
#endif
  return counts;
}

}  // namespace

StructuralCoefficients structural_coefficients(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto counts = count_all(g);
  StructuralCoefficients out;
  auto& s = out.similarity;
  auto& c = out.complementarity;
  for (auto* v : {&s.triangles, &s.wedge_triples, &s.head_triples, &c.quadrangles, &c.wedge_quadruples,
                  &c.head_quadruples})
    v->resize(n);
  for (auto* v : {&s.s_wedge, &s.s_head, &s.s, &c.c_wedge, &c.c_head, &c.c}) v->resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    const auto& k = counts[i];
    s.triangles[i] = k.two_t / 2;
    s.wedge_triples[i] = k.t_w;
    s.head_triples[i] = k.t_h;
    s.s_wedge[i] = ratio(k.two_t, k.t_w);
    s.s_head[i] = ratio(k.two_t, k.t_h);
    s.s[i] = ratio(2 * k.two_t, k.t_w + k.t_h);

    c.quadrangles[i] = k.two_q / 2;
    c.wedge_quadruples[i] = k.q_w;
    c.head_quadruples[i] = k.q_h;
    c.c_wedge[i] = ratio(k.two_q, k.q_w);
    c.c_head[i] = ratio(k.two_q, k.q_h);
    c.c[i] = ratio(2 * k.two_q, k.q_w + k.q_h);
  }
  s.graph_s = mean(s.s);
  c.graph_c = mean(c.c);
  return out;
}

SimilarityCoefficients similarity_coefficients(const Graph& g) {
  return structural_coefficients(g).similarity;
}

ComplementarityCoefficients complementarity_coefficients(const Graph& g) {
  return structural_coefficients(g).complementarity;
}

GraphCoefficients graph_coefficients(const SimilarityCoefficients& s, const ComplementarityCoefficients& c) {
  return {mean(s.s), mean(c.c)};
}

GraphCoefficients graph_coefficients(const Graph& g) {
  const auto counts = count_all(g);
  std::vector<double> s(counts.size()), c(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    s[i] = ratio(2 * counts[i].two_t, counts[i].t_w + counts[i].t_h);
    c[i] = ratio(2 * counts[i].two_q, counts[i].q_w + counts[i].q_h);
  }
  return {mean(s), mean(c)};
}

std::size_t common_neighbors(const Graph& g, NodeId u, NodeId v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace semnet
