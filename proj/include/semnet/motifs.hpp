#pragma once

#include <cstdint>
#include <vector>

#include "semnet/graph.hpp"

namespace semnet {

/// Triangle-based structural similarity.
///
/// Per node i: T_i triangles through i, t^W_i = d_i(d_i - 1) wedge triples
/// (ordered 2-paths centred at i), t^H_i = sum_{j in N(i)} (d_j - 1) head
/// triples (ordered 2-paths starting at i), and
///   s^W_i = 2T_i / t^W_i,  s^H_i = 2T_i / t^H_i,  s_i = 4T_i / (t^W_i + t^H_i).
/// A ratio with a zero denominator is reported as 0.
struct SimilarityCoefficients {
  std::vector<std::uint64_t> triangles;
  std::vector<std::uint64_t> wedge_triples;
  std::vector<std::uint64_t> head_triples;
  std::vector<double> s_wedge;
  std::vector<double> s_head;
  std::vector<double> s;
  double graph_s = 0.0;
};

/// Quadrangle-based structural complementarity.
///
/// Q_i counts chordless 4-cycles i-j-l-k through i (no i-l and no j-k link).
///   q^W_i = sum_{j in N(i)} [(d_i - 1)(d_j - 1) - n_ij]    (3-paths with i second)
///   q^H_i = sum_{j in N(i)} sum_{k in N(j), k != i} (d_k - 1 - a_ik)   (3-paths from i)
///   c^W_i = 2Q_i / q^W_i,  c^H_i = 2Q_i / q^H_i,  c_i = 4Q_i / (q^W_i + q^H_i)
/// with n_ij = |N(i) ∩ N(j)|. Zero denominators give 0.
struct ComplementarityCoefficients {
  std::vector<std::uint64_t> quadrangles;
  std::vector<std::uint64_t> wedge_quadruples;
  std::vector<std::uint64_t> head_quadruples;
  std::vector<double> c_wedge;
  std::vector<double> c_head;
  std::vector<double> c;
  double graph_c = 0.0;
};

struct StructuralCoefficients {
  SimilarityCoefficients similarity;
  ComplementarityCoefficients complementarity;
};

/// Both coefficient families from one wedge sweep per node. Work is
/// O(sum_j d_j^2) plus the pair checks inside each common-neighbor bucket.
StructuralCoefficients structural_coefficients(const Graph& g);

SimilarityCoefficients similarity_coefficients(const Graph& g);
ComplementarityCoefficients complementarity_coefficients(const Graph& g);

struct GraphCoefficients {
  double s = 0.0;
  double c = 0.0;
};

/// Unweighted node means; zero-denominator nodes count as 0.
GraphCoefficients graph_coefficients(const SimilarityCoefficients& s, const ComplementarityCoefficients& c);

/// Lower-level entry used by calibration: only the two graph means.
GraphCoefficients graph_coefficients(const Graph& g);

/// |N(u) ∩ N(v)| by sorted-list merge.
std::size_t common_neighbors(const Graph& g, NodeId u, NodeId v);

}  // namespace semnet
