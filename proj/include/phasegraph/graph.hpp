#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phasegraph/bit_matrix.hpp"
#include "phasegraph/curve.hpp"
#include "phasegraph/field.hpp"

namespace phasegraph {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph: symmetric, zero diagonal. Vertices are 1-based
/// in every public signature, matching qubit i <-> theta_i.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int n);
  explicit AdjacencyMatrix(BitMatrix gamma);

  static AdjacencyMatrix from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return gamma_.rows(); }
  const BitMatrix& gamma() const { return gamma_; }
  bool has_edge(int i, int j) const { return gamma_.get(i - 1, j - 1) != 0; }
  void toggle_edge(int i, int j);

  std::vector<int> neighbors(int i) const;
  /// Sorted (i < j) edge list.
  std::vector<Edge> edges() const;
  /// Bit (i*n + j) for i < j, 0-based; used for hashing and canonical forms.
  std::uint64_t edge_mask() const;

  friend bool operator==(const AdjacencyMatrix& a, const AdjacencyMatrix& b) = default;

 private:
  BitMatrix gamma_;
};

/// Symmetric matrix whose diagonal marks pending x-rotations.
struct DecoratedAdjacency {
  BitMatrix gamma;

  int n() const { return gamma.rows(); }
  AdjacencyMatrix simple() const { return AdjacencyMatrix(gamma.without_diagonal()); }
  friend bool operator==(const DecoratedAdjacency& a, const DecoratedAdjacency& b) = default;
};

/// Sorted part sizes, summing to n.
struct FactorizationPartition {
  std::vector<int> parts;

  int count() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;
  friend bool operator==(const FactorizationPartition& a, const FactorizationPartition& b) = default;
};

/// f(theta_j) = sum_i Gamma_ij theta_i.
Curve graph_to_curve(FieldPtr field, const AdjacencyMatrix& g);
Curve decorated_to_curve(FieldPtr field, const DecoratedAdjacency& g);

/// Gamma_ij = tr[theta_i f(theta_j)], diagonal kept.
DecoratedAdjacency decorated_matrix(const Curve& c);
/// Gamma_ij = tr[theta_i f(theta_j)] with the diagonal removed.
AdjacencyMatrix curve_to_graph(const Curve& c);

/// tr[theta_i f(theta_i)] == 0 for all i.
bool is_graph_curve(const Curve& c);
/// sum_i tr(phi_{n/2} theta_i^(2^(n/2)) theta_i) theta_i^2, the value phi_0
/// must take on an even-n graph curve.
Element even_phi0_restriction(const Curve& c);

struct Graphization {
  Element xi;
  Curve curve;
};
/// xi = sum_i tr[f(theta_i) theta_i] theta_i and the x-rotated graph curve.
Graphization graphization_rotation(const Curve& c);

AdjacencyMatrix chain(int n);
/// center is 1-based; defaults to vertex n.
AdjacencyMatrix star(int n, int center = 0);
AdjacencyMatrix ring(int n);

FactorizationPartition factorization_partition(const AdjacencyMatrix& g);
/// Graphizes first, then partitions the resulting graph.
FactorizationPartition factorization_partition(const Curve& c);
/// Zero eigenvalues of the integer Laplacian D - A (rational rank).
int laplacian_nullity(const AdjacencyMatrix& g);

/// f(alpha) = sum_i tr(alpha theta_i) xi_i theta_i, xi_i = tr(xi theta_i).
Curve fully_factorized_curve(FieldPtr field, Element xi);
/// f swaps theta_a and theta_b for each pair. The pairs must be disjoint and
/// cover every qubit, so that f is an involution.
Curve bifactorized_curve(FieldPtr field, const std::vector<Edge>& pairs);

/// Complements the subgraph induced on the neighbourhood of vertex i.
AdjacencyMatrix local_complement(const AdjacencyMatrix& g, int i);

/// Relabels vertices by perm (perm[v-1] is the new label of v, 1-based).
AdjacencyMatrix relabel(const AdjacencyMatrix& g, const std::vector<int>& perm);
/// Minimum edge mask over all vertex relabelings (n <= 8).
std::uint64_t canonical_mask(const AdjacencyMatrix& g);

struct OrbitClass {
  AdjacencyMatrix representative;
  std::size_t size;  // labelled graphs in the class
  std::vector<std::uint64_t> canonical_masks;
};
/// Classes of all labelled n-vertex graphs under local complementation and
/// vertex relabeling (n <= 6).
std::vector<OrbitClass> lc_orbit_classes(int n);

std::string to_dot(const AdjacencyMatrix& g);

}  // namespace phasegraph
