#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "phasegraph/curve.hpp"
#include "phasegraph/graph.hpp"

namespace phasegraph {

// Qubit indices are 1-based throughout.
struct XRot {
  Element xi;
};
struct ZRot {
  Element xi;
};
struct Xor {
  int control;
  int target;
};
struct Swap {
  int i;
  int j;
};
struct Squeeze {
  Element xi;
};
struct LocalComplement {
  int vertex;
};

using GateOp = std::variant<XRot, ZRot, Xor, Swap, Squeeze, LocalComplement>;

/// Thrown when a z-rotation leaves no regular form; carries the image.
class DegenerateCurveError : public CurveError {
 public:
  explicit DegenerateCurveError(ParametricCurve image)
      : CurveError("z-rotation degenerates curve"), image_(std::move(image)) {}
  const ParametricCurve& image() const { return image_; }

 private:
  ParametricCurve image_;
};

/// sum of theta_q over the 1-based qubit list.
Element qubits_to_xi(const Field& field, const std::vector<int>& qubits);

/// Phase-space image of the point (alpha, beta). LocalComplement depends on
/// the curve and is rejected here; expand it with local_complement_sequence.
std::pair<Element, Element> gate_point_map(const Field& field, const GateOp& op, Element alpha, Element beta);

/// beta -> beta + sum_k xi_k tr(alpha theta_k) theta_k.
Curve x_rotation(const Curve& c, Element xi);
/// alpha -> alpha + sum_k xi_k tr(beta theta_k) theta_k, as a parametric curve.
ParametricCurve z_rotation_image(const Curve& c, Element xi);
/// I + D_xi Gamma' over GF(2), Gamma' the decorated matrix of c.
BitMatrix z_rotation_system(const Curve& c, Element xi);
/// Throws DegenerateCurveError when z_rotation_system is singular.
Curve z_rotation(const Curve& c, Element xi);
/// XOR with control i, target j:
/// f'(a) = f(a) + a_j f(theta_i) + theta_j [tr(f(a) theta_i) + a_j tr(f(theta_i) theta_i)].
Curve xor_gate(const Curve& c, int i, int j);
Curve swap_gate(const Curve& c, int i, int j);
/// (alpha, beta) -> (xi alpha, xi^-1 beta); phi_k -> phi_k xi^-(1 + 2^k).
Curve squeeze(const Curve& c, Element xi);

/// [ZRot(theta_i), XRot(sum of theta_j over N_i)]. Requires tr[theta_i f(theta_i)] = 0.
std::vector<GateOp> local_complement_sequence(const Curve& c, int i);
Curve local_complement_curve(const Curve& c, int i);

Curve apply_gate(const Curve& c, const GateOp& op);
/// Left to right; each intermediate is checked to be additive commutative.
Curve apply_sequence(const Curve& c, const std::vector<GateOp>& ops);

/// G Gamma G^T with G = I + E_ji.
DecoratedAdjacency xor_adjacency(const DecoratedAdjacency& g, int i, int j);
AdjacencyMatrix xor_adjacency(const AdjacencyMatrix& g, int i, int j);
/// M Gamma M with M_ik = tr(theta_i xi^-1 theta_k).
DecoratedAdjacency squeeze_adjacency(const Field& field, const DecoratedAdjacency& g, Element xi);
AdjacencyMatrix squeeze_adjacency(const Field& field, const AdjacencyMatrix& g, Element xi);
BitMatrix squeeze_matrix(const Field& field, Element xi);
/// Gamma + diag(xi_1..xi_n).
DecoratedAdjacency x_rotation_adjacency(const Field& field, const DecoratedAdjacency& g, Element xi);

std::string to_string(const Field& field, const GateOp& op);
/// One op: "XROT s^3+s^5", "ZROT q2,q4", "XOR 1 2", "SWAP 1 3", "SQUEEZE s^1", "LC 2".
GateOp parse_gate(const Field& field, std::string_view line);
/// One op per line; blank lines and '#' comments ignored.
std::vector<GateOp> parse_gates(const Field& field, std::string_view text);

}  // namespace phasegraph
