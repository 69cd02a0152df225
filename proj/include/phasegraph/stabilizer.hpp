#pragma once

#include <vector>

#include "phasegraph/bit_matrix.hpp"
#include "phasegraph/curve.hpp"
#include "phasegraph/exact.hpp"
#include "phasegraph/graph.hpp"

namespace phasegraph {

/// c_lambda = i^exponent(lambda) for the operator built from an additive map
/// h (f for P_f, g for Q_g). M_ij = tr[theta_i h(theta_j)].
class StabCoefficients {
 public:
  StabCoefficients(FieldPtr field, std::vector<Element> map_coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Element>& map_coeffs() const { return map_; }
  const BitMatrix& m() const { return m_; }
  /// Strictly lower-triangular part of M.
  BitMatrix m_tilde() const;

  int exponent(Element lambda) const;
  Gaussian value(Element lambda) const;
  /// The additive map the table was built from.
  Element map(Element a) const;

  /// Checks c_l c_l' = chi[l' h(l)] c_{l+l'} over every pair; returns the
  /// first failing pair's lambda if any.
  bool recurrence_holds() const;

  friend bool operator==(const StabCoefficients& a, const StabCoefficients& b) {
    return a.exponent_ == b.exponent_;
  }

 private:
  FieldPtr field_;
  std::vector<Element> map_;
  BitMatrix m_;
  std::vector<int> exponent_;  // indexed by Element::bits
};

/// exponent(lambda) = sum_i l_i M_ii + 2 l^T M~ l (mod 4), principal branch
/// sqrt(-1) = +i. The recurrence is verified exhaustively for n <= 5.
StabCoefficients c_coefficients(const Curve& c);
/// (-1)^((1/2) l^T Gamma l).
StabCoefficients c_graph(FieldPtr field, const AdjacencyMatrix& g);
/// Coefficients of Q_g, built from g exactly as c_coefficients is from f.
StabCoefficients q_coefficients(const DualCurve& g);

/// Exponent p of phi_f(alpha) = i^p, with P_f Z_alpha P_f^-1 = phi_f(alpha) Z_alpha X_f(alpha).
int phase_varphi(const StabCoefficients& coeffs, Element alpha);
int phase_varphi(const Curve& c, Element alpha);
/// Exponent of psi(beta), with Q_g X_beta Q_g^-1 = psi(beta) Z_g(beta) X_beta.
int phase_psi(const StabCoefficients& q, Element beta);

/// Z_alpha X_beta as a dense matrix; basis index = coord_mask, qubit 1 the
/// most significant bit.
ExactMatrix pauli_matrix(const Field& field, Element alpha, Element beta);
/// W_{alpha,mu} = 2^(-n/2) chi(alpha mu); column mu is the X eigenvector.
ExactMatrix x_eigenbasis(const Field& field);
/// P_f = sum_l c_l |l~><l~|.
ExactMatrix p_operator(const StabCoefficients& coeffs);
/// Q_g = sum_b c_b |b><b| (diagonal in the computational basis).
ExactMatrix q_operator(const StabCoefficients& q);

inline constexpr int kMaxStateQubits = 10;
inline constexpr int kMaxDensityQubits = 6;

/// P_f |lambda>, unit norm.
ExactMatrix graph_state_vector(const Curve& c, Element lambda);
/// 2^-n sum_alpha phi_f(alpha) Z_alpha X_f(alpha).
ExactMatrix density_matrix(const Curve& c);
/// Phase-space reduced state on the 1-based `keep` qubits: kept-span alpha
/// whose traced-out X part is identity, weighted by phi_f(alpha), scaled 2^-k.
ExactMatrix reduced_density(const Curve& c, const std::vector<int>& keep);

}  // namespace phasegraph
