#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "phasegraph/clifford.hpp"
#include "phasegraph/curve.hpp"
#include "phasegraph/exact.hpp"

namespace phasegraph {

/// Brute-force reference built from 2x2 Kronecker factors, independent of
/// the field-indexed formulas used elsewhere.
inline constexpr int kMaxOracleQubits = 8;
inline constexpr int kMaxVerifyQubits = 6;

/// Kronecker product over qubits of sigma_z^a_i sigma_x^b_i.
ExactMatrix dense_pauli(const Field& field, Element alpha, Element beta);
/// Single-qubit building blocks.
ExactMatrix sigma_x();
ExactMatrix sigma_z();
ExactMatrix u_x();
ExactMatrix u_z();

/// Explicit unitary U with U Z_a X_b U^dagger proportional to the image of
/// (a, b) under gate_point_map. LocalComplement needs a curve; use dense_lc_unitary.
ExactMatrix dense_gate(const Field& field, const GateOp& op);
ExactMatrix dense_lc_unitary(const Curve& c, int vertex);

ExactMatrix dense_partial_trace(const ExactMatrix& rho, int n, const std::vector<int>& keep);

/// If a == i^p b for some p, returns p; otherwise -1.
int phase_relation(const ExactMatrix& a, const ExactMatrix& b);

struct CheckReport {
  std::string check;
  bool pass = false;
  std::string witness;
};

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const std::vector<CheckReport>& reports);
bool all_pass(const std::vector<CheckReport>& reports);

/// "commutation": all stabilizer matrices commute pairwise;
/// "eigenspace": the phase-corrected generators share a one-dimensional +1
/// eigenspace; "p_operator": P_f Z_a P_f^dagger = phi_f(a) Z_a X_f(a).
std::vector<CheckReport> verify_curve_stabilizer(const Curve& c);
/// Conjugating every stabilizer matrix by the gate lands on the implemented
/// point map, and the image point lies on the transformed curve.
CheckReport verify_gate(const Curve& c, const GateOp& op);
CheckReport verify_p_operator(const Curve& c);
/// Dimension of the common +1 eigenspace of the given commuting Hermitian
/// Pauli operators, via the projector prod (I + K_i)/2 (idempotent, rank = trace).
int common_eigenspace_dimension(const std::vector<ExactMatrix>& generators);

}  // namespace phasegraph
