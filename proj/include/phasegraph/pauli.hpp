#pragma once

#include <string>
#include <vector>

#include "phasegraph/field.hpp"

namespace phasegraph {

/// i^phase Z_alpha X_beta, with Z on the left.
struct PauliMonomial {
  Element alpha;
  Element beta;
  int phase = 0;

  bool operator==(const PauliMonomial&) const = default;
};

enum class QubitPauli { I, Z, X, ZX };

/// tr(a1 b2 + b1 a2) == 0.
bool commutes(const Field& field, const PauliMonomial& m1, const PauliMonomial& m2);

/// m1 * m2; moving X_{b1} past Z_{a2} contributes chi(b1 a2).
PauliMonomial multiply(const Field& field, const PauliMonomial& m1, const PauliMonomial& m2);

/// Per-qubit (a_i, b_i) labels, phase ignored.
std::vector<QubitPauli> tensor_factors(const Field& field, const PauliMonomial& m);

const char* label(QubitPauli p);

/// "i^p Z[s^a] X[s^b]".
std::string to_string(const Field& field, const PauliMonomial& m);
/// "ZX⊗X⊗I".
std::string tensor_string(const Field& field, const PauliMonomial& m);

}  // namespace phasegraph
