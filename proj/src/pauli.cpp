#include "phasegraph/pauli.hpp"

namespace phasegraph {

bool commutes(const Field& field, const PauliMonomial& m1, const PauliMonomial& m2) {
  return field.trace(field.mul(m1.alpha, m2.beta) + field.mul(m1.beta, m2.alpha)) == 0;
}

PauliMonomial multiply(const Field& field, const PauliMonomial& m1, const PauliMonomial& m2) {
  const int crossing = 2 * field.trace(field.mul(m1.beta, m2.alpha));
  return {m1.alpha + m2.alpha, m1.beta + m2.beta, (m1.phase + m2.phase + crossing) % 4};
}

std::vector<QubitPauli> tensor_factors(const Field& field, const PauliMonomial& m) {
  std::vector<QubitPauli> out;
  for (int q = 0; q < field.degree(); ++q) {
    const int a = field.coord(m.alpha, q);
    const int b = field.coord(m.beta, q);
    out.push_back(a ? (b ? QubitPauli::ZX : QubitPauli::Z) : (b ? QubitPauli::X : QubitPauli::I));
  }
  return out;
}

const char* label(QubitPauli p) {
  switch (p) {
    case QubitPauli::I: return "I";
    case QubitPauli::Z: return "Z";
    case QubitPauli::X: return "X";
    case QubitPauli::ZX: return "ZX";
  }
  return "?";
}

std::string to_string(const Field& field, const PauliMonomial& m) {
  return "i^" + std::to_string(((m.phase % 4) + 4) % 4) + " Z[" + field.to_string(m.alpha) + "] X[" +
         field.to_string(m.beta) + "]";
}

std::string tensor_string(const Field& field, const PauliMonomial& m) {
  std::string out;
  for (QubitPauli p : tensor_factors(field, m)) {
    if (!out.empty()) out += "⊗";
    out += label(p);
  }
  return out;
}

}  // namespace phasegraph
