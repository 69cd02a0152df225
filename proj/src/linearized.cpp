#include "phasegraph/linearized.hpp"

namespace phasegraph {

Element LinearizedPoly::eval(const Field& field, Element a) const {
  Element out;
  Element power = a;
  for (Element c : coeffs) {
    out += field.mul(c, power);
    power = field.square(power);
  }
  return out;
}

LinearizedPoly LinearizedPoly::from_basis_values(const Field& field, std::span<const Element> values) {
  const int n = field.degree();
  if (static_cast<int>(values.size()) != n) {
    throw FieldError("expected one value per basis element");
  }
  LinearizedPoly out;
  out.coeffs.assign(static_cast<std::size_t>(n), kZero);
  for (int k = 0; k < n; ++k) {
    Element conj = field.theta(k);
    for (int i = 0; i < n; ++i) {
      out.coeffs[i] += field.mul(conj, values[k]);
      conj = field.square(conj);
    }
  }
  return out;
}

}  // namespace phasegraph
