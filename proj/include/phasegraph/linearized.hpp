#pragma once

#include <span>
#include <vector>

#include "phasegraph/field.hpp"

namespace phasegraph {

/// L(a) = sum_i c_i a^(2^i), an arbitrary GF(2)-linear map of the field.
struct LinearizedPoly {
  std::vector<Element> coeffs;

  Element eval(const Field& field, Element a) const;

  /// The unique linearized polynomial taking theta_k to values[k]:
  /// c_i = sum_k theta_k^(2^i) values[k].
  static LinearizedPoly from_basis_values(const Field& field, std::span<const Element> values);

  /// Interpolates any additive map given as a function of the field.
  template <typename Map>
  static LinearizedPoly from_map(const Field& field, Map&& map) {
    std::vector<Element> values;
    for (Element t : field.basis()) values.push_back(map(t));
    return from_basis_values(field, values);
  }
};

}  // namespace phasegraph
