#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phasegraph/field.hpp"
#include "phasegraph/linearized.hpp"
#include "phasegraph/pauli.hpp"

namespace phasegraph {

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Regular-form curve beta = f(alpha) = sum_i phi_i alpha^(2^i).
class Curve {
 public:
  Curve(FieldPtr field, std::vector<Element> phi);

  static Curve zero(FieldPtr field);
  static Curve identity(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  int n() const { return field_->degree(); }
  const std::vector<Element>& phi() const { return phi_; }
  Element phi(int i) const { return phi_.at(static_cast<std::size_t>(i)); }

  Element operator()(Element a) const;

  /// "b = s^7 a^2 + s^11 a^8".
  std::string to_string() const;

  friend bool operator==(const Curve& a, const Curve& b) { return a.phi_ == b.phi_; }

 private:
  FieldPtr field_;
  std::vector<Element> phi_;
};

/// alpha = g(beta) = sum_i psi_i beta^(2^i).
class DualCurve {
 public:
  DualCurve(FieldPtr field, std::vector<Element> psi);

  const FieldPtr& field() const { return field_; }
  int n() const { return field_->degree(); }
  const std::vector<Element>& psi() const { return psi_; }

  Element operator()(Element b) const;
  /// The same coefficients read as a regular-form curve.
  Curve as_curve() const { return Curve(field_, psi_); }
  std::string to_string() const;

  friend bool operator==(const DualCurve& a, const DualCurve& b) { return a.psi_ == b.psi_; }

 private:
  FieldPtr field_;
  std::vector<Element> psi_;
};

/// (alpha(kappa), beta(kappa)) with both coordinates linearized in kappa.
class ParametricCurve {
 public:
  ParametricCurve(FieldPtr field, std::vector<Element> a_coeffs, std::vector<Element> b_coeffs);

  static ParametricCurve from_curve(const Curve& c);

  const FieldPtr& field() const { return field_; }
  int n() const { return field_->degree(); }
  const std::vector<Element>& a_coeffs() const { return a_.coeffs; }
  const std::vector<Element>& b_coeffs() const { return b_.coeffs; }

  Element alpha(Element kappa) const { return a_.eval(*field_, kappa); }
  Element beta(Element kappa) const { return b_.eval(*field_, kappa); }

  /// All 2^n points are distinct.
  bool is_nonsingular() const;
  std::string to_string() const;

 private:
  FieldPtr field_;
  LinearizedPoly a_;
  LinearizedPoly b_;
};

Element evaluate(const Curve& c, Element a);

/// Builds the curve with f(theta_k) = values[k]; throws CurveError when the
/// induced additive map is not commutative.
Curve interpolate(FieldPtr field, std::span<const Element> values);
/// As interpolate, without the commutativity check.
Curve interpolate_unchecked(FieldPtr field, std::span<const Element> values);

/// phi_k = phi_{n-k}^(2^k) for every k = 1..n-1 (this covers the even-n
/// middle coefficient as well).
bool is_additive_commutative(const Curve& c);
/// Exact test: the symplectic form vanishes on all basis-parameter pairs.
bool is_additive_commutative(const ParametricCurve& pc);
/// sum_{i != j} tr(alpha_i beta_j) == 0. Necessary for commutativity, not
/// sufficient on its own.
bool trace_sum_condition(const ParametricCurve& pc);

std::vector<std::pair<Element, Element>> points(const Curve& c);
std::vector<std::pair<Element, Element>> points(const ParametricCurve& pc);

/// (r_alpha, r_beta): each attained alpha has 2^(n - r_beta) partners and
/// each attained beta has 2^(n - r_alpha) partners.
std::pair<int, int> degeneracy_degrees(const ParametricCurve& pc);

std::vector<PauliMonomial> stabilizer_set(const Curve& c);
std::vector<PauliMonomial> stabilizer_generators(const Curve& c);

/// h = f o g; rejected unless f o g == g o f.
Curve compose(const Curve& f, const Curve& g);
Curve ray(FieldPtr field, Element lambda);
DualCurve invert_curve(const Curve& c);

/// Every regular additive commutative curve of the field, in a fixed order.
std::vector<Curve> enumerate_curves(FieldPtr field);
/// Streaming form; the callback returns false to stop early.
void for_each_curve(FieldPtr field, const std::function<bool(const Curve&)>& visit);

}  // namespace phasegraph
