#include "phasegraph/curve.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace phasegraph {
namespace {

void check_coeffs(const Field& field, const std::vector<Element>& coeffs, const char* what) {
  if (static_cast<int>(coeffs.size()) != field.degree()) {
    throw CurveError(std::string(what) + " must have n coefficients");
  }
  for (Element c : coeffs) field.check(c);
}

std::string render(const Field& field, const std::vector<Element>& coeffs, char lhs, char var) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    std::string term;
    if (coeffs[i] != kOne) term = field.to_string(coeffs[i]) + " ";
    term += var;
    if (i > 0) term += "^" + std::to_string(1u << i);
    out += (out.empty() ? "" : " + ") + term;
  }
  return std::string(1, lhs) + " = " + (out.empty() ? "0" : out);
}

int exact_log2(std::size_t v, const char* what) {
  if (v == 0 || !std::has_single_bit(v)) throw CurveError(std::string("non-uniform ") + what);
  return std::countr_zero(v);
}

}  // namespace

Curve::Curve(FieldPtr field, std::vector<Element> phi) : field_(std::move(field)), phi_(std::move(phi)) {
  check_coeffs(*field_, phi_, "curve");
}

Curve Curve::zero(FieldPtr field) {
  const auto n = static_cast<std::size_t>(field->degree());
  return Curve(std::move(field), std::vector<Element>(n, kZero));
}

Curve Curve::identity(FieldPtr field) { return ray(std::move(field), kOne); }

Element Curve::operator()(Element a) const { return LinearizedPoly{phi_}.eval(*field_, a); }

std::string Curve::to_string() const { return render(*field_, phi_, 'b', 'a'); }

DualCurve::DualCurve(FieldPtr field, std::vector<Element> psi) : field_(std::move(field)), psi_(std::move(psi)) {
  check_coeffs(*field_, psi_, "dual curve");
}

Element DualCurve::operator()(Element b) const { return LinearizedPoly{psi_}.eval(*field_, b); }

std::string DualCurve::to_string() const { return render(*field_, psi_, 'a', 'b'); }

ParametricCurve::ParametricCurve(FieldPtr field, std::vector<Element> a_coeffs, std::vector<Element> b_coeffs)
    : field_(std::move(field)), a_{std::move(a_coeffs)}, b_{std::move(b_coeffs)} {
  check_coeffs(*field_, a_.coeffs, "alpha(kappa)");
  check_coeffs(*field_, b_.coeffs, "beta(kappa)");
}

ParametricCurve ParametricCurve::from_curve(const Curve& c) {
  std::vector<Element> a(static_cast<std::size_t>(c.n()), kZero);
  a[0] = kOne;
  return ParametricCurve(c.field(), a, c.phi());
}

bool ParametricCurve::is_nonsingular() const {
  for (std::uint32_t k = 1; k < field_->size(); ++k) {
    if (alpha(Element{k}).is_zero() && beta(Element{k}).is_zero()) return false;
  }
  return true;
}

std::string ParametricCurve::to_string() const {
  return "alpha(k): " + render(*field_, a_.coeffs, 'a', 'k') + "; beta(k): " + render(*field_, b_.coeffs, 'b', 'k');
}

Element evaluate(const Curve& c, Element a) { return c(a); }

Curve interpolate_unchecked(FieldPtr field, std::span<const Element> values) {
  auto poly = LinearizedPoly::from_basis_values(*field, values);
  return Curve(std::move(field), std::move(poly.coeffs));
}

Curve interpolate(FieldPtr field, std::span<const Element> values) {
  Curve c = interpolate_unchecked(std::move(field), values);
  if (!is_additive_commutative(c)) {
    throw CurveError("basis values do not define a commutative curve: " + c.to_string());
  }
  return c;
}

bool is_additive_commutative(const Curve& c) {
  const Field& f = *c.field();
  const int n = c.n();
  for (int k = 1; k < n; ++k) {
    if (c.phi(k) != f.frobenius(c.phi(n - k), k)) return false;
  }
  return true;
}

bool is_additive_commutative(const ParametricCurve& pc) {
  const Field& f = *pc.field();
  const int n = pc.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Element ki = f.theta(i);
      const Element kj = f.theta(j);
      const Element form = f.mul(pc.alpha(ki), pc.beta(kj)) + f.mul(pc.beta(ki), pc.alpha(kj));
      if (f.trace(form)) return false;
    }
  }
  return true;
}

bool trace_sum_condition(const ParametricCurve& pc) {
  const Field& f = *pc.field();
  Element sum;
  for (int i = 0; i < pc.n(); ++i) {
    for (int j = 0; j < pc.n(); ++j) {
      if (i != j) sum += f.mul(pc.a_coeffs()[i], pc.b_coeffs()[j]);
    }
  }
  return f.trace(sum) == 0;
}

std::vector<std::pair<Element, Element>> points(const Curve& c) {
  std::vector<std::pair<Element, Element>> out;
  out.reserve(c.field()->size());
  for (std::uint32_t a = 0; a < c.field()->size(); ++a) out.emplace_back(Element{a}, c(Element{a}));
  return out;
}

std::vector<std::pair<Element, Element>> points(const ParametricCurve& pc) {
  std::vector<std::pair<Element, Element>> out;
  out.reserve(pc.field()->size());
  for (std::uint32_t k = 0; k < pc.field()->size(); ++k) {
    out.emplace_back(pc.alpha(Element{k}), pc.beta(Element{k}));
  }
  return out;
}

std::pair<int, int> degeneracy_degrees(const ParametricCurve& pc) {
  if (!pc.is_nonsingular()) throw CurveError("singular parametric curve");
  std::map<Element, std::set<Element>> by_alpha;
  std::map<Element, std::set<Element>> by_beta;
  for (auto [a, b] : points(pc)) {
    by_alpha[a].insert(b);
    by_beta[b].insert(a);
  }
  auto uniform = [](const std::map<Element, std::set<Element>>& m) {
    const std::size_t size = m.begin()->second.size();
    for (const auto& [key, partners] : m) {
      if (partners.size() != size) throw CurveError("non-uniform multiplicity");
    }
    return size;
  };
  const int n = pc.n();
  const int r_beta = n - exact_log2(uniform(by_alpha), "multiplicity");
  const int r_alpha = n - exact_log2(uniform(by_beta), "multiplicity");
  return {r_alpha, r_beta};
}

std::vector<PauliMonomial> stabilizer_set(const Curve& c) {
  if (!is_additive_commutative(c)) throw CurveError("non-commutative curve");
  std::vector<PauliMonomial> out;
  for (auto [a, b] : points(c)) out.push_back({a, b, 0});
  return out;
}

std::vector<PauliMonomial> stabilizer_generators(const Curve& c) {
  if (!is_additive_commutative(c)) throw CurveError("non-commutative curve");
  std::vector<PauliMonomial> out;
  for (Element t : c.field()->basis()) out.push_back({t, c(t), 0});
  return out;
}

Curve compose(const Curve& f, const Curve& g) {
  if (!f.field()->same_as(*g.field())) throw CurveError("curves over different fields");
  for (std::uint32_t a = 0; a < f.field()->size(); ++a) {
    if (f(g(Element{a})) != g(f(Element{a}))) {
      throw CurveError("curves do not commute under composition");
    }
  }
  std::vector<Element> values;
  for (Element t : f.field()->basis()) values.push_back(f(g(t)));
  return interpolate(f.field(), values);
}

Curve ray(FieldPtr field, Element lambda) {
  field->check(lambda);
  std::vector<Element> phi(static_cast<std::size_t>(field->degree()), kZero);
  phi[0] = lambda;
  return Curve(std::move(field), std::move(phi));
}

DualCurve invert_curve(const Curve& c) {
  const Field& f = *c.field();
  std::vector<Element> inverse(f.size());
  std::vector<bool> hit(f.size(), false);
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    const Element b = c(Element{a});
    if (hit[b.bits]) throw CurveError("curve is not invertible: " + c.to_string());
    hit[b.bits] = true;
    inverse[b.bits] = Element{a};
  }
  std::vector<Element> values;
  for (Element t : f.basis()) values.push_back(inverse[t.bits]);
  return DualCurve(c.field(), LinearizedPoly::from_basis_values(f, values).coeffs);
}

void for_each_curve(FieldPtr field, const std::function<bool(const Curve&)>& visit) {
  const Field& f = *field;
  const int n = f.degree();
  // Free slots: phi_0, phi_1..phi_{(n-1)/2}, and for even n phi_{n/2} drawn
  // from the fixed field of x -> x^(2^(n/2)).
  std::vector<std::vector<Element>> choices;
  std::vector<Element> all;
  for (std::uint32_t a = 0; a < f.size(); ++a) all.push_back(Element{a});
  choices.push_back(all);
  for (int k = 1; k <= (n - 1) / 2; ++k) choices.push_back(all);
  if (n % 2 == 0 && n >= 2) {
    std::vector<Element> fixed;
    for (Element e : all) {
      if (f.frobenius(e, n / 2) == e) fixed.push_back(e);
    }
    choices.push_back(fixed);
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Element> phi(static_cast<std::size_t>(n), kZero);
  for (;;) {
    phi[0] = choices[0][idx[0]];
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      phi[k] = choices[k][idx[k]];
      phi[n - k] = f.frobenius(phi[k], n - k);
    }
    if (n % 2 == 0 && n >= 2) phi[n / 2] = choices.back()[idx.back()];
    if (!visit(Curve(field, phi))) return;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) return;
  }
}

std::vector<Curve> enumerate_curves(FieldPtr field) {
  std::vector<Curve> out;
  for_each_curve(std::move(field), [&](const Curve& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace phasegraph
