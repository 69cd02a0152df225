#include "phasegraph/stabilizer.hpp"

#include <algorithm>
#include <bit>

namespace phasegraph {
namespace {

void check_size(int n, int cap, const char* what) {
  if (n > cap) {
    throw std::length_error(std::string(what) + " limited to n <= " + std::to_string(cap));
  }
}

}  // namespace

StabCoefficients::StabCoefficients(FieldPtr field, std::vector<Element> map_coeffs)
    : field_(std::move(field)), map_(std::move(map_coeffs)) {
  const Field& f = *field_;
  const int n = f.degree();
  if (static_cast<int>(map_.size()) != n) throw CurveError("coefficient list must have n entries");
  m_ = BitMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    const Element hj = map(f.theta(j));
    for (int i = 0; i < n; ++i) m_.set(i, j, f.trace(f.mul(f.theta(i), hj)));
  }
  if (!m_.is_symmetric()) throw CurveError("stabilizer coefficients need a commutative curve");
  exponent_.assign(f.size(), 0);
  for (std::uint32_t bits = 0; bits < f.size(); ++bits) {
    const std::uint32_t mask = f.coord_mask(Element{bits});
    auto l = [&](int i) { return static_cast<int>(mask >> (n - 1 - i) & 1u); };
    int e = 0;
    for (int i = 0; i < n; ++i) {
      if (!l(i)) continue;
      e += m_.get(i, i);
      for (int j = 0; j < i; ++j) e += 2 * (l(j) & m_.get(i, j));
    }
    exponent_[bits] = e % 4;
  }
}

BitMatrix StabCoefficients::m_tilde() const {
  BitMatrix out(m_.rows(), m_.cols());
  for (int i = 0; i < m_.rows(); ++i) {
    for (int j = 0; j < i; ++j) out.set(i, j, m_.get(i, j));
  }
  return out;
}

int StabCoefficients::exponent(Element lambda) const {
  field_->check(lambda);
  return exponent_[lambda.bits];
}

Gaussian StabCoefficients::value(Element lambda) const { return Gaussian{1, 0}.times_i_power(exponent(lambda)); }

Element StabCoefficients::map(Element a) const { return LinearizedPoly{map_}.eval(*field_, a); }

bool StabCoefficients::recurrence_holds() const {
  const Field& f = *field_;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    const Element la{a};
    const Element ha = map(la);
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      const Element lb{b};
      const int lhs = exponent_[a] + exponent_[b];
      const int rhs = 2 * f.trace(f.mul(lb, ha)) + exponent_[(la + lb).bits];
      if ((lhs - rhs) % 4 != 0) return false;
    }
  }
  return true;
}

StabCoefficients c_coefficients(const Curve& c) {
  if (!is_additive_commutative(c)) throw CurveError("c_coefficients needs a commutative curve");
  StabCoefficients out(c.field(), c.phi());
  if (c.n() <= 5 && !out.recurrence_holds()) throw std::logic_error("recurrence violated for " + c.to_string());
  return out;
}

StabCoefficients c_graph(FieldPtr field, const AdjacencyMatrix& g) {
  const Curve c = graph_to_curve(field, g);
  StabCoefficients out(field, c.phi());
  const int n = g.n();
  for (std::uint32_t bits = 0; bits < field->size(); ++bits) {
    const std::uint32_t mask = field->coord_mask(Element{bits});
    int quad = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((mask >> (n - 1 - i) & 1u) && (mask >> (n - 1 - j) & 1u)) quad += g.gamma().get(i, j);
      }
    }
    if (quad % 2 != 0) throw std::logic_error("l^T Gamma l is odd for a simple graph");
    // (-1)^(quad/2) as a power of i.
    if (out.exponent(Element{bits}) != (quad % 4)) {
      throw std::logic_error("graph coefficient formula disagrees with the general formula");
    }
  }
  return out;
}

StabCoefficients q_coefficients(const DualCurve& g) {
  if (!is_additive_commutative(g.as_curve())) throw CurveError("q_coefficients needs a commutative dual curve");
  StabCoefficients out(g.field(), g.psi());
  if (g.n() <= 5 && !out.recurrence_holds()) throw std::logic_error("recurrence violated for " + g.to_string());
  return out;
}

int phase_varphi(const StabCoefficients& coeffs, Element alpha) {
  const Field& f = *coeffs.field();
  const Element fa = coeffs.map(alpha);
  int result = -1;
  for (std::uint32_t l = 0; l < f.size(); ++l) {
    const Element lambda{l};
    const int p = ((coeffs.exponent(lambda + alpha) - coeffs.exponent(lambda) + 2 * f.trace(f.mul(lambda, fa))) % 4 + 4) % 4;
    if (result < 0) {
      result = p;
    } else if (p != result) {
      throw std::logic_error("phi_f(alpha) depends on lambda");
    }
  }
  return result;
}

int phase_varphi(const Curve& c, Element alpha) { return phase_varphi(c_coefficients(c), alpha); }

int phase_psi(const StabCoefficients& q, Element beta) {
  const Field& f = *q.field();
  return (q.exponent(beta) + 2 * f.trace(f.mul(beta, q.map(beta)))) % 4;
}

ExactMatrix pauli_matrix(const Field& field, Element alpha, Element beta) {
  const std::size_t dim = field.size();
  ExactMatrix out(dim, dim);
  for (std::uint32_t v = 0; v < field.size(); ++v) {
    const Element nu{v};
    const Element image = nu + beta;
    out.at(field.coord_mask(image), field.coord_mask(nu)) = {field.character(field.mul(alpha, image)), 0};
  }
  return out;
}

ExactMatrix x_eigenbasis(const Field& field) {
  const std::size_t dim = field.size();
  ExactMatrix out(dim, dim, field.degree());
  for (std::uint32_t a = 0; a < field.size(); ++a) {
    for (std::uint32_t m = 0; m < field.size(); ++m) {
      out.at(field.coord_mask(Element{a}), field.coord_mask(Element{m})) = {
          field.character(field.mul(Element{a}, Element{m})), 0};
    }
  }
  return out;
}

ExactMatrix p_operator(const StabCoefficients& coeffs) {
  const Field& f = *coeffs.field();
  const std::size_t dim = f.size();
  ExactMatrix diag(dim, dim);
  for (std::uint32_t m = 0; m < f.size(); ++m) {
    const std::size_t idx = f.coord_mask(Element{m});
    diag.at(idx, idx) = coeffs.value(Element{m});
  }
  const ExactMatrix w = x_eigenbasis(f);
  return w * diag * w.adjoint();
}

ExactMatrix q_operator(const StabCoefficients& q) {
  const Field& f = *q.field();
  ExactMatrix out(f.size(), f.size());
  for (std::uint32_t b = 0; b < f.size(); ++b) {
    const std::size_t idx = f.coord_mask(Element{b});
    out.at(idx, idx) = q.value(Element{b});
  }
  return out;
}

ExactMatrix graph_state_vector(const Curve& c, Element lambda) {
  const Field& f = *c.field();
  check_size(c.n(), kMaxStateQubits, "graph_state_vector");
  f.check(lambda);
  const StabCoefficients coeffs = c_coefficients(c);
  std::vector<Gaussian> amps(f.size());
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    Gaussian sum;
    for (std::uint32_t m = 0; m < f.size(); ++m) {
      const Element mu{m};
      const int sign = f.character(f.mul(Element{a}, mu)) * f.character(f.mul(mu, lambda));
      sum = sum + sign * coeffs.value(mu);
    }
    amps[f.coord_mask(Element{a})] = sum;
  }
  return ExactMatrix::column(amps, 2 * c.n());
}

ExactMatrix density_matrix(const Curve& c) {
  const Field& f = *c.field();
  check_size(c.n(), kMaxDensityQubits, "density_matrix");
  const StabCoefficients coeffs = c_coefficients(c);
  ExactMatrix sum(f.size(), f.size());
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    const Element alpha{a};
    sum = sum + pauli_matrix(f, alpha, c(alpha)).times_i_power(phase_varphi(coeffs, alpha));
  }
  return sum.rescaled(2 * c.n());
}

ExactMatrix reduced_density(const Curve& c, const std::vector<int>& keep_in) {
  const Field& f = *c.field();
  const int n = c.n();
  check_size(n, kMaxDensityQubits, "reduced_density");
  if (!is_graph_curve(c)) throw CurveError("reduced_density needs a graph curve");
  std::vector<int> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  for (int q : keep) {
    if (q < 1 || q > n) throw std::invalid_argument("keep qubit out of range");
  }
  const int k = static_cast<int>(keep.size());
  const std::size_t dim = std::size_t{1} << k;
  const StabCoefficients coeffs = c_coefficients(c);

  ExactMatrix sum(dim, dim);
  for (std::uint32_t sub = 0; sub < dim; ++sub) {
    // alpha in the span of the kept theta's; kept bit t (0 = first kept) is MSB-first.
    Element alpha;
    for (int t = 0; t < k; ++t) {
      if (sub >> (k - 1 - t) & 1u) alpha += f.theta(keep[t] - 1);
    }
    const Element beta = c(alpha);
    std::uint32_t bmask = 0;
    bool traced_identity = true;
    for (int q = 1; q <= n; ++q) {
      const int b = f.coord(beta, q - 1);
      const auto pos = std::find(keep.begin(), keep.end(), q);
      if (pos == keep.end()) {
        if (b) traced_identity = false;
      } else if (b) {
        bmask |= 1u << (k - 1 - static_cast<int>(pos - keep.begin()));
      }
    }
    if (!traced_identity) continue;
    ExactMatrix term(dim, dim);
    for (std::uint32_t col = 0; col < dim; ++col) {
      const std::uint32_t row = col ^ bmask;
      term.at(row, col) = {(std::popcount(row & sub) % 2) ? -1 : 1, 0};
    }
    sum = sum + term.times_i_power(phase_varphi(coeffs, alpha));
  }
  return sum.rescaled(2 * k);
}

}  // namespace phasegraph
