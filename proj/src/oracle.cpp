#include "phasegraph/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

#include "phasegraph/stabilizer.hpp"

namespace phasegraph {
namespace {

void check_oracle_size(int n, int cap) {
  if (n > cap) throw std::length_error("dense oracle limited to n <= " + std::to_string(cap));
}

ExactMatrix permutation(std::size_t dim, const std::vector<std::size_t>& image) {
  ExactMatrix out(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) out.at(image[col], col) = {1, 0};
  if (!out.is_permutation()) throw std::logic_error("gate is not a permutation");
  return out;
}

std::string point_name(const Field& f, Element a, Element b) {
  return "(" + f.to_string(a) + ", " + f.to_string(b) + ")";
}

}  // namespace

ExactMatrix sigma_x() {
  ExactMatrix m(2, 2);
  m.at(0, 1) = {1, 0};
  m.at(1, 0) = {1, 0};
  return m;
}

ExactMatrix sigma_z() {
  ExactMatrix m(2, 2);
  m.at(0, 0) = {1, 0};
  m.at(1, 1) = {-1, 0};
  return m;
}

ExactMatrix u_x() {
  // exp(i pi sigma_x / 4) = (I + i sigma_x) / sqrt(2)
  ExactMatrix m(2, 2, 1);
  m.at(0, 0) = {1, 0};
  m.at(0, 1) = {0, 1};
  m.at(1, 0) = {0, 1};
  m.at(1, 1) = {1, 0};
  return m;
}

ExactMatrix u_z() {
  ExactMatrix m(2, 2, 1);
  m.at(0, 0) = {1, 1};
  m.at(1, 1) = {1, -1};
  return m;
}

ExactMatrix dense_pauli(const Field& field, Element alpha, Element beta) {
  check_oracle_size(field.degree(), kMaxOracleQubits);
  const std::vector<int> a = field.self_dual_coords(alpha);
  const std::vector<int> b = field.self_dual_coords(beta);
  ExactMatrix out = ExactMatrix::identity(1);
  for (int q = 0; q < field.degree(); ++q) {
    ExactMatrix factor = ExactMatrix::identity(2);
    if (a[q]) factor = factor * sigma_z();
    if (b[q]) factor = factor * sigma_x();
    out = kron(out, factor);
  }
  return out;
}

ExactMatrix dense_gate(const Field& field, const GateOp& op) {
  const int n = field.degree();
  check_oracle_size(n, kMaxOracleQubits);
  const std::size_t dim = std::size_t{1} << n;
  auto bit = [n](int q) { return std::size_t{1} << (n - q); };  // q is 1-based
  auto local = [&](Element xi, const ExactMatrix& u) {
    ExactMatrix out = ExactMatrix::identity(1);
    for (int q = 0; q < n; ++q) out = kron(out, field.coord(xi, q) ? u : ExactMatrix::identity(2));
    return out;
  };
  if (const auto* g = std::get_if<XRot>(&op)) return local(g->xi, u_x());
  if (const auto* g = std::get_if<ZRot>(&op)) return local(g->xi, u_z());
  std::vector<std::size_t> image(dim);
  if (const auto* g = std::get_if<Xor>(&op)) {
    for (std::size_t idx = 0; idx < dim; ++idx) image[idx] = (idx & bit(g->control)) ? idx ^ bit(g->target) : idx;
    return permutation(dim, image);
  }
  if (const auto* g = std::get_if<Swap>(&op)) {
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const bool bi = idx & bit(g->i);
      const bool bj = idx & bit(g->j);
      image[idx] = bi == bj ? idx : idx ^ bit(g->i) ^ bit(g->j);
    }
    return permutation(dim, image);
  }
  if (const auto* g = std::get_if<Squeeze>(&op)) {
    // sum_l |xi^-1 l><l| conjugates Z_a X_b to Z_{xi a} X_{xi^-1 b}.
    const Element inv = field.inv(g->xi);
    for (std::uint32_t l = 0; l < field.size(); ++l) {
      image[field.coord_mask(Element{l})] = field.coord_mask(field.mul(inv, Element{l}));
    }
    return permutation(dim, image);
  }
  throw std::invalid_argument("local complementation needs a curve: use dense_lc_unitary");
}

ExactMatrix dense_lc_unitary(const Curve& c, int vertex) {
  ExactMatrix u = ExactMatrix::identity(c.field()->size());
  for (const GateOp& op : local_complement_sequence(c, vertex)) u = dense_gate(*c.field(), op) * u;
  return u;
}

ExactMatrix dense_partial_trace(const ExactMatrix& rho, int n, const std::vector<int>& keep_in) {
  std::vector<int> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  const int k = static_cast<int>(keep.size());
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);
  }
  auto full_index = [&](std::size_t kept, std::size_t rest) {
    std::size_t idx = 0;
    for (int t = 0; t < k; ++t) {
      if (kept >> (k - 1 - t) & 1u) idx |= std::size_t{1} << (n - keep[t]);
    }
    const int r = static_cast<int>(traced.size());
    for (int t = 0; t < r; ++t) {
      if (rest >> (r - 1 - t) & 1u) idx |= std::size_t{1} << (n - traced[t]);
    }
    return idx;
  };
  const std::size_t dim = std::size_t{1} << k;
  ExactMatrix out(dim, dim, rho.scale());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Gaussian sum;
      for (std::size_t t = 0; t < (std::size_t{1} << traced.size()); ++t) sum = sum + rho.at(full_index(r, t), full_index(c, t));
      out.at(r, c) = sum;
    }
  }
  return out.rescaled(0);
}

int phase_relation(const ExactMatrix& a, const ExactMatrix& b) {
  for (int p = 0; p < 4; ++p) {
    if (a == b.times_i_power(p)) return p;
  }
  return -1;
}

nlohmann::json to_json(const CheckReport& r) {
  return {{"check", r.check}, {"status", r.pass ? "pass" : "fail"}, {"witness", r.witness}};
}

nlohmann::json to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

int common_eigenspace_dimension(const std::vector<ExactMatrix>& generators) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const std::size_t dim = generators.front().rows();
  const ExactMatrix id = ExactMatrix::identity(dim);
  ExactMatrix proj = id;
  for (const auto& k : generators) proj = proj * (id + k).rescaled(2);
  if (!(proj * proj == proj)) throw std::logic_error("generator product is not a projector");
  const auto [tr, scale] = proj.trace();
  if (tr.im != 0 || scale % 2 != 0) throw std::logic_error("projector trace is not an integer");
  if (proj.is_zero()) return 0;
  std::int64_t value = tr.re;
  if (scale <= 0) return static_cast<int>(value << (-scale / 2));
  const std::int64_t div = std::int64_t{1} << (scale / 2);
  if (value % div != 0) throw std::logic_error("projector trace is not an integer");
  return static_cast<int>(value / div);
}

CheckReport verify_p_operator(const Curve& c) {
  const Field& f = *c.field();
  CheckReport r{"p_operator", true, ""};
  if (!is_additive_commutative(c)) return {"p_operator", false, "non-commutative curve"};
  const StabCoefficients coeffs = c_coefficients(c);
  const ExactMatrix p = p_operator(coeffs);
  if (!(p * p.adjoint() == ExactMatrix::identity(f.size()))) return {"p_operator", false, "P_f is not unitary"};
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    const Element alpha{a};
    const ExactMatrix lhs = p * dense_pauli(f, alpha, kZero) * p.adjoint();
    const ExactMatrix rhs = dense_pauli(f, alpha, c(alpha)).times_i_power(phase_varphi(coeffs, alpha));
    if (!(lhs == rhs)) return {"p_operator", false, "alpha = " + f.to_string(alpha)};
  }
  return r;
}

std::vector<CheckReport> verify_curve_stabilizer(const Curve& c) {
  const Field& f = *c.field();
  check_oracle_size(c.n(), kMaxVerifyQubits);
  std::vector<CheckReport> out;

  std::vector<ExactMatrix> mats;
  for (std::uint32_t a = 0; a < f.size(); ++a) mats.push_back(dense_pauli(f, Element{a}, c(Element{a})));
  CheckReport comm{"commutation", true, ""};
  for (std::uint32_t a = 0; a < f.size() && comm.pass; ++a) {
    for (std::uint32_t b = a + 1; b < f.size(); ++b) {
      if (!commutator(mats[a], mats[b]).is_zero()) {
        comm = {"commutation", false,
                "alpha = " + f.to_string(Element{a}) + ", alpha' = " + f.to_string(Element{b})};
        break;
      }
    }
  }
  out.push_back(comm);

  if (!is_additive_commutative(c)) {
    out.push_back({"eigenspace", false, "non-commutative curve"});
    out.push_back({"p_operator", false, "non-commutative curve"});
    return out;
  }
  const StabCoefficients coeffs = c_coefficients(c);
  std::vector<ExactMatrix> gens;
  for (Element t : f.basis()) gens.push_back(dense_pauli(f, t, c(t)).times_i_power(phase_varphi(coeffs, t)));
  const int dim = common_eigenspace_dimension(gens);
  out.push_back({"eigenspace", dim == 1, "dimension " + std::to_string(dim)});
  out.push_back(verify_p_operator(c));
  return out;
}

CheckReport verify_gate(const Curve& c, const GateOp& op) {
  const Field& f = *c.field();
  check_oracle_size(c.n(), kMaxVerifyQubits);
  const std::string name = "gate " + to_string(f, op);
  std::vector<GateOp> steps{op};
  if (const auto* lc = std::get_if<LocalComplement>(&op)) steps = local_complement_sequence(c, lc->vertex);

  ExactMatrix u = ExactMatrix::identity(f.size());
  for (const auto& s : steps) u = dense_gate(f, s) * u;

  std::optional<Curve> image_curve;
  std::set<std::pair<Element, Element>> image_points;
  try {
    image_curve = apply_gate(c, op);
  } catch (const DegenerateCurveError& e) {
    for (auto p : points(e.image())) image_points.insert(p);
  }

  for (std::uint32_t a = 0; a < f.size(); ++a) {
    const Element alpha{a};
    Element a2 = alpha;
    Element b2 = c(alpha);
    for (const auto& s : steps) std::tie(a2, b2) = gate_point_map(f, s, a2, b2);
    const ExactMatrix conj = u * dense_pauli(f, alpha, c(alpha)) * u.adjoint();
    if (phase_relation(conj, dense_pauli(f, a2, b2)) < 0) {
      return {name, false, "conjugation mismatch at alpha = " + f.to_string(alpha)};
    }
    const bool on_curve = image_curve ? (*image_curve)(a2) == b2 : image_points.count({a2, b2}) > 0;
    if (!on_curve) return {name, false, "image point " + point_name(f, a2, b2) + " not on transformed curve"};
  }
  return {name, true, image_curve ? image_curve->to_string() : "degenerate image"};
}

}  // namespace phasegraph
