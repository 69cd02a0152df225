#include "phasegraph/clifford.hpp"

#include <cctype>
#include <sstream>

namespace phasegraph {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void check_qubit(const Field& field, int q) {
  if (q < 1 || q > field.degree()) {
    throw std::invalid_argument("qubit " + std::to_string(q) + " out of range 1.." + std::to_string(field.degree()));
  }
}

void check_pair(const Field& field, int i, int j) {
  check_qubit(field, i);
  check_qubit(field, j);
  if (i == j) throw std::invalid_argument("two-qubit gate needs distinct qubits");
}

// Transforms every basis value through a map of the old curve and re-interpolates.
template <typename Map>
Curve rebuild(const Curve& c, Map&& value_at) {
  std::vector<Element> values;
  for (Element t : c.field()->basis()) values.push_back(value_at(t));
  return interpolate(c.field(), values);
}

Element diag_part(const Field& field, Element xi, Element a) {
  Element out;
  for (int k = 0; k < field.degree(); ++k) {
    if (field.coord(xi, k) && field.coord(a, k)) out += field.theta(k);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_qubit(std::string_view token) {
  token = trim(token);
  if (!token.empty() && (token.front() == 'q' || token.front() == 'Q')) token.remove_prefix(1);
  if (token.empty()) throw std::invalid_argument("missing qubit index");
  int q = 0;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad qubit index '" + std::string(token) + "'");
    q = q * 10 + (ch - '0');
  }
  return q;
}

Element parse_xi(const Field& field, std::string_view arg) {
  arg = trim(arg);
  if (!arg.empty() && (arg.front() == 'q' || arg.front() == 'Q')) {
    std::vector<int> qubits;
    while (!arg.empty()) {
      const auto comma = arg.find(',');
      qubits.push_back(parse_qubit(arg.substr(0, comma)));
      arg = comma == std::string_view::npos ? std::string_view{} : arg.substr(comma + 1);
    }
    for (int q : qubits) check_qubit(field, q);
    return qubits_to_xi(field, qubits);
  }
  return field.parse(arg);
}

}  // namespace

Element qubits_to_xi(const Field& field, const std::vector<int>& qubits) {
  Element xi;
  for (int q : qubits) {
    check_qubit(field, q);
    xi += field.theta(q - 1);
  }
  return xi;
}

std::pair<Element, Element> gate_point_map(const Field& field, const GateOp& op, Element alpha, Element beta) {
  return std::visit(
      Overloaded{
          [&](const XRot& g) { return std::pair{alpha, beta + diag_part(field, g.xi, alpha)}; },
          [&](const ZRot& g) { return std::pair{alpha + diag_part(field, g.xi, beta), beta}; },
          [&](const Xor& g) {
            check_pair(field, g.control, g.target);
            const Element ti = field.theta(g.control - 1);
            const Element tj = field.theta(g.target - 1);
            return std::pair{field.coord(alpha, g.target - 1) ? alpha + ti : alpha,
                             field.coord(beta, g.control - 1) ? beta + tj : beta};
          },
          [&](const Swap& g) {
            check_pair(field, g.i, g.j);
            const Element eps = field.theta(g.i - 1) + field.theta(g.j - 1);
            return std::pair{field.trace(field.mul(alpha, eps)) ? alpha + eps : alpha,
                             field.trace(field.mul(beta, eps)) ? beta + eps : beta};
          },
          [&](const Squeeze& g) {
            if (g.xi.is_zero()) throw std::invalid_argument("squeeze parameter must be nonzero");
            return std::pair{field.mul(g.xi, alpha), field.mul(field.inv(g.xi), beta)};
          },
          [&](const LocalComplement&) -> std::pair<Element, Element> {
            throw std::invalid_argument("local complementation has no curve-independent point map");
          },
      },
      op);
}

Curve x_rotation(const Curve& c, Element xi) {
  const Field& f = *c.field();
  f.check(xi);
  return rebuild(c, [&](Element t) { return c(t) + diag_part(f, xi, t); });
}

ParametricCurve z_rotation_image(const Curve& c, Element xi) {
  const Field& f = *c.field();
  f.check(xi);
  auto a = LinearizedPoly::from_map(f, [&](Element k) { return k + diag_part(f, xi, c(k)); });
  return ParametricCurve(c.field(), a.coeffs, c.phi());
}

BitMatrix z_rotation_system(const Curve& c, Element xi) {
  const Field& f = *c.field();
  const BitMatrix& gamma = decorated_matrix(c).gamma;
  BitMatrix d(c.n(), c.n());
  for (int k = 0; k < c.n(); ++k) d.set(k, k, f.coord(xi, k));
  return BitMatrix::identity(c.n()) + d * gamma;
}

Curve z_rotation(const Curve& c, Element xi) {
  const Field& f = *c.field();
  f.check(xi);
  const auto inverse = z_rotation_system(c, xi).inverse();
  if (!inverse) throw DegenerateCurveError(z_rotation_image(c, xi));
  // g(mu) = f(alpha(mu)); alpha(theta_j) = sum_l inverse_lj theta_l.
  std::vector<Element> values;
  for (int j = 0; j < c.n(); ++j) {
    Element pre;
    for (int l = 0; l < c.n(); ++l) {
      if (inverse->get(l, j)) pre += f.theta(l);
    }
    values.push_back(c(pre));
  }
  return interpolate(c.field(), values);
}

Curve xor_gate(const Curve& c, int i, int j) {
  const Field& f = *c.field();
  check_pair(f, i, j);
  const Element ti = f.theta(i - 1);
  const Element tj = f.theta(j - 1);
  const Element fi = c(ti);
  const int diag_i = f.trace(f.mul(fi, ti));
  return rebuild(c, [&](Element a) {
    const int aj = f.coord(a, j - 1);
    Element out = c(a);
    if (aj) out += fi;
    if ((f.trace(f.mul(c(a), ti)) + aj * diag_i) % 2) out += tj;
    return out;
  });
}

Curve swap_gate(const Curve& c, int i, int j) {
  const Field& f = *c.field();
  const GateOp op = Swap{i, j};
  // The map is an involution on each coordinate: f'(a) = S f(S a).
  return rebuild(c, [&](Element a) {
    const Element pre = gate_point_map(f, op, a, kZero).first;
    return gate_point_map(f, op, kZero, c(pre)).second;
  });
}

Curve squeeze(const Curve& c, Element xi) {
  const Field& f = *c.field();
  f.check(xi);
  if (xi.is_zero()) throw std::invalid_argument("squeeze parameter must be nonzero");
  std::vector<Element> phi;
  for (int k = 0; k < c.n(); ++k) phi.push_back(f.mul(c.phi(k), f.pow(xi, -(1 + (std::int64_t{1} << k)))));
  return Curve(c.field(), phi);
}

std::vector<GateOp> local_complement_sequence(const Curve& c, int i) {
  const Field& f = *c.field();
  check_qubit(f, i);
  const DecoratedAdjacency g = decorated_matrix(c);
  if (g.gamma.get(i - 1, i - 1)) {
    throw CurveError("local complementation needs tr[theta_i f(theta_i)] = 0 at vertex " + std::to_string(i));
  }
  return {ZRot{f.theta(i - 1)}, XRot{qubits_to_xi(f, g.simple().neighbors(i))}};
}

Curve local_complement_curve(const Curve& c, int i) {
  Curve out = c;
  for (const GateOp& op : local_complement_sequence(c, i)) out = apply_gate(out, op);
  if (out.phi(0) != c.phi(0)) throw std::logic_error("local complementation changed phi_0");
  return out;
}

Curve apply_gate(const Curve& c, const GateOp& op) {
  return std::visit(Overloaded{
                        [&](const XRot& g) { return x_rotation(c, g.xi); },
                        [&](const ZRot& g) { return z_rotation(c, g.xi); },
                        [&](const Xor& g) { return xor_gate(c, g.control, g.target); },
                        [&](const Swap& g) { return swap_gate(c, g.i, g.j); },
                        [&](const Squeeze& g) { return squeeze(c, g.xi); },
                        [&](const LocalComplement& g) { return local_complement_curve(c, g.vertex); },
                    },
                    op);
}

Curve apply_sequence(const Curve& c, const std::vector<GateOp>& ops) {
  Curve out = c;
  for (const GateOp& op : ops) {
    out = apply_gate(out, op);
    if (!is_additive_commutative(ParametricCurve::from_curve(out))) {
      throw std::logic_error("gate produced a non-commutative point set");
    }
  }
  return out;
}

DecoratedAdjacency xor_adjacency(const DecoratedAdjacency& g, int i, int j) {
  const int n = g.n();
  if (i < 1 || i > n || j < 1 || j > n || i == j) throw std::invalid_argument("bad XOR qubits");
  BitMatrix gm = BitMatrix::identity(n);
  gm.set(j - 1, i - 1, 1);
  return {gm * g.gamma * gm.transpose()};
}

AdjacencyMatrix xor_adjacency(const AdjacencyMatrix& g, int i, int j) {
  return AdjacencyMatrix(xor_adjacency(DecoratedAdjacency{g.gamma()}, i, j).gamma);
}

BitMatrix squeeze_matrix(const Field& field, Element xi) {
  if (xi.is_zero()) throw std::invalid_argument("squeeze parameter must be nonzero");
  const Element inv = field.inv(xi);
  const int n = field.degree();
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) m.set(i, k, field.trace(field.mul(field.mul(field.theta(i), inv), field.theta(k))));
  }
  return m;
}

DecoratedAdjacency squeeze_adjacency(const Field& field, const DecoratedAdjacency& g, Element xi) {
  const BitMatrix m = squeeze_matrix(field, xi);
  return {m * g.gamma * m};
}

AdjacencyMatrix squeeze_adjacency(const Field& field, const AdjacencyMatrix& g, Element xi) {
  return squeeze_adjacency(field, DecoratedAdjacency{g.gamma()}, xi).simple();
}

DecoratedAdjacency x_rotation_adjacency(const Field& field, const DecoratedAdjacency& g, Element xi) {
  DecoratedAdjacency out = g;
  for (int k = 0; k < g.n(); ++k) {
    if (field.coord(xi, k)) out.gamma.flip(k, k);
  }
  return out;
}

std::string to_string(const Field& field, const GateOp& op) {
  return std::visit(Overloaded{
                        [&](const XRot& g) { return "XROT " + field.to_string(g.xi); },
                        [&](const ZRot& g) { return "ZROT " + field.to_string(g.xi); },
                        [&](const Xor& g) { return "XOR " + std::to_string(g.control) + " " + std::to_string(g.target); },
                        [&](const Swap& g) { return "SWAP " + std::to_string(g.i) + " " + std::to_string(g.j); },
                        [&](const Squeeze& g) { return "SQUEEZE " + field.to_string(g.xi); },
                        [&](const LocalComplement& g) { return "LC " + std::to_string(g.vertex); },
                    },
                    op);
}

GateOp parse_gate(const Field& field, std::string_view line) {
  line = trim(line);
  const auto space = line.find_first_of(" \t");
  std::string name(line.substr(0, space));
  for (char& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  const std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
  auto two_qubits = [&]() {
    std::istringstream is{std::string(rest)};
    std::string a;
    std::string b;
    std::string extra;
    if (!(is >> a >> b) || (is >> extra)) throw std::invalid_argument("expected two qubit indices: " + std::string(line));
    const int i = parse_qubit(a);
    const int j = parse_qubit(b);
    check_pair(field, i, j);
    return std::pair{i, j};
  };
  if (rest.empty()) throw std::invalid_argument("missing gate argument: " + std::string(line));
  if (name == "XROT") return XRot{parse_xi(field, rest)};
  if (name == "ZROT") return ZRot{parse_xi(field, rest)};
  if (name == "SQUEEZE") {
    const Element xi = parse_xi(field, rest);
    if (xi.is_zero()) throw std::invalid_argument("squeeze parameter must be nonzero");
    return Squeeze{xi};
  }
  if (name == "XOR") {
    auto [i, j] = two_qubits();
    return Xor{i, j};
  }
  if (name == "SWAP") {
    auto [i, j] = two_qubits();
    return Swap{i, j};
  }
  if (name == "LC") {
    const int v = parse_qubit(rest);
    check_qubit(field, v);
    return LocalComplement{v};
  }
  throw std::invalid_argument("unknown gate '" + name + "'");
}

std::vector<GateOp> parse_gates(const Field& field, std::string_view text) {
  std::vector<GateOp> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    out.push_back(parse_gate(field, line));
  }
  return out;
}

}  // namespace phasegraph
