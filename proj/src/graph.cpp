#include "phasegraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace phasegraph {
namespace {

__extension__ typedef __int128 Int128;

void check_vertex(int n, int i) {
  if (i < 1 || i > n) throw GraphError("vertex " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

AdjacencyMatrix::AdjacencyMatrix(int n) : gamma_(n, n) {}

AdjacencyMatrix::AdjacencyMatrix(BitMatrix gamma) : gamma_(std::move(gamma)) {
  if (gamma_.rows() != gamma_.cols()) throw GraphError("adjacency matrix must be square");
  if (!gamma_.is_symmetric()) throw GraphError("adjacency matrix must be symmetric");
  if (!gamma_.has_zero_diagonal()) throw GraphError("simple graph has no loops");
}

AdjacencyMatrix AdjacencyMatrix::from_edges(int n, const std::vector<Edge>& edges) {
  AdjacencyMatrix g(n);
  for (auto [i, j] : edges) {
    check_vertex(n, i);
    check_vertex(n, j);
    if (i == j) throw GraphError("self-loop on vertex " + std::to_string(i));
    if (g.has_edge(i, j)) throw GraphError("duplicate edge");
    g.toggle_edge(i, j);
  }
  return g;
}

void AdjacencyMatrix::toggle_edge(int i, int j) {
  check_vertex(n(), i);
  check_vertex(n(), j);
  if (i == j) throw GraphError("self-loop on vertex " + std::to_string(i));
  gamma_.flip(i - 1, j - 1);
  gamma_.flip(j - 1, i - 1);
}

std::vector<int> AdjacencyMatrix::neighbors(int i) const {
  check_vertex(n(), i);
  std::vector<int> out;
  for (int j = 1; j <= n(); ++j) {
    if (has_edge(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<Edge> AdjacencyMatrix::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n(); ++i) {
    for (int j = i + 1; j <= n(); ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::uint64_t AdjacencyMatrix::edge_mask() const {
  std::uint64_t mask = 0;
  for (auto [i, j] : edges()) mask |= std::uint64_t{1} << ((i - 1) * n() + (j - 1));
  return mask;
}

std::string FactorizationPartition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + "}";
}

Curve decorated_to_curve(FieldPtr field, const DecoratedAdjacency& g) {
  const int n = field->degree();
  if (g.n() != n) throw GraphError("graph size does not match field degree");
  if (!g.gamma.is_symmetric()) throw GraphError("decorated adjacency must be symmetric");
  std::vector<Element> values;
  for (int j = 0; j < n; ++j) {
    Element v;
    for (int i = 0; i < n; ++i) {
      if (g.gamma.get(i, j)) v += field->theta(i);
    }
    values.push_back(v);
  }
  return interpolate(std::move(field), values);
}

Curve graph_to_curve(FieldPtr field, const AdjacencyMatrix& g) {
  return decorated_to_curve(std::move(field), DecoratedAdjacency{g.gamma()});
}

DecoratedAdjacency decorated_matrix(const Curve& c) {
  const Field& f = *c.field();
  const int n = c.n();
  BitMatrix gamma(n, n);
  for (int j = 0; j < n; ++j) {
    const Element fj = c(f.theta(j));
    for (int i = 0; i < n; ++i) gamma.set(i, j, f.trace(f.mul(f.theta(i), fj)));
  }
  if (!gamma.is_symmetric()) throw CurveError("non-commutative curve has an asymmetric adjacency matrix");
  return {gamma};
}

AdjacencyMatrix curve_to_graph(const Curve& c) { return decorated_matrix(c).simple(); }

bool is_graph_curve(const Curve& c) {
  const Field& f = *c.field();
  bool graph = true;
  for (Element t : f.basis()) {
    if (f.trace(f.mul(t, c(t)))) graph = false;
  }
  // The diagonal tr[theta_i f(theta_i)] reduces to tr(theta_i^2 phi_0): the
  // conjugate pairs phi_k, phi_{n-k} cancel and the even-n middle term has
  // vanishing trace, so the graph condition is exactly phi_0 = 0.
  if (is_additive_commutative(c) && graph != c.phi(0).is_zero()) {
    throw std::logic_error("graph condition disagrees with phi_0 = 0 for " + c.to_string());
  }
  return graph;
}

Element even_phi0_restriction(const Curve& c) {
  const Field& f = *c.field();
  const int n = c.n();
  if (n % 2 != 0) throw CurveError("restriction applies to even n only");
  Element out;
  for (Element t : f.basis()) {
    const Element term = f.mul(f.mul(c.phi(n / 2), f.frobenius(t, n / 2)), t);
    if (f.trace(term)) out += f.square(t);
  }
  return out;
}

Graphization graphization_rotation(const Curve& c) {
  const Field& f = *c.field();
  Element xi;
  std::vector<Element> values;
  for (Element t : f.basis()) {
    const int diag = f.trace(f.mul(c(t), t));
    if (diag) xi += t;
    values.push_back(diag ? c(t) + t : c(t));
  }
  Curve out = interpolate(c.field(), values);
  if (!is_graph_curve(out)) throw std::logic_error("graphization failed");
  return {xi, out};
}

AdjacencyMatrix chain(int n) {
  if (n < 2) throw GraphError("chain needs n >= 2");
  AdjacencyMatrix g(n);
  for (int i = 1; i < n; ++i) g.toggle_edge(i, i + 1);
  return g;
}

AdjacencyMatrix star(int n, int center) {
  if (n < 2) throw GraphError("star needs n >= 2");
  if (center == 0) center = n;
  check_vertex(n, center);
  AdjacencyMatrix g(n);
  for (int i = 1; i <= n; ++i) {
    if (i != center) g.toggle_edge(i, center);
  }
  return g;
}

AdjacencyMatrix ring(int n) {
  if (n < 3) throw GraphError("ring needs n >= 3");
  AdjacencyMatrix g = chain(n);
  g.toggle_edge(n, 1);
  return g;
}

FactorizationPartition factorization_partition(const AdjacencyMatrix& g) {
  UnionFind uf(g.n());
  for (auto [i, j] : g.edges()) uf.unite(i - 1, j - 1);
  std::map<int, int> sizes;
  for (int v = 0; v < g.n(); ++v) ++sizes[uf.find(v)];
  FactorizationPartition out;
  for (auto [root, size] : sizes) out.parts.push_back(size);
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

FactorizationPartition factorization_partition(const Curve& c) {
  const Curve graph_curve = graphization_rotation(c).curve;
  const AdjacencyMatrix g = curve_to_graph(graph_curve);
  const Field& f = *c.field();
  for (int i = 1; i <= g.n(); ++i) {
    if (g.neighbors(i).empty() != graph_curve(f.theta(i - 1)).is_zero()) {
      throw std::logic_error("isolated-vertex criterion disagrees with f(theta_i) = 0");
    }
  }
  UnionFind uf(g.n());
  for (auto [i, j] : g.edges()) uf.unite(i - 1, j - 1);
  std::map<int, Element> component_sum;
  for (int v = 0; v < g.n(); ++v) component_sum[uf.find(v)] += f.theta(v);
  for (auto [root, alpha] : component_sum) {
    if (f.trace(graph_curve(alpha))) throw std::logic_error("component trace condition violated");
  }
  return factorization_partition(g);
}

int laplacian_nullity(const AdjacencyMatrix& g) {
  const int n = g.n();
  std::vector<std::vector<Int128>> m(static_cast<std::size_t>(n), std::vector<Int128>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && g.gamma().get(i, j)) {
        m[i][j] = -1;
        m[i][i] += 1;
      }
    }
  }
  // Fraction-free (Bareiss) elimination; entries stay bounded minors.
  int rank = 0;
  Int128 prev = 1;
  for (int c = 0; c < n && rank < n; ++c) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < n; ++r) {
      for (int k = c + 1; k < n; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return n - rank;
}

Curve fully_factorized_curve(FieldPtr field, Element xi) {
  field->check(xi);
  std::vector<Element> values;
  for (int i = 0; i < field->degree(); ++i) values.push_back(field->coord(xi, i) ? field->theta(i) : kZero);
  return interpolate(std::move(field), values);
}

Curve bifactorized_curve(FieldPtr field, const std::vector<Edge>& pairs) {
  const int n = field->degree();
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  for (auto [a, b] : pairs) {
    check_vertex(n, a);
    check_vertex(n, b);
    if (a == b || partner[a - 1] >= 0 || partner[b - 1] >= 0) throw GraphError("overlapping pairs");
    partner[a - 1] = b - 1;
    partner[b - 1] = a - 1;
  }
  if (std::find(partner.begin(), partner.end(), -1) != partner.end()) {
    throw GraphError("pairs must cover every qubit");
  }
  std::vector<Element> values;
  for (int i = 0; i < n; ++i) values.push_back(field->theta(partner[i]));
  Curve c = interpolate(field, values);
  for (std::uint32_t a = 0; a < field->size(); ++a) {
    const Element alpha{a};
    if (c(c(alpha)) != alpha || field->trace(c(alpha)) != field->trace(alpha)) {
      throw std::logic_error("bifactorized curve is not a trace-preserving involution");
    }
  }
  return c;
}

AdjacencyMatrix local_complement(const AdjacencyMatrix& g, int i) {
  const std::vector<int> nb = g.neighbors(i);
  AdjacencyMatrix out = g;
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) out.toggle_edge(nb[a], nb[b]);
  }
  return out;
}

AdjacencyMatrix relabel(const AdjacencyMatrix& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw GraphError("permutation size mismatch");
  AdjacencyMatrix out(g.n());
  for (auto [i, j] : g.edges()) out.toggle_edge(perm[i - 1], perm[j - 1]);
  return out;
}

std::uint64_t canonical_mask(const AdjacencyMatrix& g) {
  if (g.n() > 8) throw GraphError("canonical form limited to n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t best = ~std::uint64_t{0};
  const auto edges = g.edges();
  do {
    std::uint64_t mask = 0;
    for (auto [i, j] : edges) {
      const int a = std::min(perm[i - 1], perm[j - 1]);
      const int b = std::max(perm[i - 1], perm[j - 1]);
      mask |= std::uint64_t{1} << ((a - 1) * g.n() + (b - 1));
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<OrbitClass> lc_orbit_classes(int n) {
  if (n < 1 || n > 6) throw GraphError("orbit classification limited to 1 <= n <= 6");
  std::vector<Edge> slots;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
  }
  auto from_mask = [&](std::uint64_t mask) {
    AdjacencyMatrix g(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (mask >> ((i - 1) * n + (j - 1)) & 1u) g.toggle_edge(i, j);
      }
    }
    return g;
  };

  std::map<std::uint64_t, std::size_t> labelled_count;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << slots.size()); ++sub) {
    AdjacencyMatrix g(n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (sub >> s & 1u) g.toggle_edge(slots[s].first, slots[s].second);
    }
    ++labelled_count[canonical_mask(g)];
  }

  std::vector<OrbitClass> out;
  std::set<std::uint64_t> seen;
  for (auto [mask, count] : labelled_count) {
    if (seen.count(mask)) continue;
    std::vector<std::uint64_t> frontier{mask};
    seen.insert(mask);
    std::size_t size = 0;
    std::vector<std::uint64_t> members;
    while (!frontier.empty()) {
      const std::uint64_t cur = frontier.back();
      frontier.pop_back();
      size += labelled_count.at(cur);
      members.push_back(cur);
      const AdjacencyMatrix g = from_mask(cur);
      for (int v = 1; v <= n; ++v) {
        const std::uint64_t next = canonical_mask(local_complement(g, v));
        if (seen.insert(next).second) frontier.push_back(next);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back({from_mask(mask), size, members});
  }
  return out;
}

std::string to_dot(const AdjacencyMatrix& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int i = 1; i <= g.n(); ++i) os << "  " << i << ";\n";
  for (auto [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace phasegraph
