// Acceptance run: one PASS/FAIL line per criterion, sub-checks indented.
// Exit status is nonzero when any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "phasegraph/clifford.hpp"
#include "phasegraph/io.hpp"
#include "phasegraph/oracle.hpp"
#include "phasegraph/stabilizer.hpp"

using namespace phasegraph;

namespace {

struct Sub {
  std::string name;
  bool pass;
  std::string detail;
  bool counted;
};

class Criterion {
 public:
  void check(const std::string& name, bool pass, const std::string& detail = "") {
    subs_.push_back({name, pass, detail, true});
  }
  // Reported only; does not affect the verdict.
  void note(const std::string& name, bool pass, const std::string& detail = "") {
    subs_.push_back({name, pass, detail, false});
  }
  bool pass() const {
    for (const auto& s : subs_) {
      if (s.counted && !s.pass) return false;
    }
    return true;
  }
  const std::vector<Sub>& subs() const { return subs_; }

 private:
  std::vector<Sub> subs_;
};

BitMatrix matrix(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::string flat(const BitMatrix& m) {
  std::string s = m.to_string();
  for (char& c : s) {
    if (c == '\n') c = '|';
  }
  if (!s.empty() && s.back() == '|') s.pop_back();
  return s;
}

Curve powers(const FieldPtr& f, std::vector<int> p) {
  std::vector<Element> phi;
  for (int k : p) phi.push_back(k < 0 ? kZero : f->exp(k));
  return Curve(f, phi);
}

AdjacencyMatrix graph_from_code(int n, std::uint32_t code) {
  AdjacencyMatrix g(n);
  int bit = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++bit) {
      if (code >> bit & 1u) g.toggle_edge(i, j);
    }
  }
  return g;
}

// Shipped specs, checked with shift-and-add arithmetic only.
void criterion_fields(Criterion& c) {
  for (int n = 2; n <= 5; ++n) {
    const FieldPtr f = load_field(builtin_field_path(n));
    const std::uint32_t poly = f->polynomial();
    const std::string tag = "n=" + std::to_string(n);
    c.check(tag + " irreducible", is_irreducible(poly, n));

    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = oracle::slow_mul(x, 2, poly, n);
      ++order;
    } while (x != 1 && order <= (1u << n));
    c.check(tag + " primitive", order == (1u << n) - 1, "ord(x) = " + std::to_string(order));

    bool dual = true;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int t = oracle::slow_trace(oracle::slow_mul(f->theta(i).bits, f->theta(j).bits, poly, n), poly, n);
        dual = dual && t == (i == j ? 1 : 0);
      }
    }
    std::string basis;
    for (int p : f->basis_powers()) basis += " s^" + std::to_string(p);
    c.check(tag + " tr(theta_i theta_j) = delta_ij", dual, "basis" + basis);
  }
}

void criterion_xor(Criterion& c) {
  const FieldPtr f2 = Field::builtin(2);
  const Curve r2 = xor_gate(Curve::identity(f2), 1, 2);
  c.check("GF(4): b = a -> b = s^2 a", r2 == powers(f2, {2, -1}), r2.to_string());
  c.check("GF(4): dense CNOT agrees", verify_gate(Curve::identity(f2), Xor{1, 2}).pass);
  const FieldPtr f3 = Field::builtin(3);
  const Curve r3 = xor_gate(Curve::identity(f3), 1, 2);
  c.check("GF(8): b = a -> b = s a + a^2 + a^4", r3 == Curve(f3, {f3->exp(1), kOne, kOne}), r3.to_string());
  c.check("GF(8): dense CNOT agrees", verify_gate(Curve::identity(f3), Xor{1, 2}).pass);
}

void criterion_graphization(Criterion& c) {
  const FieldPtr f = Field::builtin(3);
  const Curve before = ray(f, f->exp(4));
  const Element xi = f->exp(3) + f->exp(5);
  const Curve after = x_rotation(before, xi);
  c.check("x-rotation by s^3+s^5 gives b = s^4 a^2 + s^2 a^4", after == powers(f, {-1, 4, 2}), after.to_string());
  c.check("graphization picks xi = s^3+s^5", graphization_rotation(before).xi == xi);
  c.check("is_graph_curve false -> true", !is_graph_curve(before) && is_graph_curve(after));
  c.check("same adjacency matrix", curve_to_graph(before) == curve_to_graph(after), flat(curve_to_graph(after).gamma()));
}

void criterion_pipeline(Criterion& c) {
  const FieldPtr f = Field::builtin(4);
  const Curve start = graph_to_curve(f, chain(4));
  c.check("chain(4) -> b = s^7 a^2 + s^11 a^8", start == powers(f, {-1, 7, -1, 11}), start.to_string());

  const Curve z_expected = powers(f, {11, 5, 15, 10});
  const BitMatrix z_gamma = matrix({{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 1}});
  const Curve z = z_rotation(start, qubits_to_xi(*f, {2, 4}));
  c.check("z-rotation on qubits {2,4}: curve", z == z_expected,
          "got " + z.to_string() + ", expected " + z_expected.to_string());
  c.check("z-rotation on qubits {2,4}: decorated Gamma'", decorated_matrix(z).gamma == z_gamma,
          "got " + flat(decorated_matrix(z).gamma));
  c.note("dense oracle agrees with implemented z-rotation", verify_gate(start, ZRot{qubits_to_xi(*f, {2, 4})}).pass);
  c.note("expected curve has the expected decorated Gamma'", decorated_matrix(z_expected).gamma == z_gamma);
  c.note("expected curve equals z-rotation on qubits {1,3}", z_rotation(start, qubits_to_xi(*f, {1, 3})) == z_expected);

  const Curve x_expected = powers(f, {-1, 6, 10, 3});
  const Curve x = x_rotation(z, f->theta(3));
  c.check("then x-rotation on qubit 4", x == x_expected, "got " + x.to_string() + ", expected " + x_expected.to_string());
  c.note("x-rotation on qubit 4 of the expected intermediate", x_rotation(z_expected, f->theta(3)) == x_expected);
  c.note("expected graph is Gamma' without diagonal", curve_to_graph(x_expected).gamma() == z_gamma.without_diagonal());

  const Curve xor_expected = powers(f, {-1, 14, -1, 7});
  const BitMatrix xor_gamma = matrix({{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  const Curve xr = xor_gate(start, 1, 2);
  c.check("XOR_12: curve", xr == xor_expected, "got " + xr.to_string() + ", expected " + xor_expected.to_string());
  c.check("XOR_12: Gamma'", xor_adjacency(chain(4), 1, 2).gamma() == xor_gamma,
          "got " + flat(xor_adjacency(chain(4), 1, 2).gamma()));
  c.note("dense CNOT agrees with implemented XOR_12", verify_gate(start, Xor{1, 2}).pass);
  c.note("expected curve has the expected Gamma'", curve_to_graph(xor_expected).gamma() == xor_gamma);

  const Curve sq_expected = powers(f, {-1, 4, -1, 2});
  const BitMatrix sq_gamma = matrix({{0, 1, 1, 1}, {1, 0, 0, 1}, {1, 0, 0, 0}, {1, 1, 0, 0}});
  const Curve sq = squeeze(start, f->exp(1));
  c.check("S_s: curve", sq == sq_expected, "got " + sq.to_string());
  c.check("S_s: Gamma' (M Gamma M)", squeeze_adjacency(*f, chain(4), f->exp(1)).gamma() == sq_gamma,
          "got " + flat(squeeze_adjacency(*f, chain(4), f->exp(1)).gamma()));
  c.check("S_s: curve and matrix agree", curve_to_graph(sq).gamma() == sq_gamma);
  c.note("dense squeeze agrees", verify_gate(start, Squeeze{f->exp(1)}).pass);
}

void criterion_eigenspace(Criterion& c) {
  auto run = [&](int n, const std::string& what, const std::vector<Curve>& curves) {
    const FieldPtr f = Field::builtin(n);
    int commute_fail = 0;
    int dim_fail = 0;
    for (const auto& cur : curves) {
      // Generators carry phi_f(theta_i), which is 1 on graph curves.
      const StabCoefficients co = c_coefficients(cur);
      std::vector<ExactMatrix> gens;
      for (int i = 0; i < n; ++i) {
        const Element t = f->theta(i);
        gens.push_back(dense_pauli(*f, t, cur(t)).times_i_power(phase_varphi(co, t)));
      }
      bool ok = true;
      for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) ok = ok && commutator(gens[a], gens[b]).is_zero();
      }
      if (!ok) {
        ++commute_fail;
        continue;
      }
      if (common_eigenspace_dimension(gens) != 1) ++dim_fail;
    }
    const std::string tag = "n=" + std::to_string(n) + " (" + std::to_string(curves.size()) + " " + what + ")";
    c.check(tag + " generators commute", commute_fail == 0, std::to_string(commute_fail) + " failures");
    c.check(tag + " +1 eigenspace is one-dimensional", dim_fail == 0, std::to_string(dim_fail) + " failures");
  };
  run(3, "decorated graphs", enumerate_curves(Field::builtin(3)));
  std::mt19937 rng(2024);
  for (int n : {4, 5}) {
    const FieldPtr f = Field::builtin(n);
    std::vector<Curve> curves;
    for (int k = 0; k < 200; ++k) curves.push_back(graph_to_curve(f, oracle::random_graph(n, rng)));
    run(n, "random graphs", curves);
  }
}

void criterion_coefficients(Criterion& c) {
  for (int n = 2; n <= 3; ++n) {
    const FieldPtr f = Field::builtin(n);
    int curves = 0;
    int bad = 0;
    for (const Curve& cur : enumerate_curves(f)) {
      ++curves;
      const StabCoefficients co = c_coefficients(cur);
      bool ok = true;
      for (std::uint32_t a = 0; a < f->size(); ++a) {
        for (std::uint32_t b = 0; b < f->size(); ++b) {
          const int lhs = co.exponent(Element{a}) + co.exponent(Element{b});
          const int rhs = 2 * f->trace(f->mul(Element{b}, cur(Element{a}))) + co.exponent(Element{a} + Element{b});
          ok = ok && (lhs - rhs + 8) % 4 == 0;
        }
      }
      if (!ok) ++bad;
    }
    c.check("recurrence, all " + std::to_string(curves) + " curves at n=" + std::to_string(n), bad == 0,
            std::to_string(bad) + " failures");
  }
  std::mt19937 rng(77);
  for (int n : {3, 4}) {
    const FieldPtr f = Field::builtin(n);
    int bad = 0;
    for (int k = 0; k < 50; ++k) {
      if (!verify_p_operator(oracle::random_curve(f, rng)).pass) ++bad;
    }
    c.check("P_f conjugation, 50 random curves at n=" + std::to_string(n), bad == 0, std::to_string(bad) + " failures");
  }
  const FieldPtr f3 = Field::builtin(3);
  int bad = 0;
  for (std::uint32_t code = 0; code < 8; ++code) {
    const AdjacencyMatrix g = graph_from_code(3, code);
    if (!(c_graph(f3, g) == c_coefficients(graph_to_curve(f3, g)))) ++bad;
  }
  c.check("graph formula matches general formula, all n=3 graphs", bad == 0, std::to_string(bad) + " failures");
}

void criterion_factorization(Criterion& c) {
  for (int n = 2; n <= 5; ++n) {
    const FieldPtr f = Field::builtin(n);
    const std::vector<int> ones(static_cast<std::size_t>(n), 1);
    const auto h = factorization_partition(Curve::zero(f));
    const auto v = factorization_partition(DualCurve(f, std::vector<Element>(static_cast<std::size_t>(n))).as_curve());
    const auto d = factorization_partition(Curve::identity(f));
    const std::string tag = "n=" + std::to_string(n);
    c.check(tag + " horizontal axis", h.parts == ones, h.to_string());
    c.check(tag + " vertical axis", v.parts == ones, v.to_string());
    c.check(tag + " b = a", d.parts == ones, d.to_string());
  }
  const FieldPtr f4 = Field::builtin(4);
  std::string hits;
  int count = 0;
  for (std::uint32_t l = 0; l < f4->size(); ++l) {
    if (factorization_partition(ray(f4, Element{l})).parts == std::vector<int>{2, 2}) {
      ++count;
      hits += " " + f4->to_string(Element{l});
    }
  }
  c.check("ray scan at n=4: two rays with {2,2}", count == 2, std::to_string(count) + " rays:" + hits);

  std::mt19937 rng(99);
  int bad = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 5;
    const AdjacencyMatrix g = oracle::random_graph(n, rng);
    const auto p = factorization_partition(g);
    if (p.count() != laplacian_nullity(g) || p.parts != oracle::component_sizes(g)) ++bad;
  }
  c.check("part count = Laplacian nullity, 100 random graphs n<=6", bad == 0, std::to_string(bad) + " failures");
}

void criterion_reduced(Criterion& c) {
  const std::vector<std::pair<std::string, std::function<AdjacencyMatrix(int)>>> families{
      {"chain", [](int n) { return chain(n); }},
      {"star", [](int n) { return star(n); }},
      {"ring", [](int n) { return ring(n); }},
  };
  for (const auto& [name, make] : families) {
    for (int n = 3; n <= 5; ++n) {
      const FieldPtr f = Field::builtin(n);
      const Curve cur = graph_to_curve(f, make(n));
      // Dense state from the generators alone.
      ExactMatrix rho = ExactMatrix::identity(f->size());
      for (int i = 0; i < n; ++i) {
        rho = rho * (ExactMatrix::identity(f->size()) + dense_pauli(*f, f->theta(i), cur(f->theta(i)))).rescaled(2);
      }
      int sets = 0;
      int bad = 0;
      for (std::uint32_t m = 1; m < (1u << n); ++m) {
        std::vector<int> keep;
        for (int q = 1; q <= n; ++q) {
          if (m >> (q - 1) & 1u) keep.push_back(q);
        }
        ++sets;
        if (!(reduced_density(cur, keep) == dense_partial_trace(rho, n, keep))) ++bad;
      }
      c.check(name + "(" + std::to_string(n) + "), " + std::to_string(sets) + " keep-sets", bad == 0,
              std::to_string(bad) + " mismatches");
    }
  }
}

void criterion_enumeration(Criterion& c) {
  for (int n = 2; n <= 4; ++n) {
    const FieldPtr f = Field::builtin(n);
    const auto curves = enumerate_curves(f);
    const std::size_t want = std::size_t{1} << (n * (n + 1) / 2);
    c.check("n=" + std::to_string(n) + " count", curves.size() == want,
            std::to_string(curves.size()) + " vs " + std::to_string(want));
    if (n <= 3) {
      std::set<std::vector<std::uint32_t>> listed;
      for (const Curve& cur : curves) {
        std::vector<std::uint32_t> phi;
        for (Element e : cur.phi()) phi.push_back(e.bits);
        listed.insert(phi);
      }
      const auto brute = oracle::brute_commutative_curves(n, f->polynomial());
      c.check("n=" + std::to_string(n) + " matches exhaustive filter",
              listed == std::set<std::vector<std::uint32_t>>(brute.begin(), brute.end()),
              std::to_string(brute.size()) + " filtered");
    }
  }
}

void criterion_lc(Criterion& c) {
  std::mt19937 rng(55);
  int phi0_bad = 0;
  int graph_bad = 0;
  int double_bad = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 4;
    const FieldPtr f = Field::builtin(n);
    const AdjacencyMatrix g = oracle::random_graph(n, rng);
    const Curve cur = graph_to_curve(f, g);
    const int v = std::uniform_int_distribution<int>(1, n)(rng);
    const Curve lc = local_complement_curve(cur, v);
    if (lc.phi(0) != cur.phi(0)) ++phi0_bad;
    if (!(curve_to_graph(lc) == local_complement(g, v))) ++graph_bad;
    if (!(local_complement(local_complement(g, v), v) == g) || !(curve_to_graph(local_complement_curve(lc, v)) == g)) {
      ++double_bad;
    }
  }
  c.check("phi_0 unchanged, 100 random graph curves n<=5", phi0_bad == 0, std::to_string(phi0_bad) + " failures");
  c.check("curve-level LC realises graph-level LC", graph_bad == 0, std::to_string(graph_bad) + " failures");
  c.check("double LC is the identity", double_bad == 0, std::to_string(double_bad) + " failures");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"field specs", criterion_fields},
      {"XOR examples", criterion_xor},
      {"graphization example", criterion_graphization},
      {"four-qubit pipeline", criterion_pipeline},
      {"stabilizer/oracle equivalence", criterion_eigenspace},
      {"coefficient machinery", criterion_coefficients},
      {"factorization", criterion_factorization},
      {"reduced density matrices", criterion_reduced},
      {"enumeration count", criterion_enumeration},
      {"local complementation", criterion_lc},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Criterion c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.check("exception", false, e.what());
    }
    const bool pass = c.pass();
    if (!pass) ++failed;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << k + 1 << " " << criteria[k].first << "\n";
    for (const auto& s : c.subs()) {
      std::cout << "    " << (s.pass ? "ok  " : "FAIL") << (s.counted ? "  " : " (info) ") << s.name;
      if (!s.detail.empty()) std::cout << ": " << s.detail;
      std::cout << "\n";
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
