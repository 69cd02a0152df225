#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "phasegraph/clifford.hpp"
#include "phasegraph/graph.hpp"

using namespace phasegraph;

namespace {

BitMatrix matrix(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

}  // namespace

TEST(Graph, CurveDictionaryExamples) {
  const FieldPtr f4 = Field::builtin(4);
  EXPECT_EQ(graph_to_curve(f4, AdjacencyMatrix(4)), Curve::zero(f4));
  const Curve c = graph_to_curve(f4, chain(4));
  EXPECT_EQ(c, Curve(f4, {kZero, f4->exp(7), kZero, f4->exp(11)}));
  EXPECT_EQ(curve_to_graph(c), chain(4));
  EXPECT_EQ(chain(4).gamma(), matrix({{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}));
  EXPECT_EQ(curve_to_graph(Curve::zero(f4)), AdjacencyMatrix(4));
}

TEST(Graph, RaysAndGraphCurvesShareAdjacency) {
  const FieldPtr f3 = Field::builtin(3);
  const Curve ray4 = ray(f3, f3->exp(4));
  const Curve graphed(f3, {kZero, f3->exp(4), f3->exp(2)});
  EXPECT_EQ(curve_to_graph(ray4), curve_to_graph(graphed));
  EXPECT_FALSE(is_graph_curve(ray4));
  EXPECT_TRUE(is_graph_curve(graphed));
  EXPECT_TRUE(is_graph_curve(Curve::zero(f3)));
}

TEST(Graph, GraphizationExamples) {
  const FieldPtr f3 = Field::builtin(3);
  const Graphization g = graphization_rotation(ray(f3, f3->exp(4)));
  EXPECT_EQ(g.xi, f3->exp(3) + f3->exp(5));
  EXPECT_EQ(g.curve, Curve(f3, {kZero, f3->exp(4), f3->exp(2)}));
  const Curve chain3 = graph_to_curve(f3, chain(3));
  const Graphization same = graphization_rotation(chain3);
  EXPECT_EQ(same.xi, kZero);
  EXPECT_EQ(same.curve, chain3);
}

TEST(Graph, GeneratorShapes) {
  EXPECT_EQ(chain(3).edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(star(4).edges(), (std::vector<Edge>{{1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(star(4, 2).neighbors(2), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(ring(4).edges(), (std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
}

TEST(Graph, InvalidMatricesRejected) {
  EXPECT_THROW(AdjacencyMatrix(matrix({{1, 0}, {0, 0}})), GraphError);
  EXPECT_THROW(AdjacencyMatrix(matrix({{0, 1}, {0, 0}})), GraphError);
  EXPECT_THROW(AdjacencyMatrix::from_edges(3, {{1, 1}}), GraphError);
}

TEST(Graph, PartitionExamples) {
  for (int n = 2; n <= 5; ++n) {
    const FieldPtr f = Field::builtin(n);
    const FactorizationPartition all_ones{std::vector<int>(static_cast<std::size_t>(n), 1)};
    EXPECT_EQ(factorization_partition(Curve::zero(f)), all_ones);
    EXPECT_EQ(factorization_partition(Curve::identity(f)), all_ones);
    EXPECT_EQ(factorization_partition(chain(n)), FactorizationPartition{{n}});
  }
  EXPECT_EQ(FactorizationPartition({2, 2}).to_string(), "{2,2}");
}

TEST(Graph, RayScanFindsTwoBipartitions) {
  const FieldPtr f4 = Field::builtin(4);
  int hits = 0;
  for (std::uint32_t l = 0; l < f4->size(); ++l) {
    if (factorization_partition(ray(f4, Element{l})) == FactorizationPartition{{2, 2}}) ++hits;
  }
  EXPECT_EQ(hits, 2);
}

TEST(Graph, FullyAndBiFactorized) {
  const FieldPtr f2 = Field::builtin(2);
  EXPECT_EQ(fully_factorized_curve(f2, kZero), Curve::zero(f2));
  const Curve b = bifactorized_curve(f2, {{1, 2}});
  for (std::uint32_t a = 0; a < 4; ++a) {
    const Element alpha{a};
    const Element want = f2->mul(Element{static_cast<std::uint32_t>(f2->coord(alpha, 0))}, f2->theta(1)) +
                         f2->mul(Element{static_cast<std::uint32_t>(f2->coord(alpha, 1))}, f2->theta(0));
    EXPECT_EQ(b(alpha), want);
    EXPECT_EQ(b(b(alpha)), alpha);
  }
  EXPECT_THROW(bifactorized_curve(Field::builtin(3), {{1, 2}}), GraphError);
  for (int n = 2; n <= 5; ++n) {
    const FieldPtr f = Field::builtin(n);
    EXPECT_EQ(factorization_partition(fully_factorized_curve(f, kOne)).count(), n);
  }
  const FieldPtr f4 = Field::builtin(4);
  EXPECT_EQ(factorization_partition(bifactorized_curve(f4, {{1, 3}, {2, 4}})), (FactorizationPartition{{2, 2}}));
}

TEST(Graph, LocalComplementExamples) {
  AdjacencyMatrix g = AdjacencyMatrix::from_edges(4, {{1, 2}});
  EXPECT_EQ(local_complement(g, 3), g);
  AdjacencyMatrix complete(5);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) complete.toggle_edge(i, j);
  }
  EXPECT_EQ(local_complement(star(5), 5), complete);
}

TEST(Graph, OrbitClassCounts) {
  EXPECT_EQ(lc_orbit_classes(2).size(), 2u);
  EXPECT_EQ(lc_orbit_classes(3).size(), 3u);
  EXPECT_EQ(lc_orbit_classes(4).size(), 6u);
  for (int n = 2; n <= 4; ++n) {
    std::size_t total = 0;
    for (const auto& cls : lc_orbit_classes(n)) total += cls.size;
    EXPECT_EQ(total, std::size_t{1} << (n * (n - 1) / 2));
  }
}

TEST(Graph, EvenRestrictionVanishesOnGraphCurves) {
  std::mt19937 rng(21);
  for (int n : {2, 4, 6}) {
    const FieldPtr f = Field::builtin(n);
    for (int trial = 0; trial < 30; ++trial) {
      const Curve c = graph_to_curve(f, oracle::random_graph(n, rng));
      EXPECT_EQ(even_phi0_restriction(c), kZero);
      EXPECT_EQ(c.phi(0), kZero);
    }
  }
}

TEST(Graph, DotExport) {
  const std::string dot = to_dot(chain(3));
  EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
  EXPECT_NE(dot.find("2 -- 3"), std::string::npos);
}

TEST(GraphProperty, RoundTripAllSmallGraphs) {
  for (int n = 2; n <= 5; ++n) {
    const FieldPtr f = Field::builtin(n);
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
      AdjacencyMatrix g(n);
      int bit = 0;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j, ++bit) {
          if (code >> bit & 1u) g.toggle_edge(i, j);
        }
      }
      const Curve c = graph_to_curve(f, g);
      ASSERT_TRUE(is_additive_commutative(c));
      ASSERT_TRUE(is_graph_curve(c));
      ASSERT_EQ(curve_to_graph(c), g);
      // f(theta_i) is the neighbourhood sum.
      for (int i = 1; i <= n; ++i) {
        Element want;
        for (int j : g.neighbors(i)) want += f->theta(j - 1);
        ASSERT_EQ(c(f->theta(i - 1)), want);
      }
    }
  }
}

TEST(GraphProperty, GraphCurveIffZeroLinearCoefficient) {
  for (int n = 2; n <= 4; ++n) {
    const FieldPtr f = Field::builtin(n);
    for (const Curve& c : enumerate_curves(f)) {
      ASSERT_EQ(is_graph_curve(c), c.phi(0) == kZero);
    }
  }
}

TEST(GraphProperty, DecoratedRoundTrip) {
  std::mt19937 rng(8);
  for (int n = 2; n <= 6; ++n) {
    const FieldPtr f = Field::builtin(n);
    for (int trial = 0; trial < 20; ++trial) {
      const Curve c = oracle::random_curve(f, rng);
      ASSERT_EQ(decorated_to_curve(f, decorated_matrix(c)), c);
      ASSERT_TRUE(is_graph_curve(graphization_rotation(c).curve));
    }
  }
}

TEST(GraphProperty, PartitionMatchesComponentsAndLaplacian) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const AdjacencyMatrix g = oracle::random_graph(n, rng);
    const FactorizationPartition p = factorization_partition(g);
    EXPECT_EQ(p.parts, oracle::component_sizes(g));
    EXPECT_EQ(p.count(), laplacian_nullity(g));
    EXPECT_EQ(std::accumulate(p.parts.begin(), p.parts.end(), 0), n);
  }
}

TEST(GraphProperty, LocalComplementIsInvolution) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const AdjacencyMatrix g = oracle::random_graph(n, rng);
    for (int i = 1; i <= n; ++i) ASSERT_EQ(local_complement(local_complement(g, i), i), g);
  }
}

TEST(GraphProperty, CanonicalMaskIsRelabelInvariant) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    const AdjacencyMatrix g = oracle::random_graph(n, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const AdjacencyMatrix h = relabel(g, perm);
    EXPECT_EQ(canonical_mask(g), canonical_mask(h));
    EXPECT_EQ(h.edges().size(), g.edges().size());
    for (auto [i, j] : g.edges()) {
      EXPECT_TRUE(h.has_edge(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]));
    }
  }
}
