#pragma once

// Brute-force references that share no code paths with the library's
// log tables, coefficient formulas or phase-space shortcuts.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "phasegraph/curve.hpp"
#include "phasegraph/graph.hpp"

namespace oracle {

using phasegraph::AdjacencyMatrix;
using phasegraph::Curve;
using phasegraph::Element;
using phasegraph::FieldPtr;

// Shift-and-add multiplication mod poly.
inline std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int n) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> n & 1u) a ^= poly;
  }
  return r;
}

inline std::uint32_t slow_pow2k(std::uint32_t a, int k, std::uint32_t poly, int n) {
  for (int i = 0; i < k; ++i) a = slow_mul(a, a, poly, n);
  return a;
}

inline int slow_trace(std::uint32_t a, std::uint32_t poly, int n) {
  std::uint32_t sum = 0;
  std::uint32_t t = a;
  for (int i = 0; i < n; ++i) {
    sum ^= t;
    t = slow_mul(t, t, poly, n);
  }
  return static_cast<int>(sum & 1u);
}

inline std::uint32_t slow_eval(const std::vector<std::uint32_t>& phi, std::uint32_t a, std::uint32_t poly,
                               int n) {
  std::uint32_t r = 0;
  std::uint32_t t = a;
  for (int i = 0; i < n; ++i) {
    r ^= slow_mul(phi[static_cast<std::size_t>(i)], t, poly, n);
    t = slow_mul(t, t, poly, n);
  }
  return r;
}

// Every coefficient list whose points pairwise commute, by exhaustion
// over all 2^(n*n) lists (n <= 3).
inline std::vector<std::vector<std::uint32_t>> brute_commutative_curves(int n, std::uint32_t poly) {
  const std::uint32_t q = 1u << n;
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint64_t total = 1ull << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> phi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) phi[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(code >> (i * n)) & (q - 1);
    std::vector<std::uint32_t> f(q);
    for (std::uint32_t a = 0; a < q; ++a) f[a] = slow_eval(phi, a, poly, n);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      for (std::uint32_t b = a + 1; b < q && ok; ++b) {
        ok = slow_trace(slow_mul(a, f[b], poly, n) ^ slow_mul(f[a], b, poly, n), poly, n) == 0;
      }
    }
    if (ok) out.push_back(phi);
  }
  return out;
}

inline AdjacencyMatrix random_graph(int n, std::mt19937& rng) {
  AdjacencyMatrix g(n);
  std::bernoulli_distribution coin(0.5);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (coin(rng)) g.toggle_edge(i, j);
    }
  }
  return g;
}

// Symmetric decorated matrices are in bijection with commutative curves.
inline Curve random_curve(const FieldPtr& field, std::mt19937& rng) {
  const int n = field->degree();
  phasegraph::BitMatrix m(n, n);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int v = coin(rng) ? 1 : 0;
      m.set(i, j, v);
      m.set(j, i, v);
    }
  }
  return phasegraph::decorated_to_curve(field, {m});
}

// Connected components by repeated neighbourhood expansion.
inline std::vector<int> component_sizes(const AdjacencyMatrix& g) {
  const int n = g.n();
  std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> sizes;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    int count = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++count;
      for (int w = 1; w <= n; ++w) {
        if (g.has_edge(v, w) && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(count);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace oracle
