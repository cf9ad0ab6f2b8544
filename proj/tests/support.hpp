#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sigcolor/circle.hpp"
#include "sigcolor/rational.hpp"
#include "sigcolor/signed_graph.hpp"

namespace sigcolor::testing {

inline Rational Q(const char* text) { return Rational::parse(text); }

inline std::vector<Rational> Qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(Q(s));
  return out;
}

inline Sign random_sign(std::mt19937_64& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? Sign::positive : Sign::negative;
}

// Simple graph, each pair present with probability `density`.
inline SignedGraph random_simple(std::mt19937_64& rng, int n, double density) {
  SignedGraph g(n);
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v, random_sign(rng));
  return g;
}

// Multigraph with m edges; loops and parallels allowed.
inline SignedGraph random_multigraph(std::mt19937_64& rng, int n, int m, bool loops) {
  SignedGraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(g.m()) < m) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u == v && !loops) continue;
    g.add_edge(u, v, random_sign(rng));
  }
  return g;
}

// Simple 2-degenerate graph: each new vertex joins at most two earlier ones,
// then labels are shuffled.
inline SignedGraph random_2degenerate(std::mt19937_64& rng, int n) {
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  SignedGraph g(n);
  std::uniform_int_distribution<int> back(0, 2);
  for (int i = 1; i < n; ++i) {
    std::vector<int> earlier(i);
    std::iota(earlier.begin(), earlier.end(), 0);
    std::shuffle(earlier.begin(), earlier.end(), rng);
    const int k = std::min(i, back(rng) == 0 ? 1 : 2);
    for (int j = 0; j < k; ++j) g.add_edge(label[i], label[earlier[j]], random_sign(rng));
  }
  return g;
}

inline std::vector<int> random_subset(std::mt19937_64& rng, int n) {
  std::vector<int> out;
  std::bernoulli_distribution coin(0.5);
  for (int v = 0; v < n; ++v)
    if (coin(rng)) out.push_back(v);
  return out;
}

inline Rational random_point(std::mt19937_64& rng, const Rational& r, int den) {
  // uniform on the grid r * k / den, k in [0, den)
  const int k = std::uniform_int_distribution<int>(0, den - 1)(rng);
  return r * Rational(k, den);
}

// Brute-force circular chromatic number on tiny graphs: every candidate
// p/q with p even, p <= 2n, tried by exhaustive grid assignment checked with
// the circle-metric verifier. Shares nothing with the solver's search.
inline Rational brute_force_chi(const SignedGraph& g) {
  const int n = g.n();
  std::set<Rational> values;
  for (int p = 2; p <= 2 * n; p += 2)
    for (int q = 1; 2 * q <= p; ++q) values.insert(Rational(p, q));
  for (const Rational& value : values) {
    for (int p = 2; p <= 2 * n; p += 2) {
      const Rational qq = Rational(p) / value;
      if (!qq.is_integer()) continue;
      std::vector<int> colors(n, 0);
      bool found = false;
      while (true) {
        std::vector<Rational> f;
        for (int c : colors) f.push_back(Rational(c) * value / Rational(p));
        if (verify_coloring(g, Coloring(value, f), Metric::circle).ok()) {
          found = true;
          break;
        }
        int i = n - 1;
        while (i >= 1 && colors[i] == p - 1) colors[i--] = 0;
        if (i < 1) break;
        ++colors[i];
      }
      if (found) return value;
      break;  // one representative grid per value is enough here
    }
  }
  return Rational(-1);
}

// Canonical form of g under switching: the least sorted edge multiset over
// all 2^n switch sets. Graphs are equal up to edge order, so parallel edges
// of opposite sign are interchangeable.
inline std::vector<Edge> canonical_signature(const SignedGraph& g) {
  const int n = g.n();
  std::vector<Edge> best;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges)
      if (((s >> e.u) & 1) != ((s >> e.v) & 1)) e.sign = -e.sign;
    std::sort(edges.begin(), edges.end());
    if (s == 0 || edges < best) best = std::move(edges);
  }
  return best;
}

inline SignedGraph with_signature(const SignedGraph& g, std::uint64_t negatives) {
  SignedGraph out(g.n());
  for (std::size_t i = 0; i < g.m(); ++i) {
    const Edge& e = g.edge(i);
    out.add_edge(e.u, e.v, (negatives >> i) & 1 ? Sign::negative : Sign::positive);
  }
  return out;
}

}  // namespace sigcolor::testing
