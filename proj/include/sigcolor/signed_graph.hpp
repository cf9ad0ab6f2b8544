#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sigcolor {

enum class Sign : std::int8_t { positive = 1, negative = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }
constexpr char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

/// Undirected signed edge; endpoints are stored with u <= v, u == v is a loop.
struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::positive;

  bool is_loop() const { return u == v; }
  int other(int x) const { return x == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One end of an edge as seen from a vertex.
struct Incidence {
  std::size_t edge;
  int neighbor;
  Sign sign;
};

/// Signed multigraph on vertices 0..n-1. Loops and parallel edges of either
/// sign are allowed; simplicity is a query, not an invariant.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n);
  SignedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  int add_vertex() { return n_++; }
  /// Returns the index of the new edge. Throws IndexError.
  std::size_t add_edge(int u, int v, Sign sign);

  /// No loops and no two edges on the same vertex pair.
  bool is_simple() const;
  bool has_positive_loop() const;

  /// Per-vertex incidence lists; a loop appears once in its vertex's list.
  std::vector<std::vector<Incidence>> incidence() const;
  /// Distinct neighbours of v other than v itself, ascending.
  std::vector<int> neighbors(int v) const;
  /// Number of distinct neighbours (parallel edges counted once, loops ignored).
  int degree(int v) const;

  /// Equality of vertex counts and edge multisets.
  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Sorted set of vertices at which to switch.
class SwitchSet {
 public:
  SwitchSet() = default;
  explicit SwitchSet(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  bool contains(int v) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

  SwitchSet symmetric_difference(const SwitchSet& other) const;

  friend bool operator==(const SwitchSet&, const SwitchSet&) = default;

 private:
  std::vector<int> members_;
};

/// Flips the sign of every edge with exactly one endpoint in s. Loops never flip.
SignedGraph switching(const SignedGraph& g, const SwitchSet& s);

/// A closed walk with its edges named explicitly: edges[i] joins vertices[i]
/// and vertices[i+1], and vertices.front() == vertices.back().
struct Walk {
  std::vector<int> vertices;
  std::vector<std::size_t> edges;
};

/// Product of the signs of the walk's edges, counted with multiplicity.
Sign cycle_sign(const SignedGraph& g, const Walk& walk);

/// Some s with switching(g1, s) == g2, or nullopt if the signatures are not
/// equivalent. Throws StructureMismatch if the underlying multigraphs differ.
std::optional<SwitchSet> equivalence_witness(const SignedGraph& g1, const SignedGraph& g2);
bool is_equivalent(const SignedGraph& g1, const SignedGraph& g2);

/// side[v] in {0, 1}. Signs are ignored; any loop makes the graph non-bipartite.
std::optional<std::vector<int>> bipartition(const SignedGraph& g);
bool is_bipartite(const SignedGraph& g);

/// Ordering v_1..v_n in which every vertex has at most k neighbours before it,
/// produced by repeatedly deleting a minimum-degree vertex (highest id on ties)
/// and reversing. Throws NotDegenerate.
std::vector<int> degeneracy_order(const SignedGraph& g, int k);

/// True if every vertex of order has at most k distinct earlier neighbours and
/// order is a permutation of the vertices.
bool is_degeneracy_order(const SignedGraph& g, std::span<const int> order, int k);

struct Simplified {
  SignedGraph graph;
  bool has_positive_loop = false;
  bool has_negative_loop = false;
  bool has_digon = false;
};

/// Collapses parallel edges of equal sign; opposite-sign pairs survive as digons.
Simplified simplify(const SignedGraph& g);

/// Simple and acyclic.
bool is_forest(const SignedGraph& g);

/// Vertex count kept; every edge touching a removed vertex is dropped.
SignedGraph without_edges_at(const SignedGraph& g, std::span<const int> removed);

/// Vertex count kept; only edges with both ends in keep[] survive.
SignedGraph restricted_to(const SignedGraph& g, const std::vector<bool>& keep);

}  // namespace sigcolor
