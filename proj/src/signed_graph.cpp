#include "sigcolor/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "sigcolor/errors.hpp"

namespace sigcolor {
namespace {

Edge normalized(int u, int v, Sign s) { return u <= v ? Edge{u, v, s} : Edge{v, u, s}; }

struct PairCounts {
  int positive = 0;
  int negative = 0;
};

std::map<std::pair<int, int>, PairCounts> pair_counts(const SignedGraph& g) {
  std::map<std::pair<int, int>, PairCounts> counts;
  for (const Edge& e : g.edges()) {
    auto& c = counts[{e.u, e.v}];
    (e.sign == Sign::positive ? c.positive : c.negative) += 1;
  }
  return counts;
}

}  // namespace

SignedGraph::SignedGraph(int n) : n_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
}

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : SignedGraph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v, e.sign);
}

void SignedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw IndexError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

std::size_t SignedGraph::add_edge(int u, int v, Sign sign) {
  check_vertex(u);
  check_vertex(v);
  edges_.push_back(normalized(u, v, sign));
  return edges_.size() - 1;
}

bool SignedGraph::is_simple() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.is_loop()) return false;
    pairs.emplace_back(e.u, e.v);
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool SignedGraph::has_positive_loop() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.is_loop() && e.sign == Sign::positive; });
}

std::vector<std::vector<Incidence>> SignedGraph::incidence() const {
  std::vector<std::vector<Incidence>> inc(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    inc[e.u].push_back({i, e.v, e.sign});
    if (!e.is_loop()) inc[e.v].push_back({i, e.u, e.sign});
  }
  return inc;
}

std::vector<int> SignedGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.is_loop()) continue;
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int SignedGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  auto ea = a.edges_;
  auto eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

SwitchSet::SwitchSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SwitchSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

SwitchSet SwitchSet::symmetric_difference(const SwitchSet& other) const {
  std::vector<int> out;
  std::set_symmetric_difference(members_.begin(), members_.end(), other.members_.begin(),
                                other.members_.end(), std::back_inserter(out));
  return SwitchSet(std::move(out));
}

SignedGraph switching(const SignedGraph& g, const SwitchSet& s) {
  for (int v : s.members()) {
    if (v < 0 || v >= g.n()) {
      throw IndexError("switch vertex " + std::to_string(v) + " out of range");
    }
  }
  std::vector<bool> in(static_cast<std::size_t>(g.n()), false);
  for (int v : s.members()) in[v] = true;
  SignedGraph out(g.n());
  for (const Edge& e : g.edges()) {
    const bool cut = in[e.u] != in[e.v];
    out.add_edge(e.u, e.v, cut ? -e.sign : e.sign);
  }
  return out;
}

Sign cycle_sign(const SignedGraph& g, const Walk& walk) {
  if (walk.vertices.size() != walk.edges.size() + 1) {
    throw NotAWalk("walk needs exactly one more vertex than edges");
  }
  if (walk.vertices.front() != walk.vertices.back()) throw NotAWalk("walk is not closed");
  Sign product = Sign::positive;
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    if (walk.edges[i] >= g.m()) {
      throw NotAWalk("edge index " + std::to_string(walk.edges[i]) + " does not exist");
    }
    const Edge& e = g.edge(walk.edges[i]);
    const int a = walk.vertices[i];
    const int b = walk.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      throw NotAWalk("edge " + std::to_string(walk.edges[i]) + " does not join " +
                     std::to_string(a) + " and " + std::to_string(b));
    }
    product = product * e.sign;
  }
  return product;
}

// Parallel classes make "the" spanning tree ambiguous in a multigraph, so the
// propagation works on vertex pairs: a pair whose (positive, negative)
// multiplicities must be preserved forces x_u == x_v, one whose counts must be
// exchanged forces x_u != x_v, and a balanced pair constrains nothing.
std::optional<SwitchSet> equivalence_witness(const SignedGraph& g1, const SignedGraph& g2) {
  if (g1.n() != g2.n() || g1.m() != g2.m()) {
    throw StructureMismatch("graphs differ in vertex or edge count");
  }
  const auto c1 = pair_counts(g1);
  const auto c2 = pair_counts(g2);
  if (c1.size() != c2.size()) throw StructureMismatch("underlying multigraphs differ");
  for (auto it1 = c1.begin(), it2 = c2.begin(); it1 != c1.end(); ++it1, ++it2) {
    if (it1->first != it2->first ||
        it1->second.positive + it1->second.negative != it2->second.positive + it2->second.negative) {
      throw StructureMismatch("underlying multigraphs differ");
    }
  }

  const auto n = static_cast<std::size_t>(g1.n());
  std::vector<std::vector<std::pair<int, int>>> constraints(n);  // (other, parity)
  for (const auto& [pair, a] : c1) {
    const PairCounts& b = c2.at(pair);
    const auto [u, v] = pair;
    const bool same = a.positive == b.positive;
    const bool swapped = a.positive == b.negative;
    if (u == v) {
      if (!same) return std::nullopt;
      continue;
    }
    if (same && swapped) continue;
    if (!same && !swapped) return std::nullopt;
    const int parity = same ? 0 : 1;
    constraints[u].emplace_back(v, parity);
    constraints[v].emplace_back(u, parity);
  }

  std::vector<int> value(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (value[root] != -1) continue;
    value[root] = 0;
    std::queue<int> queue;
    queue.push(static_cast<int>(root));
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (const auto& [y, parity] : constraints[x]) {
        const int want = value[x] ^ parity;
        if (value[y] == -1) {
          value[y] = want;
          queue.push(y);
        } else if (value[y] != want) {
          return std::nullopt;
        }
      }
    }
  }

  std::vector<int> members;
  for (std::size_t v = 0; v < n; ++v) {
    if (value[v] == 1) members.push_back(static_cast<int>(v));
  }
  SwitchSet s(std::move(members));
  if (!(switching(g1, s) == g2)) return std::nullopt;
  return s;
}

bool is_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
  return equivalence_witness(g1, g2).has_value();
}

std::optional<std::vector<int>> bipartition(const SignedGraph& g) {
  const auto inc = g.incidence();
  std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
  for (int root = 0; root < g.n(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (const Incidence& i : inc[x]) {
        if (i.neighbor == x) return std::nullopt;
        if (side[i.neighbor] == -1) {
          side[i.neighbor] = 1 - side[x];
          queue.push(i.neighbor);
        } else if (side[i.neighbor] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const SignedGraph& g) { return bipartition(g).has_value(); }

std::vector<int> degeneracy_order(const SignedGraph& g, int k) {
  if (k < 0) throw InvalidArgument("degeneracy bound must be non-negative");
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  std::vector<int> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<bool> removed(n, false);
  std::vector<int> deletion;
  deletion.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (int v = static_cast<int>(n) - 1; v >= 0; --v) {
      if (!removed[v] && (best == -1 || degree[v] < degree[best])) best = v;
    }
    if (degree[best] > k) throw NotDegenerate(k);
    removed[best] = true;
    deletion.push_back(best);
    for (int w : adj[best]) {
      if (!removed[w]) --degree[w];
    }
  }
  std::reverse(deletion.begin(), deletion.end());
  return deletion;
}

bool is_degeneracy_order(const SignedGraph& g, std::span<const int> order, int k) {
  const auto n = static_cast<std::size_t>(g.n());
  if (order.size() != n) return false;
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    if (v < 0 || v >= g.n() || position[v] != -1) return false;
    position[v] = static_cast<int>(i);
  }
  for (int v = 0; v < g.n(); ++v) {
    int earlier = 0;
    for (int w : g.neighbors(v)) {
      if (position[w] < position[v]) ++earlier;
    }
    if (earlier > k) return false;
  }
  return true;
}

Simplified simplify(const SignedGraph& g) {
  Simplified out;
  out.graph = SignedGraph(g.n());
  std::vector<Edge> seen = g.edges();
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (const Edge& e : seen) {
    out.graph.add_edge(e.u, e.v, e.sign);
    if (e.is_loop()) {
      (e.sign == Sign::positive ? out.has_positive_loop : out.has_negative_loop) = true;
    }
  }
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].u == seen[i - 1].u && seen[i].v == seen[i - 1].v && !seen[i].is_loop()) {
      out.has_digon = true;
    }
  }
  return out;
}

bool is_forest(const SignedGraph& g) {
  if (!g.is_simple()) return false;
  std::vector<int> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

SignedGraph without_edges_at(const SignedGraph& g, std::span<const int> removed) {
  std::vector<bool> keep(static_cast<std::size_t>(g.n()), true);
  for (int v : removed) {
    if (v < 0 || v >= g.n()) throw IndexError("vertex " + std::to_string(v) + " out of range");
    keep[v] = false;
  }
  return restricted_to(g, keep);
}

SignedGraph restricted_to(const SignedGraph& g, const std::vector<bool>& keep) {
  SignedGraph out(g.n());
  for (const Edge& e : g.edges()) {
    if (keep.at(e.u) && keep.at(e.v)) out.add_edge(e.u, e.v, e.sign);
  }
  return out;
}

}  // namespace sigcolor
