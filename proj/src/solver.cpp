#include "sigcolor/solver.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "sigcolor/errors.hpp"

namespace sigcolor {
namespace {

using Word = std::uint64_t;
constexpr int kWordBits = 64;

// Allowed-color bitsets per grid point: pos(c) holds every j that may sit at
// the other end of a positive edge from c, neg(c) the same for negative edges.
class AdjacencyMasks {
 public:
  explicit AdjacencyMasks(const SignedCircularClique& k)
      : p_(k.p()), words_((k.p() + kWordBits - 1) / kWordBits) {
    pos_.assign(static_cast<std::size_t>(p_) * words_, 0);
    neg_.assign(static_cast<std::size_t>(p_) * words_, 0);
    for (int c = 0; c < p_; ++c) {
      for (int j = 0; j < p_; ++j) {
        if (k.positive_adjacent(c, j)) pos_[c * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
        if (k.negative_adjacent(c, j)) neg_[c * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
      }
    }
  }

  int p() const { return p_; }
  int words() const { return words_; }
  const Word* mask(int color, Sign s) const {
    return (s == Sign::positive ? pos_ : neg_).data() + static_cast<std::size_t>(color) * words_;
  }

 private:
  int p_;
  int words_;
  std::vector<Word> pos_;
  std::vector<Word> neg_;
};

struct Component {
  std::vector<int> vertices;  // global ids
  std::vector<std::vector<std::pair<int, Sign>>> adj;  // local ids, loops excluded
};

std::vector<Component> components_of(const SignedGraph& simple) {
  const auto n = static_cast<std::size_t>(simple.n());
  const auto inc = simple.incidence();
  std::vector<int> comp_of(n, -1);
  std::vector<int> local(n, -1);
  std::vector<Component> out;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp_of[root] != -1) continue;
    Component comp;
    const int id = static_cast<int>(out.size());
    std::queue<int> queue;
    queue.push(static_cast<int>(root));
    comp_of[root] = id;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      local[x] = static_cast<int>(comp.vertices.size());
      comp.vertices.push_back(x);
      for (const Incidence& i : inc[x]) {
        if (comp_of[i.neighbor] == -1) {
          comp_of[i.neighbor] = id;
          queue.push(i.neighbor);
        }
      }
    }
    comp.adj.resize(comp.vertices.size());
    for (std::size_t lv = 0; lv < comp.vertices.size(); ++lv) {
      for (const Incidence& i : inc[comp.vertices[lv]]) {
        if (i.neighbor != comp.vertices[lv]) comp.adj[lv].emplace_back(local[i.neighbor], i.sign);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Smallest-last rank: vertices that survive longest under repeated
// minimum-degree deletion come first.
std::vector<int> degeneracy_rank(const Component& comp) {
  const std::size_t n = comp.vertices.size();
  std::vector<std::vector<int>> nbrs(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& [w, s] : comp.adj[v]) nbrs[v].push_back(w);
    std::sort(nbrs[v].begin(), nbrs[v].end());
    nbrs[v].erase(std::unique(nbrs[v].begin(), nbrs[v].end()), nbrs[v].end());
  }
  std::vector<int> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = static_cast<int>(nbrs[v].size());
  std::vector<bool> removed(n, false);
  std::vector<int> rank(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (best == -1 || degree[v] < degree[best])) best = static_cast<int>(v);
    }
    removed[best] = true;
    rank[best] = static_cast<int>(n - 1 - step);
    for (int w : nbrs[best]) {
      if (!removed[w]) --degree[w];
    }
  }
  return rank;
}

// Backtracking with forward checking and dynamic minimum-remaining-values
// ordering. The first vertex is fixed to 0 (rotation) and the second is
// restricted to [0, p/2] (reflection in the diameter through 0).
class ComponentSearch {
 public:
  ComponentSearch(const AdjacencyMasks& masks, const Component& comp)
      : masks_(masks),
        comp_(comp),
        n_(comp.vertices.size()),
        words_(masks.words()),
        rank_(degeneracy_rank(comp)),
        color_(n_, -1),
        domains_((n_ + 1) * n_ * words_, 0) {
    for (std::size_t v = 0; v < n_; ++v) {
      Word* d = domain(0, v);
      for (int c = 0; c < masks_.p(); ++c) d[c / kWordBits] |= Word{1} << (c % kWordBits);
    }
  }

  bool run() { return dfs(0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  Word* domain(std::size_t depth, std::size_t v) {
    return domains_.data() + (depth * n_ + v) * words_;
  }

  int popcount(const Word* d) const {
    int total = 0;
    for (int w = 0; w < words_; ++w) total += std::popcount(d[w]);
    return total;
  }

  int free_neighbors(std::size_t v) const {
    int total = 0;
    for (const auto& [w, s] : comp_.adj[v]) total += color_[w] == -1 ? 1 : 0;
    return total;
  }

  bool dfs(std::size_t depth) {
    if (depth == n_) return true;
    std::size_t best = n_;
    int best_size = 0;
    int best_free = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] != -1) continue;
      const int size = popcount(domain(depth, v));
      const int free = free_neighbors(v);
      if (best == n_ || size < best_size || (size == best_size && free > best_free) ||
          (size == best_size && free == best_free && rank_[v] < rank_[best])) {
        best = v;
        best_size = size;
        best_free = free;
      }
    }

    int limit = masks_.p() - 1;
    if (depth == 0) limit = 0;
    if (depth == 1) limit = masks_.p() / 2;

    const Word* current = domain(depth, best);
    for (int c = 0; c <= limit; ++c) {
      if (!(current[c / kWordBits] >> (c % kWordBits) & 1)) continue;
      std::copy(domain(depth, 0), domain(depth, 0) + n_ * words_, domain(depth + 1, 0));
      color_[best] = c;
      bool wiped = false;
      for (const auto& [w, s] : comp_.adj[best]) {
        if (color_[w] != -1) continue;
        Word* d = domain(depth + 1, w);
        const Word* m = masks_.mask(c, s);
        Word any = 0;
        for (int i = 0; i < words_; ++i) any |= (d[i] &= m[i]);
        if (any == 0) {
          wiped = true;
          break;
        }
      }
      if (!wiped && dfs(depth + 1)) return true;
      color_[best] = -1;
    }
    return false;
  }

  const AdjacencyMasks& masks_;
  const Component& comp_;
  std::size_t n_;
  int words_;
  std::vector<int> rank_;
  std::vector<int> color_;
  std::vector<Word> domains_;
};

Coloring forest_witness(const SignedGraph& g) {
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
        if (side[i.neighbor] != -1) continue;
        side[i.neighbor] = i.sign == Sign::positive ? 1 - side[x] : side[x];
        queue.push(i.neighbor);
      }
    }
  }
  std::vector<Rational> points;
  for (int s : side) points.emplace_back(s);
  return {Rational(2), std::move(points)};
}

long to_long(const std::string& digits) { return std::stol(digits); }

}  // namespace

SignedCircularClique::SignedCircularClique(int p, int q) : p_(p), q_(q) {
  if (p < 2 || p % 2 != 0 || q < 1) {
    throw InvalidArgument("circular clique needs even p >= 2 and q >= 1, got (" +
                          std::to_string(p) + ", " + std::to_string(q) + ")");
  }
}

int SignedCircularClique::cyclic_distance(int i, int j) const {
  const int d = ((i - j) % p_ + p_) % p_;
  return std::min(d, p_ - d);
}

std::vector<Candidate> candidate_values(const SignedGraph& g, int numerator_limit,
                                        int grid_multiplier) {
  if (grid_multiplier < 1) throw InvalidArgument("grid multiplier must be positive");
  const int limit = numerator_limit > 0 ? numerator_limit : 2 * g.n();
  std::set<Rational> values;
  for (int p = 2; p <= limit; p += 2) {
    for (int q = 1; 2 * q <= p; ++q) values.insert(Rational(p, q));
  }
  std::vector<Candidate> out;
  out.reserve(values.size());
  for (const Rational& v : values) {
    long a = to_long(v.numerator_str());
    long b = to_long(v.denominator_str());
    if (a % 2 != 0) {
      a *= 2;
      b *= 2;
    }
    out.push_back({v, static_cast<int>(a * grid_multiplier), static_cast<int>(b * grid_multiplier)});
  }
  return out;
}

std::optional<Coloring> hom_witness(const SignedGraph& g, const SignedCircularClique& k) {
  const Simplified simple = simplify(g);
  if (simple.has_positive_loop) return std::nullopt;
  if (simple.has_negative_loop && !k.negative_adjacent(0, 0)) return std::nullopt;

  const AdjacencyMasks masks(k);
  std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
  for (const Component& comp : components_of(simple.graph)) {
    ComponentSearch search(masks, comp);
    if (!search.run()) return std::nullopt;
    for (std::size_t lv = 0; lv < comp.vertices.size(); ++lv) {
      color[comp.vertices[lv]] = search.colors()[lv];
    }
  }

  std::vector<Rational> points;
  points.reserve(color.size());
  for (int c : color) points.emplace_back(c, k.q());
  Coloring witness(k.value(), std::move(points));
  const VerifyResult check = verify_coloring(g, witness);
  if (!check.ok()) {
    throw std::logic_error("grid witness failed verification: " + check.violation->reason);
  }
  return witness;
}

bool is_hom_feasible(const SignedGraph& g, const SignedCircularClique& k) {
  return hom_witness(g, k).has_value();
}

ChiResult chi_c(const SignedGraph& g, const SolverOptions& options) {
  ChiResult out;
  if (g.has_positive_loop()) {
    out.infinite = true;
    return out;
  }
  if (g.m() == 0) {
    out.value = Rational(1);
    out.p = 1;
    out.q = 1;
    out.witness = Coloring(Rational(1), std::vector<Rational>(g.n(), Rational(0)));
    return out;
  }
  if (is_forest(g)) {
    out.value = Rational(2);
    out.p = 2;
    out.q = 1;
    out.witness = forest_witness(g);
    return out;
  }

  const std::vector<Candidate> candidates =
      candidate_values(g, options.numerator_limit, options.grid_multiplier);
  const std::size_t batch = static_cast<std::size_t>(std::max(1, options.jobs));
  for (std::size_t start = 0; start < candidates.size(); start += batch) {
    const std::size_t stop = std::min(candidates.size(), start + batch);
    std::vector<std::optional<Coloring>> results(stop - start);
    if (batch == 1) {
      results[0] = hom_witness(g, SignedCircularClique(candidates[start].p, candidates[start].q));
    } else {
      std::vector<std::future<std::optional<Coloring>>> futures;
      for (std::size_t i = start; i < stop; ++i) {
        const Candidate& cand = candidates[i];
        futures.push_back(std::async(std::launch::async, [&g, cand] {
          return hom_witness(g, SignedCircularClique(cand.p, cand.q));
        }));
      }
      for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i]) continue;
      const Candidate& cand = candidates[start + i];
      out.value = cand.value;
      out.p = cand.p;
      out.q = cand.q;
      out.witness = std::move(results[i]);
      return out;
    }
  }
  throw InvalidArgument("no candidate up to numerator " + std::to_string(options.numerator_limit) +
                        " is feasible");
}

namespace {

struct CycleSearch {
  const SignedGraph& g;
  const Coloring& c;
  std::vector<std::vector<Incidence>> tight_inc;
  std::vector<int> path_vertices;
  std::vector<std::size_t> path_edges;
  std::vector<bool> on_path;
  std::optional<TightCycle> found;
  long budget = 2'000'000;

  TightCycle evaluate(const std::vector<int>& vertices, const std::vector<std::size_t>& edges) const {
    TightCycle cyc;
    cyc.vertices = vertices;
    cyc.edges = edges;
    Rational total(0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = g.edge(edges[i]);
      const Rational inc = mod(c.f[vertices[i + 1]] - c.f[vertices[i]], c.r);
      cyc.increments.push_back(inc);
      total += inc;
      const bool positive = e.sign == Sign::positive;
      (positive ? cyc.positive_edges : cyc.negative_edges) += 1;
      // inc = unit + k r/2 with unit = +-1 and k even (positive) or odd (negative).
      bool decomposed = false;
      for (int unit : {1, -1}) {
        const Rational k = (inc - unit) * 2 / c.r;
        if (!k.is_integer()) continue;
        const long kk = k.floor_long();
        if ((kk % 2 == 0) != positive) continue;
        cyc.unit_sum += unit;
        cyc.half_turns += static_cast<int>(kk);
        decomposed = true;
        break;
      }
      if (!decomposed) throw std::logic_error("tight edge increment has no unit decomposition");
    }
    const Rational m = total / c.r;
    if (!m.is_integer()) throw std::logic_error("closed walk increments are not a multiple of r");
    cyc.winding = static_cast<int>(m.floor_long());
    cyc.a = (2 * cyc.winding - cyc.half_turns - cyc.negative_edges) / 2;
    const int denom = 2 * cyc.winding - cyc.half_turns;
    if (cyc.unit_sum != 0 && denom != 0) cyc.recovered_r = Rational(2L * cyc.unit_sum, denom);
    return cyc;
  }

  void consider() {
    TightCycle cyc = evaluate(path_vertices, path_edges);
    if (cyc.unit_sum == 0) return;
    if (cyc.unit_sum < 0) {
      std::vector<int> rv(path_vertices.rbegin(), path_vertices.rend());
      std::vector<std::size_t> re(path_edges.rbegin(), path_edges.rend());
      cyc = evaluate(rv, re);
    }
    found = std::move(cyc);
  }

  void dfs(int start, int x) {
    if (found || --budget < 0) return;
    for (const Incidence& i : tight_inc[x]) {
      if (found) return;
      if (i.neighbor == start) {
        if (!path_edges.empty() && i.edge == path_edges.back() && path_edges.size() == 1) continue;
        path_vertices.push_back(start);
        path_edges.push_back(i.edge);
        consider();
        path_vertices.pop_back();
        path_edges.pop_back();
      } else if (i.neighbor > start && !on_path[i.neighbor]) {
        on_path[i.neighbor] = true;
        path_vertices.push_back(i.neighbor);
        path_edges.push_back(i.edge);
        dfs(start, i.neighbor);
        path_vertices.pop_back();
        path_edges.pop_back();
        on_path[i.neighbor] = false;
      }
    }
  }
};

}  // namespace

TightnessReport analyze_tightness(const SignedGraph& g, const Coloring& c) {
  const VerifyResult check = verify_coloring(g, c);
  if (!check.ok()) throw InvalidColoring(check.violation->reason);

  TightnessReport report;
  CycleSearch search{g, c, std::vector<std::vector<Incidence>>(static_cast<std::size_t>(g.n())),
                     {}, {}, std::vector<bool>(static_cast<std::size_t>(g.n()), false), std::nullopt};
  for (std::size_t i = 0; i < g.m(); ++i) {
    const Edge& e = g.edge(i);
    if (constraint_distance(c.r, c.f[e.u], c.f[e.v], e.sign) != Rational(1)) continue;
    report.tight_edges.push_back(i);
    search.tight_inc[e.u].push_back({i, e.v, e.sign});
    if (!e.is_loop()) search.tight_inc[e.v].push_back({i, e.u, e.sign});
  }
  for (int start = 0; start < g.n() && !search.found; ++start) {
    search.path_vertices = {start};
    search.path_edges.clear();
    search.on_path[start] = true;
    search.dfs(start, start);
    search.on_path[start] = false;
  }
  report.cycle = std::move(search.found);
  return report;
}

}  // namespace sigcolor
