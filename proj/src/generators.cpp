#include "sigcolor/generators.hpp"

#include <string>

#include "sigcolor/errors.hpp"

namespace sigcolor {
namespace {

void require_simple(const SignedGraph& g, const char* op) {
  if (!g.is_simple()) throw NonSimpleInput(std::string(op) + " requires a simple graph");
}

void check_vertex(const SignedGraph& g, int v) {
  if (v < 0 || v >= g.n()) throw IndexError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Contraction f_u(const SignedGraph& g, int u) {
  check_vertex(g, u);
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<bool> closed(n, false);
  closed[u] = true;
  for (int w : g.neighbors(u)) closed[w] = true;

  Contraction out;
  out.image.assign(n, -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!closed[v]) out.image[v] = next++;
  }
  out.z = next;
  for (std::size_t v = 0; v < n; ++v) {
    if (closed[v]) out.image[v] = out.z;
  }

  SignedGraph merged(next + 1);
  for (const Edge& e : g.edges()) {
    if ((e.u == u || e.v == u) && !e.is_loop()) continue;  // contracted
    merged.add_edge(out.image[e.u], out.image[e.v], e.sign);
  }
  Simplified s = simplify(merged);
  out.graph = std::move(s.graph);
  out.has_positive_loop = s.has_positive_loop;
  out.has_negative_loop = s.has_negative_loop;
  out.has_digon = s.has_digon;
  return out;
}

FuvVertices fuv_vertices(const SignedGraph& g) {
  return {g.n(), g.n() + 1, g.n() + 2, g.n() + 3};
}

SignedGraph f_uv(const SignedGraph& g, int u, int v) {
  require_simple(g, "F_uv");
  check_vertex(g, u);
  check_vertex(g, v);
  bool positive_uv = false;
  bool any_uv = false;
  for (const Edge& e : g.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
      any_uv = true;
      positive_uv = e.sign == Sign::positive;
    }
  }
  if (!any_uv || !positive_uv) {
    throw NotPositiveEdge(std::to_string(u) + "-" + std::to_string(v) + " is not a positive edge");
  }

  const FuvVertices ids = fuv_vertices(g);
  SignedGraph out = g;
  auto copy_vertex = [&out](int original) {
    const int copy = out.add_vertex();
    const std::vector<Edge> snapshot = out.edges();
    for (const Edge& e : snapshot) {
      if (e.is_loop()) continue;
      if (e.u == original && e.v != copy) out.add_edge(copy, e.v, e.sign);
      if (e.v == original && e.u != copy) out.add_edge(copy, e.u, e.sign);
    }
    return copy;
  };
  copy_vertex(u);
  copy_vertex(v);
  out.add_vertex();
  out.add_vertex();
  out.add_edge(ids.x, u, Sign::positive);
  out.add_edge(ids.y, v, Sign::positive);
  out.add_edge(ids.x, ids.u_copy, Sign::negative);
  out.add_edge(ids.y, ids.v_copy, Sign::negative);
  out.add_edge(ids.x, ids.y, Sign::negative);
  return out;
}

SignedGraph s_of(const SignedGraph& g) {
  require_simple(g, "S(G)");
  SignedGraph out(g.n() + 2 * static_cast<int>(g.m()));
  for (std::size_t i = 0; i < g.m(); ++i) {
    const Edge& e = g.edge(i);
    const int a = g.n() + 2 * static_cast<int>(i);
    const int b = a + 1;
    out.add_edge(e.u, a, Sign::positive);
    out.add_edge(a, e.v, Sign::positive);
    out.add_edge(e.v, b, Sign::positive);
    out.add_edge(b, e.u, Sign::negative);
  }
  return out;
}

SignedGraph t2_of(const SignedGraph& g) {
  require_simple(g, "T_2");
  SignedGraph out(g.n() + static_cast<int>(g.m()));
  for (std::size_t i = 0; i < g.m(); ++i) {
    const Edge& e = g.edge(i);
    const int w = g.n() + static_cast<int>(i);
    out.add_edge(e.u, w, -e.sign);
    out.add_edge(w, e.v, Sign::positive);
  }
  return out;
}

SignedGraph omega(int i) {
  if (i < 1) throw InvalidArgument("omega index must be at least 1");
  SignedGraph g = complete(3, Sign::positive);
  for (int step = 1; step < i; ++step) {
    const int last = 2 * step;  // v_{2 step + 1}
    const std::vector<Edge> snapshot = g.edges();
    const int copy = g.add_vertex();
    for (const Edge& e : snapshot) {
      if (e.u == last) g.add_edge(copy, e.v, e.sign);
      if (e.v == last) g.add_edge(copy, e.u, e.sign);
    }
    const int fresh = g.add_vertex();
    g.add_edge(last, fresh, Sign::negative);
    g.add_edge(copy, fresh, Sign::positive);
  }
  return g;
}

SignedGraph gamma_star(int i) {
  if (i < 2) throw InvalidArgument("gamma_star index must be at least 2");
  const SignedGraph base = omega(i - 1);
  SignedGraph out(base.n() + 1);
  const int s = base.n();
  for (const Edge& e : base.edges()) {
    if (e.u == 0 && e.v == 1) {
      out.add_edge(0, s, Sign::positive);
      out.add_edge(s, 1, Sign::negative);
    } else {
      out.add_edge(e.u, e.v, e.sign);
    }
  }
  return out;
}

SignedGraph complete(int n, Sign sign) {
  if (n < 1) throw InvalidArgument("complete graph needs at least one vertex");
  SignedGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b, sign);
  }
  return g;
}

SignedGraph cycle(int n, std::string_view pattern) {
  if (n < 1) throw InvalidArgument("cycle needs at least one vertex");
  if (pattern.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("sign pattern length must equal n");
  }
  SignedGraph g(n);
  for (int i = 0; i < n; ++i) {
    const char c = pattern[i];
    Sign s;
    if (c == '+' || c == 'p') {
      s = Sign::positive;
    } else if (c == '-' || c == 'n') {
      s = Sign::negative;
    } else {
      throw InvalidArgument(std::string("bad sign character '") + c + "'");
    }
    g.add_edge(i, (i + 1) % n, s);
  }
  return g;
}

}  // namespace sigcolor
