#pragma once

#include <string_view>
#include <vector>

#include "sigcolor/signed_graph.hpp"

namespace sigcolor {

/// Result of contracting every edge at a vertex.
struct Contraction {
  SignedGraph graph;   // simplified
  int z = 0;           // the vertex the closed neighbourhood N[u] became
  std::vector<int> image;  // image[v] = vertex of graph that v maps to
  bool has_positive_loop = false;
  bool has_negative_loop = false;
  bool has_digon = false;
};

/// F_u: merges N[u] into a single vertex z, keeping the signs of all edges
/// not incident with u. Vertices outside N[u] keep their relative order and
/// are renumbered 0..k-1; z = k. Edges inside N(u) become loops at z;
/// same-sign parallels are collapsed. A positive loop means chi_c is infinite.
Contraction f_u(const SignedGraph& g, int u);

/// Vertex ids of the four vertices f_uv appends.
struct FuvVertices {
  int u_copy;
  int v_copy;
  int x;
  int y;
};

FuvVertices fuv_vertices(const SignedGraph& g);

/// F_uv: appends u' (a copy of u), then v' (a copy of v in the graph that
/// already contains u', so v' sees u and u'), then x and y with xu, yv
/// positive and xu', yv', xy negative. Throws NonSimpleInput, NotPositiveEdge.
SignedGraph f_uv(const SignedGraph& g, int u, int v);

/// S(G): each edge uv becomes the 4-cycle u-a-v-b-u with bu the only
/// negative edge (a = n + 2i, b = n + 2i + 1 for the i-th edge). Edge signs of
/// the input are ignored. Throws NonSimpleInput.
SignedGraph s_of(const SignedGraph& g);

/// T_2: each edge uv becomes u-w-v through w = n + i; uw is negative iff uv
/// is positive and wv is positive, so the path has sign -sign(uv).
/// Throws NonSimpleInput.
SignedGraph t2_of(const SignedGraph& g);

/// Omega_i on 2i+1 vertices (v_1 is vertex 0). Omega_1 = (K_3, +); each step
/// adds a copy of the last vertex and a new vertex joined negatively to the
/// last vertex and positively to its copy. Throws InvalidArgument for i < 1.
SignedGraph omega(int i);

/// Gamma*_i on 2i vertices: Omega_{i-1} with v_1v_2 subdivided by the new last
/// vertex s, v_1 s positive and s v_2 negative. Throws InvalidArgument for i < 2.
SignedGraph gamma_star(int i);

SignedGraph complete(int n, Sign sign);

/// Cycle 0-1-...-(n-1)-0 whose i-th edge (i, i+1 mod n) has pattern[i] as sign.
/// Pattern characters: '+'/'p' positive, '-'/'n' negative.
SignedGraph cycle(int n, std::string_view pattern);

}  // namespace sigcolor
