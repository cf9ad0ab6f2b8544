#pragma once

#include "sigcolor/circle.hpp"
#include "sigcolor/signed_graph.hpp"

namespace sigcolor {

/// A coloring certificate: `coloring` is valid for switching(g, switch_set).
struct Certificate {
  SwitchSet switch_set;
  Coloring coloring;
};

/// Re-verifies a certificate against g.
VerifyResult verify_certificate(const SignedGraph& g, const Certificate& cert);

/// Extends a coloring of g - w to g, where w has at most two neighbours.
///
/// `c` has one point per vertex of g; the point of w is ignored and c must be
/// valid on g with the edges at w removed, at a radius r with 2 < r < 4.
/// Negative edges at w are made positive by switching at the neighbour and
/// moving it to its antipode. With neighbours u and v, the coloring is
/// rotated to put u at 0 and reflected to put v in [r/2, r); if v >= 2 then
/// w = 1 at the same radius, otherwise the coloring is pushed through
/// transform_4eps first and the radius becomes 4 - eps/4.
///
/// Throws NonSimpleInput, BadRadius, InvalidInputColoring, InvalidArgument
/// (degree of w above 2).
Certificate extend_degree2(const SignedGraph& g, int w, const Coloring& c);

/// Colors a simple 2-degenerate signed graph at some radius below 4, inserting
/// vertices in degeneracy order. Starts at r = 3; a vertex is placed directly
/// when a feasible point exists at the current radius and via
/// extend_degree2 otherwise. Throws NonSimpleInput, NotDegenerate.
Certificate color_2degenerate(const SignedGraph& g);

/// Lifts a coloring of F_u(g) (at 2 < r < 4) to a certificate for g at radius
/// 4 - eps/4. The switch set is the set of negative neighbours of u.
/// Throws PositiveLoopInContraction, InvalidInputColoring, BadRadius, and
/// NonSimpleInput when u carries a loop or a digon.
Certificate lift_fu(const SignedGraph& g, int u, const Coloring& c);

/// Lifts a coloring of g (at 2 < r < 4) to a coloring of f_uv(g, u, v) at
/// radius 4 - eps/4. Throws NotPositiveEdge, NonSimpleInput,
/// InvalidInputColoring, BadRadius.
Coloring lift_fuv(const SignedGraph& g, int u, int v, const Coloring& c);

}  // namespace sigcolor
