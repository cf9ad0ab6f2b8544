#pragma once

#include "sigcolor/rational.hpp"

namespace sigcolor {

enum class GraphClass { two_degenerate, bipartite_planar };

/// 4 - 2 / floor((n+1)/2), for signed 2-degenerate simple graphs on n vertices.
Rational bound_2degenerate(int n);
/// Odd/even case split of the same bound: 4 - 4/(n+1) for odd n, 4 - 4/n for even n.
Rational bound_2degenerate_by_parity(int n);

/// 4 - 4 / floor((n+2)/2), for signed bipartite planar simple graphs (n >= 2).
Rational bound_bipartite_planar(int n);
/// 4 - 8/(n+1) for odd n, 4 - 8/(n+2) for even n.
Rational bound_bipartite_planar_by_parity(int n);

struct MaxMinResult {
  int q_star = 0;  // maximising denominator
  int k_star = 0;  // bipartite planar only: half the cycle length, numerator 4k
  Rational value;
};

/// Brute-force maximisation behind each bound. For the 2-degenerate class:
/// max over q in 1..2n of min(2n/q, 4 - 2/q). For the bipartite planar class:
/// max of 4k/q over 1 <= k <= n/2 and q with 4k/q < 4. The smallest optimiser
/// is reported.
MaxMinResult maxmin_verify(int n, GraphClass cls);

/// Circular chromatic number of S(G) from that of G: 4 - 4/(x+1).
Rational sg_formula(const Rational& x);

/// Circular chromatic number of T_2(G) from that of G: 4x/(2+x).
Rational t2_formula(const Rational& x);

}  // namespace sigcolor
