#include "sigcolor/bounds.hpp"

#include "sigcolor/errors.hpp"

namespace sigcolor {
namespace {

void require_at_least(int n, int lo) {
  if (n < lo) throw InvalidArgument("n must be at least " + std::to_string(lo));
}

void require_x_at_least_one(const Rational& x) {
  if (x < Rational(1)) throw InvalidArgument("circular chromatic number below 1: " + x.str());
}

}  // namespace

Rational bound_2degenerate(int n) {
  require_at_least(n, 1);
  return Rational(4) - Rational(2, (n + 1) / 2);
}

Rational bound_2degenerate_by_parity(int n) {
  require_at_least(n, 1);
  return n % 2 == 1 ? Rational(4) - Rational(4, n + 1) : Rational(4) - Rational(4, n);
}

Rational bound_bipartite_planar(int n) {
  require_at_least(n, 2);
  return Rational(4) - Rational(4, (n + 2) / 2);
}

Rational bound_bipartite_planar_by_parity(int n) {
  require_at_least(n, 2);
  return n % 2 == 1 ? Rational(4) - Rational(8, n + 1) : Rational(4) - Rational(8, n + 2);
}

MaxMinResult maxmin_verify(int n, GraphClass cls) {
  MaxMinResult best;
  if (cls == GraphClass::two_degenerate) {
    require_at_least(n, 1);
    for (int q = 1; q <= 2 * n; ++q) {
      const Rational v = min(Rational(2 * n, q), Rational(4) - Rational(2, q));
      if (best.q_star == 0 || v > best.value) {
        best.q_star = q;
        best.value = v;
      }
    }
    return best;
  }
  require_at_least(n, 2);
  for (int k = 1; 2 * k <= n; ++k) {
    for (int q = 1; q <= 2 * n; ++q) {
      if (4 * k >= 4 * q) continue;
      const Rational v(4 * k, q);
      if (best.q_star == 0 || v > best.value) {
        best.k_star = k;
        best.q_star = q;
        best.value = v;
      }
    }
  }
  return best;
}

Rational sg_formula(const Rational& x) {
  require_x_at_least_one(x);
  return Rational(4) - Rational(4) / (x + 1);
}

Rational t2_formula(const Rational& x) {
  require_x_at_least_one(x);
  return Rational(4) * x / (x + 2);
}

}  // namespace sigcolor
