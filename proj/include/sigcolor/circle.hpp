#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sigcolor/rational.hpp"
#include "sigcolor/signed_graph.hpp"

namespace sigcolor {

/// Shortest arc length between a and b on a circle of circumference r.
/// Throws OutOfRange unless both points lie in [0, r).
Rational circ_dist(const Rational& r, const Rational& a, const Rational& b);

/// (a + r/2) mod r. Throws OutOfRange unless a lies in [0, r).
Rational antipodal(const Rational& r, const Rational& a);

/// A circumference r >= 1 and a point of [0, r) per vertex.
struct Coloring {
  Rational r;
  std::vector<Rational> f;

  Coloring() = default;
  /// Reduces every point into [0, r). Throws BadRadius if r < 1.
  Coloring(Rational radius, std::vector<Rational> points);

  std::size_t size() const { return f.size(); }
};

struct Violation {
  std::size_t edge_index = 0;
  Edge edge;
  std::string reason;
  /// Constraint distance minus 1; negative for a violated edge.
  Rational slack;
};

struct VerifyResult {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

enum class Metric {
  circle,    // arc distance to the neighbour (positive) or its antipode (negative)
  interval,  // |f(u) - f(v)| window form on [0, r)
};

/// Distance that the edge constraint bounds below by 1: arc distance for a
/// positive edge, arc distance to the antipode for a negative one.
Rational constraint_distance(const Rational& r, const Rational& fu, const Rational& fv, Sign sign);

bool edge_satisfied(const Rational& r, const Rational& fu, const Rational& fv, Sign sign, Metric metric);

/// Checks every edge under one metric; reports the first violated edge.
VerifyResult verify_coloring(const SignedGraph& g, const Coloring& c, Metric metric);

/// Checks every edge under the circle metric and cross-checks the interval
/// form; a disagreement between the two is a logic_error. Throws
/// DomainMismatch if c does not cover exactly the vertices of g.
VerifyResult verify_coloring(const SignedGraph& g, const Coloring& c);

Coloring rotate(const Coloring& c, const Rational& delta);
/// a -> (r - a) mod r, the reflection in the diameter through 0.
Coloring reflect(const Coloring& c);

/// Constants of the scale-and-insert step for a (4 - eps)-coloring.
struct TransformParams {
  Rational eps;
  Rational gamma;  // (4 - eps/2) / (4 - eps)
  Rational cut;    // 1 - eps/8, insertion point on the scaled circle

  /// Throws EpsOutOfRange unless 0 < eps < 2.
  explicit TransformParams(Rational epsilon);

  Rational source_radius() const { return Rational(4) - eps; }
  Rational target_radius() const { return Rational(4) - eps / 4; }
  Rational map_point(const Rational& p) const;
};

/// Maps a (4 - eps)-coloring to a (4 - eps/4)-coloring: scale every point by
/// gamma, then shift points at or beyond the insertion point 1 - eps/8 by
/// eps/4. Validity on any signed graph is preserved; 0 is fixed and equal
/// points stay equal. Throws EpsOutOfRange unless 2 < c.r < 4.
Coloring transform_4eps(const Coloring& c);

}  // namespace sigcolor
