#include "sigcolor/circle.hpp"

#include <stdexcept>
#include <utility>

#include "sigcolor/errors.hpp"

namespace sigcolor {
namespace {

void check_point(const Rational& r, const Rational& a) {
  if (a.sign() < 0 || a >= r) {
    throw OutOfRange("point " + a.str() + " outside [0, " + r.str() + ")");
  }
}

std::string describe(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v) + sign_char(e.sign);
}

}  // namespace

Rational circ_dist(const Rational& r, const Rational& a, const Rational& b) {
  check_point(r, a);
  check_point(r, b);
  const Rational d = abs(a - b);
  return min(d, r - d);
}

Rational antipodal(const Rational& r, const Rational& a) {
  check_point(r, a);
  return mod(a + r / 2, r);
}

Coloring::Coloring(Rational radius, std::vector<Rational> points)
    : r(std::move(radius)), f(std::move(points)) {
  if (r < Rational(1)) throw BadRadius("circumference " + r.str() + " is below 1");
  for (Rational& p : f) p = mod(p, r);
}

Rational constraint_distance(const Rational& r, const Rational& fu, const Rational& fv, Sign sign) {
  return sign == Sign::positive ? circ_dist(r, fu, fv) : circ_dist(r, fu, antipodal(r, fv));
}

bool edge_satisfied(const Rational& r, const Rational& fu, const Rational& fv, Sign sign,
                    Metric metric) {
  if (metric == Metric::circle) return constraint_distance(r, fu, fv, sign) >= Rational(1);
  check_point(r, fu);
  check_point(r, fv);
  const Rational d = abs(fu - fv);
  if (sign == Sign::positive) return Rational(1) <= d && d <= r - 1;
  const Rational half = r / 2;
  return d <= half - 1 || d >= half + 1;
}

VerifyResult verify_coloring(const SignedGraph& g, const Coloring& c, Metric metric) {
  if (c.f.size() != static_cast<std::size_t>(g.n())) {
    throw DomainMismatch("coloring has " + std::to_string(c.f.size()) + " points for " +
                         std::to_string(g.n()) + " vertices");
  }
  for (std::size_t i = 0; i < g.m(); ++i) {
    const Edge& e = g.edge(i);
    if (edge_satisfied(c.r, c.f[e.u], c.f[e.v], e.sign, metric)) continue;
    Violation v;
    v.edge_index = i;
    v.edge = e;
    v.slack = constraint_distance(c.r, c.f[e.u], c.f[e.v], e.sign) - 1;
    v.reason = "edge " + describe(e) + " has slack " + v.slack.str();
    return {std::move(v)};
  }
  return {};
}

VerifyResult verify_coloring(const SignedGraph& g, const Coloring& c) {
  VerifyResult by_circle = verify_coloring(g, c, Metric::circle);
  const VerifyResult by_interval = verify_coloring(g, c, Metric::interval);
  if (by_circle.ok() != by_interval.ok() ||
      (!by_circle.ok() && by_circle.violation->edge_index != by_interval.violation->edge_index)) {
    throw std::logic_error("circle and interval forms of the coloring rule disagree");
  }
  return by_circle;
}

Coloring rotate(const Coloring& c, const Rational& delta) {
  std::vector<Rational> points;
  points.reserve(c.f.size());
  for (const Rational& p : c.f) points.push_back(mod(p + delta, c.r));
  return {c.r, std::move(points)};
}

Coloring reflect(const Coloring& c) {
  std::vector<Rational> points;
  points.reserve(c.f.size());
  for (const Rational& p : c.f) points.push_back(mod(c.r - p, c.r));
  return {c.r, std::move(points)};
}

TransformParams::TransformParams(Rational epsilon) : eps(std::move(epsilon)) {
  if (eps.sign() <= 0 || eps >= Rational(2)) {
    throw EpsOutOfRange("eps " + eps.str() + " outside (0, 2)");
  }
  gamma = (Rational(4) - eps / 2) / (Rational(4) - eps);
  cut = Rational(1) - eps / 8;
  if (gamma != Rational(1) + eps / (Rational(8) - eps * 2)) {
    throw std::logic_error("scale factor closed forms disagree");
  }
}

Rational TransformParams::map_point(const Rational& p) const {
  const Rational scaled = gamma * p;
  return scaled < cut ? scaled : scaled + eps / 4;
}

Coloring transform_4eps(const Coloring& c) {
  const TransformParams params(Rational(4) - c.r);
  std::vector<Rational> points;
  points.reserve(c.f.size());
  for (const Rational& p : c.f) points.push_back(params.map_point(p));
  return {params.target_radius(), std::move(points)};
}

}  // namespace sigcolor
