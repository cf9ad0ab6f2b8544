#include "sigcolor/constructive.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigcolor/errors.hpp"
#include "sigcolor/generators.hpp"

namespace sigcolor {
namespace {

void require_radius_below_four(const Rational& r) {
  if (r <= Rational(2) || r >= Rational(4)) {
    throw BadRadius("radius " + r.str() + " outside (2, 4)");
  }
}

void require_valid_input(const SignedGraph& g, const Coloring& c) {
  const VerifyResult check = verify_coloring(g, c);
  if (!check.ok()) throw InvalidInputColoring("input coloring: " + check.violation->reason);
}

void require_valid_output(const SignedGraph& g, const Coloring& c, const char* op) {
  const VerifyResult check = verify_coloring(g, c);
  if (!check.ok()) {
    throw std::logic_error(std::string(op) + " produced an invalid coloring: " +
                           check.violation->reason);
  }
}

// Point that edge constraints at a vertex measure distance from.
Rational constraint_center(const Rational& r, const Rational& point, Sign sign) {
  return sign == Sign::positive ? point : antipodal(r, point);
}

// Some point of the circle at distance >= 1 from every constraint center, if
// one exists. The feasible set is an intersection of closed arcs, so when it
// is non-empty it contains an endpoint center +- 1 of one of them.
std::optional<Rational> feasible_point(const Coloring& c, const std::vector<Incidence>& at) {
  std::vector<Rational> centers;
  for (const Incidence& i : at) centers.push_back(constraint_center(c.r, c.f[i.neighbor], i.sign));
  std::vector<Rational> candidates{Rational(0)};
  for (const Rational& center : centers) {
    candidates.push_back(mod(center + 1, c.r));
    candidates.push_back(mod(center - 1, c.r));
  }
  for (const Rational& p : candidates) {
    bool ok = true;
    for (const Rational& center : centers) {
      if (circ_dist(c.r, p, center) < Rational(1)) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace

VerifyResult verify_certificate(const SignedGraph& g, const Certificate& cert) {
  return verify_coloring(switching(g, cert.switch_set), cert.coloring);
}

Certificate extend_degree2(const SignedGraph& g, int w, const Coloring& c) {
  if (!g.is_simple()) throw NonSimpleInput("degree-2 extension requires a simple graph");
  if (w < 0 || w >= g.n()) throw IndexError("vertex " + std::to_string(w) + " out of range");
  require_radius_below_four(c.r);
  const std::vector<int> removed{w};
  require_valid_input(without_edges_at(g, removed), c);

  const std::vector<Incidence> at = g.incidence()[w];
  if (at.size() > 2) {
    throw InvalidArgument("vertex " + std::to_string(w) + " has degree " +
                          std::to_string(at.size()) + " > 2");
  }

  Certificate out{SwitchSet(), c};
  Coloring& col = out.coloring;
  if (at.empty()) {
    col.f[w] = Rational(0);
  } else if (at.size() == 1) {
    const Rational center = constraint_center(col.r, col.f[at[0].neighbor], at[0].sign);
    col.f[w] = mod(center + 1, col.r);
  } else {
    std::vector<int> negative;
    for (const Incidence& i : at) {
      if (i.sign == Sign::negative) {
        negative.push_back(i.neighbor);
        col.f[i.neighbor] = antipodal(col.r, col.f[i.neighbor]);
      }
    }
    out.switch_set = SwitchSet(std::move(negative));

    const int u = at[0].neighbor;
    const int v = at[1].neighbor;
    col = rotate(col, -col.f[u]);
    // With u and v on the same point any point at distance 1 works; otherwise
    // reflect v into [r/2, r).
    if (col.f[v].sign() != 0 && col.f[v] < col.r / 2) col = reflect(col);
    if (col.f[v].sign() != 0 && col.f[v] < Rational(2)) col = transform_4eps(col);
    col.f[w] = Rational(1);
  }

  require_valid_output(switching(g, out.switch_set), out.coloring, "extend_degree2");
  return out;
}

Certificate color_2degenerate(const SignedGraph& g) {
  if (!g.is_simple()) throw NonSimpleInput("2-degenerate coloring requires a simple graph");
  const std::vector<int> order = degeneracy_order(g, 2);

  Certificate cert{SwitchSet(), Coloring(Rational(3), std::vector<Rational>(g.n(), Rational(0)))};
  std::vector<bool> inserted(static_cast<std::size_t>(g.n()), false);
  for (int w : order) {
    inserted[w] = true;
    const SignedGraph current = restricted_to(switching(g, cert.switch_set), inserted);
    const std::vector<Incidence> at = current.incidence()[w];
    if (auto p = feasible_point(cert.coloring, at)) {
      cert.coloring.f[w] = *p;
      continue;
    }
    Certificate step = extend_degree2(current, w, cert.coloring);
    cert.switch_set = cert.switch_set.symmetric_difference(step.switch_set);
    cert.coloring = std::move(step.coloring);
  }

  require_valid_output(switching(g, cert.switch_set), cert.coloring, "color_2degenerate");
  return cert;
}

Certificate lift_fu(const SignedGraph& g, int u, const Coloring& c) {
  if (u < 0 || u >= g.n()) throw IndexError("vertex " + std::to_string(u) + " out of range");
  std::vector<int> positive;
  std::vector<int> negative;
  const auto incidence = g.incidence();
  for (const Incidence& i : incidence[u]) {
    if (i.neighbor == u) throw NonSimpleInput("F_u lift: loop at u");
    (i.sign == Sign::positive ? positive : negative).push_back(i.neighbor);
  }
  const SwitchSet pos_set(positive);
  const SwitchSet neg_set(negative);
  for (int x : neg_set.members()) {
    if (pos_set.contains(x)) throw NonSimpleInput("F_u lift: digon at u");
  }

  const Contraction contraction = f_u(g, u);
  if (contraction.has_positive_loop) {
    throw PositiveLoopInContraction("F_u has a positive loop, its circular chromatic number is infinite");
  }
  require_radius_below_four(c.r);
  require_valid_input(contraction.graph, c);

  const Coloring rotated = rotate(c, -c.f[contraction.z]);
  std::vector<Rational> points(static_cast<std::size_t>(g.n()));
  for (int x = 0; x < g.n(); ++x) points[x] = rotated.f[contraction.image[x]];
  for (int x : neg_set.members()) points[x] = c.r / 2;  // antipode of z, after switching at x
  for (int x : pos_set.members()) points[x] = Rational(0);
  points[u] = Rational(0);

  Certificate out{neg_set, transform_4eps(Coloring(c.r, std::move(points)))};
  out.coloring.f[u] = Rational(1);
  require_valid_output(switching(g, out.switch_set), out.coloring, "lift_fu");
  return out;
}

Coloring lift_fuv(const SignedGraph& g, int u, int v, const Coloring& c) {
  const SignedGraph expanded = f_uv(g, u, v);  // checks simplicity and the sign of uv
  require_radius_below_four(c.r);
  require_valid_input(g, c);

  // Normalise to f(u) = 0 and 1 <= f(v) <= 2 - eps/2 = r/2.
  Coloring phi = rotate(c, -c.f[u]);
  if (phi.f[v] > phi.r / 2) phi = reflect(phi);

  const TransformParams params(Rational(4) - c.r);
  const Rational scaled_v = params.gamma * phi.f[v];
  Coloring psi = transform_4eps(phi);
  psi.f.push_back(params.eps / 8);                       // u'
  psi.f.push_back(scaled_v + params.eps / 8);            // v'
  psi.f.push_back(Rational(1));                          // x
  psi.f.push_back(scaled_v + params.eps / 4 - 1);        // y
  psi = Coloring(psi.r, std::move(psi.f));

  require_valid_output(expanded, psi, "lift_fuv");
  return psi;
}

}  // namespace sigcolor
