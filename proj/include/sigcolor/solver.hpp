#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sigcolor/circle.hpp"
#include "sigcolor/rational.hpp"
#include "sigcolor/signed_graph.hpp"

namespace sigcolor {

/// Discretised target of circumference p/q: grid point i is the circle point
/// i/q. p must be even so the grid is closed under taking antipodes.
class SignedCircularClique {
 public:
  /// Throws InvalidArgument unless p >= 2 is even and q >= 1.
  SignedCircularClique(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  Rational value() const { return Rational(p_, q_); }

  int cyclic_distance(int i, int j) const;
  /// Grid points i, j may carry the ends of a positive edge.
  bool positive_adjacent(int i, int j) const { return cyclic_distance(i, j) >= q_; }
  /// Grid points i, j may carry the ends of a negative edge (i == j allowed).
  bool negative_adjacent(int i, int j) const { return cyclic_distance(i, (j + p_ / 2) % p_) >= q_; }

 private:
  int p_;
  int q_;
};

struct Candidate {
  Rational value;
  int p;
  int q;
};

/// Every value p/q >= 2 with p even and p <= numerator_limit (default 2n),
/// ascending and deduplicated. Each carries an even-numerator representative:
/// reduced a/b as (a, b) if a is even, else (2a, 2b); both are then scaled by
/// grid_multiplier.
std::vector<Candidate> candidate_values(const SignedGraph& g, int numerator_limit = 0,
                                        int grid_multiplier = 1);

/// Grid coloring of g into k, converted to a Coloring with r = p/q and
/// f(v) = color/q and re-verified, or nullopt if none exists.
std::optional<Coloring> hom_witness(const SignedGraph& g, const SignedCircularClique& k);
bool is_hom_feasible(const SignedGraph& g, const SignedCircularClique& k);

struct SolverOptions {
  /// Candidate feasibility tests run concurrently in batches of this size.
  int jobs = 1;
  /// Largest candidate numerator; 0 means 2n.
  int numerator_limit = 0;
  /// Every candidate grid (p, q) is replaced by (k p, k q).
  int grid_multiplier = 1;
};

struct ChiResult {
  bool infinite = false;  // positive loop
  Rational value;
  int p = 0;
  int q = 0;
  std::optional<Coloring> witness;
};

/// Exact circular chromatic number: infinite with a positive loop, 1 without
/// edges, 2 for a forest with an edge, otherwise the least feasible candidate.
ChiResult chi_c(const SignedGraph& g, const SolverOptions& options = {});

struct TightCycle {
  std::vector<int> vertices;  // closed: front() == back()
  std::vector<std::size_t> edges;
  std::vector<Rational> increments;  // (f(next) - f(prev)) mod r
  int positive_edges = 0;            // s
  int negative_edges = 0;            // t
  int unit_sum = 0;                  // S, sum of the +-1 parts of the increments
  int half_turns = 0;                // K, increments sum to S + K r/2
  int winding = 0;                   // m, increments sum to m r
  int a = 0;                         // recovered_r = 2S / (2a + t)
  Rational recovered_r;

  std::size_t length() const { return edges.size(); }
};

struct TightnessReport {
  std::vector<std::size_t> tight_edges;
  /// First tight cycle with a non-zero unit sum, if any.
  std::optional<TightCycle> cycle;
};

/// Throws InvalidColoring if c is not valid on g.
TightnessReport analyze_tightness(const SignedGraph& g, const Coloring& c);

}  // namespace sigcolor
