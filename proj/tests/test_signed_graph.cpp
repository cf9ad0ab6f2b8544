#include <gtest/gtest.h>

#include <random>

#include "sigcolor/errors.hpp"
#include "sigcolor/generators.hpp"
#include "sigcolor/sg_format.hpp"
#include "sigcolor/signed_graph.hpp"
#include "support.hpp"

using namespace sigcolor;
using namespace sigcolor::testing;

namespace {

SignedGraph neg_c4() { return cycle(4, "+++-"); }

Walk closed_cycle(int n) {
  Walk w;
  for (int i = 0; i <= n; ++i) w.vertices.push_back(i % n);
  for (int i = 0; i < n; ++i) w.edges.push_back(static_cast<std::size_t>(i));
  return w;
}

}  // namespace

TEST(SgFormat, ParsesSingleNegativeEdge) {
  const SignedGraph g = parse_sg("p sg 2 1\ne 0 1 -");
  ASSERT_EQ(g.n(), 2);
  ASSERT_EQ(g.m(), 1u);
  EXPECT_EQ(g.edge(0).sign, Sign::negative);
}

TEST(SgFormat, RoundTripOmega2) {
  const SignedGraph g = omega(2);
  EXPECT_EQ(parse_sg(format_sg(g)), g);
  EXPECT_EQ(format_sg(parse_sg(format_sg(g))), format_sg(g));
}

TEST(SgFormat, CommentsAndBlankLines) {
  const SignedGraph g = parse_sg("# comment\n\np sg 3 2\n# x\ne 0 1 +\ne 2 2 -\n");
  EXPECT_EQ(g.m(), 2u);
  EXPECT_TRUE(g.edge(1).is_loop());
}

TEST(SgFormat, Errors) {
  EXPECT_THROW(parse_sg("p sg 2 1\ne 0 5 +"), IndexError);
  try {
    parse_sg("p sg 2 1\ne 0 1 x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_sg("e 0 1 +"), ParseError);
  EXPECT_THROW(parse_sg("p sg 2 2\ne 0 1 +"), ParseError);
  EXPECT_THROW(parse_sg("p sg 2 1\ne 0 1 +\ne 0 1 -"), ParseError);
  EXPECT_THROW(parse_sg("p sg 2 1\ne 0 1 + extra"), ParseError);
  EXPECT_THROW(parse_sg("q 1"), ParseError);
}

TEST(SignedGraph, BasicQueries) {
  SignedGraph g(3);
  g.add_edge(1, 0, Sign::positive);
  EXPECT_EQ(g.edge(0).u, 0);
  EXPECT_TRUE(g.is_simple());
  g.add_edge(0, 1, Sign::negative);
  EXPECT_FALSE(g.is_simple());
  EXPECT_EQ(g.neighbors(0), std::vector<int>{1});
  EXPECT_EQ(g.degree(2), 0);
  EXPECT_THROW(g.add_edge(0, 3, Sign::positive), IndexError);
  SignedGraph loop(1);
  loop.add_edge(0, 0, Sign::positive);
  EXPECT_TRUE(loop.has_positive_loop());
  EXPECT_FALSE(loop.is_simple());
}

TEST(Switching, NegativeC4AtZero) {
  const SignedGraph s = switching(neg_c4(), SwitchSet({0}));
  EXPECT_EQ(s, SignedGraph(4, {{0, 1, Sign::negative}, {1, 2, Sign::positive},
                               {2, 3, Sign::positive}, {0, 3, Sign::positive}}));
}

TEST(Switching, IdentityCases) {
  const SignedGraph g = omega(3);
  EXPECT_EQ(switching(g, SwitchSet()), g);
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  EXPECT_EQ(switching(g, SwitchSet(all)), g);
}

TEST(Switching, LoopsNeverFlip) {
  SignedGraph g(2);
  g.add_edge(0, 0, Sign::negative);
  g.add_edge(0, 1, Sign::negative);
  const SignedGraph s = switching(g, SwitchSet({0}));
  EXPECT_EQ(s.edge(0).sign, Sign::negative);
  EXPECT_EQ(s.edge(1).sign, Sign::positive);
}

TEST(Switching, RejectsOutOfRange) { EXPECT_THROW(switching(neg_c4(), SwitchSet({7})), IndexError); }

TEST(CycleSign, Examples) {
  EXPECT_EQ(cycle_sign(neg_c4(), closed_cycle(4)), Sign::negative);
  EXPECT_EQ(cycle_sign(cycle(3, "+++"), closed_cycle(3)), Sign::positive);
  SignedGraph e(2);
  e.add_edge(0, 1, Sign::negative);
  EXPECT_EQ(cycle_sign(e, Walk{{0, 1, 0}, {0, 0}}), Sign::positive);
}

TEST(CycleSign, MultigraphDigon) {
  const SignedGraph d = cycle(2, "+-");
  EXPECT_EQ(cycle_sign(d, Walk{{0, 1, 0}, {0, 1}}), Sign::negative);
}

TEST(CycleSign, NotAWalk) {
  EXPECT_THROW(cycle_sign(neg_c4(), Walk{{0, 2, 0}, {0, 0}}), NotAWalk);
  EXPECT_THROW(cycle_sign(neg_c4(), Walk{{0, 1, 2}, {0, 1}}), NotAWalk);
  EXPECT_THROW(cycle_sign(neg_c4(), Walk{{0, 1, 0}, {0, 9}}), NotAWalk);
}

TEST(CycleSign, InvariantUnderSwitching) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedGraph g = random_multigraph(rng, 5, 8, true);
    // random closed walk
    std::uniform_int_distribution<std::size_t> pick(0, g.m() - 1);
    Walk w;
    const Edge& first = g.edge(pick(rng));
    w.vertices.push_back(first.u);
    int at = first.u;
    for (int step = 0; step < 6; ++step) {
      std::vector<std::size_t> options;
      for (std::size_t i = 0; i < g.m(); ++i)
        if (g.edge(i).u == at || g.edge(i).v == at) options.push_back(i);
      const std::size_t e = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      w.edges.push_back(e);
      at = g.edge(e).other(at);
      w.vertices.push_back(at);
    }
    // walk back along the same edges to close it
    for (int step = 5; step >= 0; --step) {
      w.edges.push_back(w.edges[static_cast<std::size_t>(step)]);
      w.vertices.push_back(w.vertices[static_cast<std::size_t>(step)]);
    }
    const SwitchSet s(random_subset(rng, g.n()));
    EXPECT_EQ(cycle_sign(g, w), cycle_sign(switching(g, s), w));
    EXPECT_EQ(cycle_sign(g, w), Sign::positive);
  }
}

TEST(Equivalence, Examples) {
  const SignedGraph pos = cycle(4, "++++");
  const SignedGraph two = cycle(4, "--++");
  const auto w = equivalence_witness(pos, two);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(switching(pos, *w), two);
  EXPECT_TRUE(*w == SwitchSet({1}) || *w == SwitchSet({0, 2, 3}));
  EXPECT_FALSE(is_equivalent(pos, neg_c4()));
}

TEST(Equivalence, StructureMismatch) {
  EXPECT_THROW(is_equivalent(cycle(4, "++++"), complete(4, Sign::positive)), StructureMismatch);
  EXPECT_THROW(is_equivalent(cycle(3, "+++"), cycle(4, "++++")), StructureMismatch);
}

TEST(Equivalence, SwitchedCopiesAreEquivalent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const SignedGraph g = random_multigraph(rng, 6, 9, true);
    const SignedGraph h = switching(g, SwitchSet(random_subset(rng, g.n())));
    const auto w = equivalence_witness(g, h);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(switching(g, *w), h);
  }
}

TEST(Equivalence, AgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 6;
    const SignedGraph base = random_multigraph(rng, n, 6, trial % 3 == 0);
    for (std::uint64_t a = 0; a < 64; a += 3) {
      for (std::uint64_t b = 0; b < 64; ++b) {
        const SignedGraph g1 = with_signature(base, a);
        const SignedGraph g2 = with_signature(base, b);
        EXPECT_EQ(is_equivalent(g1, g2), canonical_signature(g1) == canonical_signature(g2));
      }
    }
  }
}

TEST(Bipartite, Examples) {
  const auto parts = bipartition(neg_c4());
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ((*parts)[0], (*parts)[2]);
  EXPECT_EQ((*parts)[1], (*parts)[3]);
  EXPECT_NE((*parts)[0], (*parts)[1]);
  EXPECT_FALSE(is_bipartite(complete(3, Sign::positive)));
  EXPECT_TRUE(is_bipartite(s_of(complete(3, Sign::positive))));
  SignedGraph loop(1);
  loop.add_edge(0, 0, Sign::negative);
  EXPECT_FALSE(is_bipartite(loop));
}

TEST(Degeneracy, Omega2) {
  const SignedGraph g = omega(2);
  const auto order = degeneracy_order(g, 2);
  EXPECT_TRUE(is_degeneracy_order(g, order, 2));
  EXPECT_EQ(order, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(Degeneracy, K4NotTwoDegenerate) {
  EXPECT_THROW(degeneracy_order(complete(4, Sign::positive), 2), NotDegenerate);
  EXPECT_NO_THROW(degeneracy_order(complete(4, Sign::positive), 3));
}

TEST(Degeneracy, Edgeless) {
  const auto order = degeneracy_order(SignedGraph(5), 0);
  EXPECT_EQ(order.size(), 5u);
}

TEST(Degeneracy, ParallelEdgesCountOnce) {
  EXPECT_NO_THROW(degeneracy_order(cycle(2, "+-"), 1));
}

TEST(Degeneracy, RandomOrdersSatisfyBackDegree) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedGraph g = random_2degenerate(rng, 3 + trial % 30);
    const auto order = degeneracy_order(g, 2);
    EXPECT_TRUE(is_degeneracy_order(g, order, 2));
  }
}

TEST(Simplify, Examples) {
  SignedGraph par(2);
  par.add_edge(0, 1, Sign::positive);
  par.add_edge(0, 1, Sign::positive);
  EXPECT_EQ(simplify(par).graph.m(), 1u);

  const Simplified d = simplify(cycle(2, "+-"));
  EXPECT_EQ(d.graph.m(), 2u);
  EXPECT_TRUE(d.has_digon);

  SignedGraph loop(1);
  loop.add_edge(0, 0, Sign::positive);
  const Simplified l = simplify(loop);
  EXPECT_TRUE(l.has_positive_loop);
  EXPECT_EQ(l.graph.m(), 1u);
}

TEST(Forest, Detection) {
  EXPECT_TRUE(is_forest(SignedGraph(3)));
  EXPECT_TRUE(is_forest(SignedGraph(3, {{0, 1, Sign::negative}, {1, 2, Sign::positive}})));
  EXPECT_FALSE(is_forest(cycle(3, "+++")));
  EXPECT_FALSE(is_forest(cycle(2, "+-")));
}
