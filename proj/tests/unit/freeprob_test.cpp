#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gwp/cumulants.hpp"
#include "gwp/error.hpp"
#include "gwp/freeprob.hpp"
#include "oracles.hpp"

using namespace gwp;
using gwp::testing::loops_graph;

TEST(LoopsAt, Examples) {
  Graph g = loops_graph(2);
  EXPECT_EQ(loops_at(g, g.vertex("v")), (std::vector<EdgeId>{g.edge("a"), g.edge("b")}));
  Graph e = build_graph({"u", "v"}, {{"e", "u", "v"}});
  EXPECT_TRUE(loops_at(e, e.vertex("u")).empty());
  Graph m = gwp::testing::embed_graph();
  EXPECT_EQ(loops_at(m, m.vertex("v0")), (std::vector<EdgeId>{m.edge("l1"), m.edge("l2")}));
}

TEST(Semicircular, Signature) {
  Graph g = gwp::testing::embed_graph();
  VertexId v0 = g.vertex("v0");
  for (std::int64_t s : {1, 2, 3}) {
    Element x = semicircular(g, g.edge("l1"), Scalar(s));
    for (std::size_t n = 1; n <= 8; ++n) {
      std::vector<Element> copies(n, x);
      DiagonalElement k = mixed_cumulant(copies);
      if (n == 2) {
        EXPECT_EQ(k, DiagonalElement::at(g, v0, Scalar(s * s)));
      } else {
        EXPECT_TRUE(k.is_zero()) << n;
      }
    }
  }
  EXPECT_THROW(semicircular(g, g.edge("e1")), DomainError);
}

TEST(GeneratingOperator, Examples) {
  Graph g = loops_graph(2);
  Element t = generating_operator(g, g.vertex("v"));
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(trace(t * t), Scalar(2));
  EXPECT_EQ(trace(t), Scalar(0));
  EXPECT_THROW(generating_operator(build_graph({"u", "v"}, {{"e", "u", "v"}}), VertexId{0}), DomainError);
}

TEST(MomentSeries, Examples) {
  Graph g = loops_graph(2);
  Element t = generating_operator(g, g.vertex("v"));
  EXPECT_EQ(moment_series(t, 6, State::trace()).str(), "2 z^2 + 8 z^4 + 40 z^6");
  EXPECT_EQ(moment_series(Element(g), 6, State::trace()), PowerSeries(std::vector<Scalar>(6, Scalar(0))));
  Element x = semicircular(g, g.edge("a"));
  auto m = moments(x, 6, State::trace());
  EXPECT_EQ(m, (std::vector<Scalar>{0, 1, 0, 2, 0, 5}));
}

TEST(RTransform, Examples) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Graph g = loops_graph(n);
    PowerSeries r = r_transform(generating_operator(g, VertexId{0}), 10, State::trace());
    for (std::size_t k = 1; k <= 10; ++k) EXPECT_EQ(r.coefficient(k), Scalar(k == 2 ? std::int64_t(n) : 0));
  }
  Graph g = loops_graph(1);
  EXPECT_EQ(r_transform(semicircular(g, g.edge("a")), 6, State::trace()).str(), "z^2");
  EXPECT_EQ(r_transform(Element(g), 4, State::trace()).str(), "0");
}

TEST(CatalanMomentFormula, Examples) {
  EXPECT_EQ(catalan_moment_formula(2, 2), Rational(2));
  EXPECT_EQ(catalan_moment_formula(5, 7), Rational(0));
  EXPECT_EQ(catalan_moment_formula(3, 6), Rational(135));
}

TEST(CatalanMomentFormula, EqualsPairingCount) {
  for (std::size_t N = 1; N <= 4; ++N) {
    for (std::size_t n = 2; n <= 12; n += 2) {
      Rational sum(0);
      for (std::size_t i = 0; i < enumerate_nc_pairings(n).size(); ++i) sum += pow(Rational(std::int64_t(N)), n / 2);
      EXPECT_EQ(catalan_moment_formula(N, n), sum);
    }
  }
}

TEST(IdenticallyDistributed, Examples) {
  Graph a = loops_graph(2), b = loops_graph(2);
  EXPECT_TRUE(identically_distributed(generating_operator(a, VertexId{0}), State::trace(),
                                      generating_operator(b, VertexId{0}), State::trace(), 8)
                  .identical);
  EXPECT_TRUE(identically_distributed(semicircular(a, a.edge("a")), State::trace(), semicircular(a, a.edge("b")),
                                      State::trace(), 8)
                  .identical);
  auto cmp = identically_distributed(generating_operator(a, VertexId{0}), State::trace(),
                                     generating_operator(loops_graph(3), VertexId{0}), State::trace(), 8);
  EXPECT_FALSE(cmp.identical);
  EXPECT_EQ(cmp.first_disagreement, 2u);
}

TEST(FreenessCheck, DistinctLoops) {
  Graph g = loops_graph(2);
  FreenessReport r = freeness_check(g, g.path({"a"}), g.path({"b"}), 4);
  EXPECT_TRUE(r.diagram_distinct);
  EXPECT_TRUE(r.free_evidence());
  EXPECT_GT(r.cumulants_scanned, 0u);
  ASSERT_EQ(r.tallies.size(), 3u);
}

TEST(FreenessCheck, LoopAndItsSquare) {
  Graph g = loops_graph(2);
  FreenessReport r = freeness_check(g, g.path({"a"}), g.path({"a", "a"}), 2);
  EXPECT_FALSE(r.diagram_distinct);
  EXPECT_FALSE(r.free_evidence());
  bool found = false;
  for (const auto& w : r.witnesses) {
    if (w.label() == "k2(L_{a,a}*, L_a·L_a)") {
      found = true;
      EXPECT_EQ(w.value, DiagonalElement::at(g, VertexId{0}, Scalar(1)));
    }
  }
  EXPECT_TRUE(found);
}

TEST(FreenessCheck, UnrelatedComponents) {
  Graph g = build_graph({"u", "v", "w"}, {{"e1", "u", "v"}, {"l", "w", "w"}});
  FreenessReport r = freeness_check(g, g.path({"e1"}), g.path({"l"}), 4);
  EXPECT_TRUE(r.diagram_distinct);
  EXPECT_TRUE(r.free_evidence());
}

TEST(FreenessCheck, GeneratedMonomials) {
  Graph g = loops_graph(1);
  auto mons = generated_monomials(g, g.path({"a"}), 2);
  // L_a, L_a*, and the four products, none of which vanish on a loop
  EXPECT_EQ(mons.size(), 6u);
  EXPECT_EQ(mons[0].label, "L_a");
  EXPECT_EQ(mons[1].label, "L_a*");
}

TEST(EmbedFreeGroupFactor, Examples) {
  Graph g = gwp::testing::embed_graph();
  VertexId v0 = g.vertex("v0");
  SemicircularSystem s = embed_free_group_factor(g, v0, 2);
  EXPECT_TRUE(s.verified());
  EXPECT_EQ(s.checks[3].value, DiagonalElement::at(g, v0, Scalar(8)));

  Graph one = loops_graph(1);
  SemicircularSystem s1 = embed_free_group_factor(one, VertexId{0}, 1, 2);
  EXPECT_EQ(s1.checks[1].value, DiagonalElement::at(one, VertexId{0}, Scalar(1)));
  EXPECT_THROW(embed_free_group_factor(one, VertexId{0}, 2), DomainError);
}

TEST(EmbedFreeGroupFactor, GeneratorsAreFree) {
  Graph g = gwp::testing::embed_graph();
  SemicircularSystem s = embed_free_group_factor(g, g.vertex("v0"), 2);
  const Element& x = s.generators[0].x;
  const Element& y = s.generators[1].x;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Element> f;
      for (std::size_t i = 0; i < n; ++i) f.push_back(mask >> i & 1 ? y : x);
      ASSERT_TRUE(mixed_cumulant(f).is_zero()) << n << " " << mask;
    }
  }
}

TEST(EmbedFreeGroupFactor, LocalityOfWords) {
  std::mt19937 rng(51);
  Graph g = gwp::testing::embed_graph();
  VertexId v0 = g.vertex("v0");
  SemicircularSystem s = embed_free_group_factor(g, v0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Element> f;
    std::size_t len = 1 + rng() % 6;
    for (std::size_t i = 0; i < len; ++i) f.push_back(s.generators[rng() % 2].x);
    DiagonalElement e = expectation_of_product(f);
    for (const auto& [v, c] : e.entries()) EXPECT_EQ(v, v0);
  }
}

TEST(CompressToVertex, Examples) {
  Graph g = build_graph({"u", "v"}, {{"e", "u", "v"}});
  EXPECT_TRUE(compress_to_vertex(Element::creation(g, g.path({"e"})), g.vertex("u")).is_zero());
  Element pv = Element::projection(g, g.vertex("v"));
  EXPECT_EQ(compress_to_vertex(pv, g.vertex("v")), pv);

  Graph m = gwp::testing::embed_graph();
  SemicircularSystem s = embed_free_group_factor(m, m.vertex("v0"), 2);
  for (const auto& gen : s.generators)
    for (unsigned k = 1; k <= 6; ++k) EXPECT_EQ(compress_to_vertex(power(gen.x, k), m.vertex("v0")), power(gen.x, k));
}

TEST(PowerSeries, Formatting) {
  EXPECT_EQ(PowerSeries({Scalar(0), Scalar(3)}).str(), "3 z^2");
  EXPECT_EQ(PowerSeries({Scalar(Rational(1, 2)), Scalar(-1)}).str(), "1/2 z - z^2");
}
