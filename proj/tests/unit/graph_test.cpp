#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gwp/error.hpp"
#include "gwp/graph.hpp"

using namespace gwp;
using gwp::testing::chain_graph;
using gwp::testing::loops_graph;

TEST(BuildGraph, OneVertexTwoLoops) {
  Graph g = loops_graph(2);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.source(g.edge("a")), g.vertex("v"));
  EXPECT_EQ(g.range(g.edge("b")), g.vertex("v"));
}

TEST(BuildGraph, TwoVertexEdge) {
  Graph g = build_graph({"u", "v"}, {{"e", "u", "v"}});
  EXPECT_EQ(g.source(g.edge("e")), g.vertex("u"));
  EXPECT_EQ(g.range(g.edge("e")), g.vertex("v"));
}

TEST(BuildGraph, RejectsDanglingEndpoint) {
  EXPECT_THROW(build_graph({"v"}, {{"a", "v", "w"}}), GraphError);
}

TEST(BuildGraph, RejectsDuplicates) {
  EXPECT_THROW(build_graph({"v", "v"}, {}), GraphError);
  EXPECT_THROW(build_graph({"v"}, {{"a", "v", "v"}, {"a", "v", "v"}}), GraphError);
  // an id naming both a vertex and an edge would make "L(v)" ambiguous
  EXPECT_THROW(build_graph({"v"}, {{"v", "v", "v"}}), GraphError);
}

TEST(BuildGraph, CopiesShareIdentity) {
  Graph a = loops_graph(1);
  Graph b = a;
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == loops_graph(1));
}

TEST(Concat, Admissible) {
  Graph g = chain_graph();
  auto w = concat(g.path({"e1"}), g.path({"e2"}));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, g.path({"e1", "e2"}));
}

TEST(Concat, EndpointMismatch) {
  Graph g = chain_graph();
  EXPECT_FALSE(concat(g.path({"e2"}), g.path({"e1"})));
}

TEST(Concat, UnitsActAsIdentities) {
  Graph g = chain_graph();
  EXPECT_EQ(concat(g.unit("v"), g.path({"e2"})), g.path({"e2"}));
  EXPECT_EQ(concat(g.path({"e2"}), g.unit("w")), g.path({"e2"}));
  EXPECT_FALSE(concat(g.unit("u"), g.path({"e2"})));
  EXPECT_FALSE(concat(g.unit("u"), g.unit("v")));
}

TEST(Concat, AssociativeWithNonePropagation) {
  std::mt19937 rng(7);
  Graph g = gwp::testing::mixed_graph();
  std::vector<PathWord> words = enumerate_paths(g, 2);
  for (const auto& w1 : words)
    for (const auto& w2 : words)
      for (const auto& w3 : words) {
        auto left = concat(w1, w2);
        auto lhs = left ? concat(*left, w3) : std::nullopt;
        auto right = concat(w2, w3);
        auto rhs = right ? concat(w1, *right) : std::nullopt;
        ASSERT_EQ(lhs, rhs);
      }
}

TEST(Concat, UnitLaws) {
  Graph g = gwp::testing::mixed_graph();
  for (const auto& w : enumerate_paths(g, 3)) {
    EXPECT_EQ(concat(g.unit(w.source()), w), w);
    EXPECT_EQ(concat(w, g.unit(w.range())), w);
  }
}

TEST(StripPrefix, Basics) {
  Graph g = loops_graph(2);
  EXPECT_EQ(strip_prefix(g.path({"a"}), g.path({"a", "b"})), g.path({"b"}));
  EXPECT_EQ(strip_prefix(g.path({"a", "b"}), g.path({"a", "b"})), g.unit("v"));
  EXPECT_FALSE(strip_prefix(g.path({"b"}), g.path({"a", "b"})));
}

TEST(Endpoints, Examples) {
  Graph g = chain_graph();
  EXPECT_EQ(endpoints(g.unit("v")), std::make_pair(g.vertex("v"), g.vertex("v")));
  EXPECT_EQ(endpoints(g.path({"e1", "e2"})), std::make_pair(g.vertex("u"), g.vertex("w")));
  Graph l = loops_graph(1);
  EXPECT_EQ(endpoints(l.path({"a", "a"})), std::make_pair(l.vertex("v"), l.vertex("v")));
}

TEST(Path, RejectsInadmissible) {
  Graph g = chain_graph();
  EXPECT_THROW(g.path({"e2", "e1"}), DomainError);
  EXPECT_THROW(g.path({"nope"}), ForeignIdError);
}

TEST(ParseWord, CommaSyntax) {
  Graph g = loops_graph(2);
  EXPECT_EQ(g.parse_word("a,b"), g.path({"a", "b"}));
  EXPECT_EQ(g.parse_word("v"), g.unit("v"));
  EXPECT_EQ(g.word_name(g.path({"a", "a"})), "a,a");
  EXPECT_THROW(g.parse_word("a,,b"), Error);
}

TEST(Diagram, LoopPowersShareADiagram) {
  Graph g = loops_graph(2);
  EXPECT_EQ(diagram(g.path({"a"})), diagram(g.path({"a", "a", "a"})));
  EXPECT_NE(diagram(g.path({"a"})), diagram(g.path({"a", "b"})));
  EXPECT_NE(diagram(g.unit("v")), diagram(g.path({"a"})));
}

TEST(DiagramDistinct, Examples) {
  Graph g = loops_graph(2);
  EXPECT_TRUE(diagram_distinct(g.path({"a"}), g.path({"b"})));
  EXPECT_FALSE(diagram_distinct(g.path({"a"}), g.path({"a", "a"})));
  Graph c = chain_graph();
  EXPECT_TRUE(diagram_distinct(c.path({"e1"}), c.path({"e1", "e2"})));
}

TEST(DiagramDistinct, SymmetricAndIrreflexive) {
  Graph g = gwp::testing::mixed_graph();
  auto words = enumerate_paths(g, 3);
  for (const auto& x : words) {
    EXPECT_FALSE(diagram_distinct(x, x));
    for (const auto& y : words) EXPECT_EQ(diagram_distinct(x, y), diagram_distinct(y, x));
  }
}

TEST(DiagramDistinct, CyclicReorderingIsNotDistinct) {
  Graph g = gwp::testing::mixed_graph();
  EXPECT_FALSE(diagram_distinct(g.path({"f", "g"}), g.path({"g", "f"})));
}

TEST(EnumeratePaths, Examples) {
  Graph g = loops_graph(2);
  auto one = enumerate_paths(g, 1);
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0], g.unit("v"));
  EXPECT_EQ(one[1], g.path({"a"}));
  EXPECT_EQ(one[2], g.path({"b"}));
  EXPECT_EQ(enumerate_paths(g, 2).size(), 7u);

  Graph e = build_graph({"u", "v"}, {{"e", "u", "v"}});
  auto words = enumerate_paths(e, 3);
  ASSERT_EQ(words.size(), 3u);
  EXPECT_EQ(words[2], e.path({"e"}));
}

TEST(EnumeratePaths, GeometricCount) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Graph g = loops_graph(n);
    for (std::size_t len = 0; len <= 5; ++len) {
      std::size_t expected = 0, p = 1;
      for (std::size_t k = 0; k <= len; ++k, p *= n) expected += p;
      EXPECT_EQ(enumerate_paths(g, len).size(), expected);
      EXPECT_EQ(count_paths(g, len), expected);
    }
  }
}

TEST(EnumeratePaths, SortedAndAdmissible) {
  Graph g = gwp::testing::mixed_graph();
  auto words = enumerate_paths(g, 4);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
  EXPECT_EQ(words.size(), count_paths(g, 4));
  for (const auto& w : words) EXPECT_TRUE(g.contains(w));
}
