#include <gtest/gtest.h>

#include <random>

#include "nctd/errors.hpp"
#include "nctd/graph.hpp"
#include "nctd/treedepth.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace nctd {
namespace {

using fixtures::complete;
using fixtures::path;
using fixtures::star;

VertexSet set_of(int n, std::initializer_list<Vertex> members) {
  return VertexSet(static_cast<std::size_t>(n), members);
}

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(3, {{-1, 2}}), InputError);
}

TEST(Graph, AdjacencyIsSymmetric) {
  Graph g(4, {{0, 1}, {1, 2}, {3, 1}});
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}}));
}

TEST(ClosedNeighborhood, Examples) {
  EXPECT_EQ(closed_neighborhood(path(3), 1), set_of(3, {0, 1, 2}));
  EXPECT_EQ(closed_neighborhood(Graph(3), 2), set_of(3, {2}));
  for (Vertex v = 0; v < 4; ++v) {
    EXPECT_EQ(closed_neighborhood(complete(4), v), set_of(4, {0, 1, 2, 3}));
  }
  EXPECT_THROW(closed_neighborhood(path(3), 3), InputError);
}

TEST(ClosedNeighborhood, ContainsCenterAndIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    Graph g = fixtures::random_graph(rng, 9, 0.4);
    for (Vertex u = 0; u < g.order(); ++u) {
      EXPECT_TRUE(closed_neighborhood(g, u).contains(u));
      for (Vertex v = 0; v < g.order(); ++v) {
        EXPECT_EQ(closed_neighborhood(g, v).contains(u),
                  closed_neighborhood(g, u).contains(v));
      }
    }
  }
}

TEST(FalseTwins, Examples) {
  Graph k13 = star(3);
  auto leaves = false_twin_classes(k13, set_of(4, {1, 2, 3}));
  ASSERT_EQ(leaves.size(), 1u);
  EXPECT_EQ(leaves[0], set_of(4, {1, 2, 3}));

  auto p3 = false_twin_classes(path(3), set_of(3, {0, 2}));
  ASSERT_EQ(p3.size(), 1u);
  EXPECT_EQ(p3[0], set_of(3, {0, 2}));

  auto p4 = false_twin_classes(path(4), set_of(4, {0, 3}));
  ASSERT_EQ(p4.size(), 2u);
  EXPECT_EQ(p4[0], set_of(4, {0}));
  EXPECT_EQ(p4[1], set_of(4, {3}));
}

TEST(FalseTwins, IsThePartitionByOpenNeighborhood) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 200; ++round) {
    Graph g = fixtures::random_graph(rng, 8, 0.3);
    VertexSet domain(8);
    for (Vertex v : fixtures::random_centers(rng, 8, 0.7)) domain.insert(v);
    auto blocks = false_twin_classes(g, domain);
    VertexSet seen(8);
    for (const auto& block : blocks) {
      EXPECT_FALSE(block.empty());
      EXPECT_FALSE(block.intersects(seen));
      seen |= block;
    }
    EXPECT_EQ(seen, domain);
    for (Vertex u : domain) {
      for (Vertex v : domain) {
        bool same_block = false;
        for (const auto& block : blocks) {
          same_block = same_block || (block.contains(u) && block.contains(v));
        }
        EXPECT_EQ(same_block, g.neighbors(u) == g.neighbors(v));
      }
    }
  }
}

TEST(VertexCover, Examples) {
  EXPECT_TRUE(vertex_cover_2approx(Graph(4)).empty());
  EXPECT_EQ(vertex_cover_2approx(Graph(2, {{0, 1}})), set_of(2, {0, 1}));
  VertexSet c = vertex_cover_2approx(star(5));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(c.contains(0));
}

TEST(VertexCover, CoversEveryEdgeAndMinimalizes) {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 300; ++round) {
    Graph g = fixtures::random_graph(rng, 10, 0.25);
    VertexSet c = vertex_cover_2approx(g);
    EXPECT_TRUE(is_vertex_cover(g, c));
    VertexSet m = minimalize_cover(g, c);
    EXPECT_TRUE(is_vertex_cover(g, m));
    EXPECT_TRUE(m.is_subset_of(c));
    for (Vertex v : m) {
      VertexSet smaller = m;
      smaller.erase(v);
      EXPECT_FALSE(is_vertex_cover(g, smaller));
    }
  }
}

TEST(Components, Examples) {
  auto a = components_after_removal(path(3), set_of(3, {1}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], set_of(3, {0}));
  EXPECT_EQ(a[1], set_of(3, {2}));

  auto b = components_after_removal(path(3), set_of(3, {}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], set_of(3, {0, 1, 2}));

  auto c = components_after_removal(complete(4), set_of(4, {0}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], set_of(4, {1, 2, 3}));
}

TEST(RootedForest, RejectsCyclesAndBadParents) {
  EXPECT_THROW(RootedForest({1, 0}), InputError);
  EXPECT_THROW(RootedForest({0}), InputError);
  EXPECT_THROW(RootedForest({-1, 5}), InputError);
  RootedForest f({-1, 0, 1, 0});
  EXPECT_EQ(f.height(), 3);
  EXPECT_EQ(f.roots(), std::vector<Vertex>{0});
  EXPECT_TRUE(f.is_ancestor(0, 2));
  EXPECT_FALSE(f.is_ancestor(3, 2));
  EXPECT_EQ(f.ancestors_inclusive(2), set_of(4, {0, 1, 2}));
  EXPECT_EQ(f.subtree(1), set_of(4, {1, 2}));
}

TEST(Treedepth, Examples) {
  EXPECT_EQ(treedepth_decomposition(Graph(1)).height(), 1);
  EXPECT_EQ(treedepth_decomposition(path(4)).height(), 3);
  EXPECT_EQ(treedepth_decomposition(Graph(0)).height(), 0);
  EXPECT_EQ(treedepth_decomposition(star(30)).height(), 2);
  EXPECT_EQ(treedepth_decomposition(complete(6)).height(), 6);
}

TEST(Treedepth, PathsFollowLogFormula) {
  for (int n = 1; n <= 20; ++n) {
    int expected = 0;
    while ((1 << expected) < n + 1) ++expected;
    RootedForest f = treedepth_decomposition(path(n));
    EXPECT_EQ(f.height(), expected) << "n=" << n;
    EXPECT_TRUE(f.is_decomposition_of(path(n)));
  }
}

TEST(Treedepth, MatchesEliminationOrderBruteForce) {
  std::mt19937_64 rng(14);
  for (int round = 0; round < 150; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g = fixtures::random_graph(rng, n, 0.35);
    RootedForest f = treedepth_decomposition(g);
    EXPECT_TRUE(f.is_decomposition_of(g));
    EXPECT_EQ(f.height(), oracle::treedepth(fixtures::to_small(g)));
  }
}

TEST(Treedepth, ComponentCapRaises) {
  TreedepthOptions options;
  options.max_component_size = 5;
  EXPECT_THROW(treedepth_decomposition(path(6), options), ResourceLimitError);
  EXPECT_NO_THROW(treedepth_decomposition(Graph(6), options));
}

}  // namespace
}  // namespace nctd
