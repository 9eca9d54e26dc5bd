#include <gtest/gtest.h>

#include "eqdom/graph.hpp"

using namespace eqdom;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return errc::parse_error;
}

}  // namespace

TEST(Graph, BuildsSmallGraphs) {
  graph k2(2, {{0, 1}});
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_EQ(k2.size(), 1u);
  EXPECT_TRUE(k2.adjacent(0, 1));
  EXPECT_TRUE(k2.adjacent(1, 0));

  graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(c4.size(), 4u);
  EXPECT_EQ(c4, cycle_graph(4));
  EXPECT_EQ(c4.min_degree(), 2u);
  EXPECT_EQ(c4.max_degree(), 2u);
  EXPECT_EQ(c4.edges(), (std::vector<edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_EQ(code_of([] { graph(3, {{0, 0}}); }), errc::self_loop);
  EXPECT_EQ(code_of([] { graph(3, {{0, 3}}); }), errc::out_of_range);
  EXPECT_EQ(code_of([] { graph(3, {{0, 1}, {1, 0}}); }), errc::duplicate_edge);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(cycle_graph(4)));
  EXPECT_FALSE(is_connected(graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(graph(2, {{0, 1}})));
  EXPECT_TRUE(is_tree(path_graph(5)));
  EXPECT_FALSE(is_tree(cycle_graph(5)));
  std::size_t count = 0;
  auto comp = components(graph(5, {{0, 1}, {2, 3}}), &count);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(comp, (std::vector<std::uint32_t>{0, 0, 1, 1, 2}));
}

TEST(Graph, Bipartition) {
  auto p3 = bipartition_of(path_graph(3));
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3->side_a, (vertex_set{1}));
  EXPECT_EQ(p3->side_b, (vertex_set{0, 2}));

  EXPECT_FALSE(bipartition_of(complete_graph(3)));

  auto c4 = bipartition_of(cycle_graph(4));
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->side_a, (vertex_set{0, 2}));
  EXPECT_EQ(c4->side_b, (vertex_set{1, 3}));
  EXPECT_TRUE(c4->is_a(0));
  EXPECT_FALSE(c4->is_a(1));

  EXPECT_EQ(code_of([] { bipartition_of(graph(4, {{0, 1}, {2, 3}})); }), errc::disconnected);
  EXPECT_EQ(code_of([] { bipartition_of(graph()); }), errc::too_small);
}

TEST(Graph, BipartitionIsAProperColoringWithSmallerSideFirst) {
  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t q = 1; q <= 4; ++q) {
      const auto g = complete_bipartite_graph(p, q);
      auto bp = bipartition_of(g);
      ASSERT_TRUE(bp);
      EXPECT_LE(bp->side_a.size(), bp->side_b.size());
      EXPECT_EQ(bp->side_a.size(), std::min(p, q));
      for (auto [u, v] : g.edges()) EXPECT_NE(bp->is_a(u), bp->is_a(v));
    }
}

TEST(Graph, StructuralMarks) {
  auto star = marks_of(star_graph(3));
  EXPECT_EQ(star.leaves, (vertex_set{1, 2, 3}));
  EXPECT_EQ(star.supports, (vertex_set{0}));
  EXPECT_TRUE(star.weak_supports.empty());

  auto p4 = marks_of(path_graph(4));
  EXPECT_EQ(p4.leaves, (vertex_set{0, 3}));
  EXPECT_EQ(p4.supports, (vertex_set{1, 2}));
  EXPECT_EQ(p4.weak_supports, (vertex_set{1, 2}));

  auto c4 = marks_of(cycle_graph(4));
  EXPECT_TRUE(c4.leaves.empty());
  EXPECT_TRUE(c4.supports.empty());
}

TEST(Graph, Distances) {
  EXPECT_EQ(distance(path_graph(4), 0, 3), 3u);
  for (vertex v = 0; v < 5; ++v) EXPECT_EQ(distance(cycle_graph(5), v, v), 0u);
  EXPECT_EQ(distance(complete_bipartite_graph(2, 3), 0, 1), 2u);
  EXPECT_FALSE(distance(graph(4, {{0, 1}, {2, 3}}), 0, 2).has_value());
  EXPECT_EQ(code_of([] { distance(path_graph(3), 0, 7); }), errc::out_of_range);
}

TEST(Graph, CoronaAndCycle) {
  EXPECT_TRUE(is_corona(path_graph(4)));
  EXPECT_FALSE(is_corona(cycle_graph(4)));
  EXPECT_TRUE(is_corona(path_graph(2)));
  EXPECT_FALSE(is_corona(star_graph(3)));
  // Corona of a triangle.
  EXPECT_TRUE(is_corona(graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}})));

  EXPECT_TRUE(is_cycle4(cycle_graph(4)));
  EXPECT_FALSE(is_cycle4(path_graph(4)));
  EXPECT_FALSE(is_cycle4(complete_graph(4)));
  EXPECT_TRUE(is_cycle4(graph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}})));
}

TEST(Graph, Subgraphs) {
  const auto g = cycle_graph(5);
  const auto p = remove_vertex(g, 0);
  EXPECT_EQ(p.order(), 4u);
  EXPECT_EQ(p, path_graph(4));
  const auto s = induced_subgraph(g, {0, 1, 3});
  EXPECT_EQ(s.order(), 3u);
  EXPECT_EQ(s.size(), 1u);
}
