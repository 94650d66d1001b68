#include <gtest/gtest.h>

#include <sstream>

#include "hurwitz/catalog.hpp"
#include "hurwitz/cover.hpp"
#include "hurwitz/egraph.hpp"
#include "hurwitz/error.hpp"

using namespace hurwitz;

namespace {

// Triangle on vertices 0,1,2; oriented edge 2k goes i->j, 2k+1 goes j->i.
const std::vector<std::pair<int, int>> kTriangle = {{0, 1}, {1, 2}, {0, 2}};

GenGraph triangle() {
  std::vector<OrientedEdge> edges;
  std::vector<int> opp;
  for (std::size_t k = 0; k < kTriangle.size(); ++k) {
    edges.push_back({kTriangle[k].first, kTriangle[k].second});
    edges.push_back({kTriangle[k].second, kTriangle[k].first});
    opp.push_back(static_cast<int>(2 * k + 1));
    opp.push_back(static_cast<int>(2 * k));
  }
  return GenGraph(3, edges, opp);
}

GraphAction s3_on_triangle() {
  const Group g = catalog::symmetric(3);
  const GenGraph graph = triangle();
  std::vector<std::vector<int>> vimg, eimg;
  for (element_id x = 0; x < 6; ++x) {
    const Perm& p = g->element(x);
    vimg.push_back({p(0), p(1), p(2)});
    std::vector<int> row;
    for (int e = 0; e < graph.oriented_edge_count(); ++e) {
      const int s = p(graph.source(e));
      const int t = p(graph.target(e));
      for (int f = 0; f < graph.oriented_edge_count(); ++f) {
        if (graph.source(f) == s && graph.target(f) == t) row.push_back(f);
      }
    }
    eimg.push_back(row);
  }
  return GraphAction(graph, g, vimg, eimg);
}

}  // namespace

TEST(GenGraph, RejectsBadOpposite) {
  EXPECT_THROW(GenGraph(2, {{0, 1}, {1, 0}}, {0, 1}), Error);  // opp(0) = 0 but 0 is not a loop
  EXPECT_THROW(GenGraph(2, {{0, 1}, {0, 1}}, {1, 0}), Error);  // source(opp e) != target(e)
  EXPECT_THROW(GenGraph(1, {{0, 0}}, {1}), Error);
}

TEST(GenGraph, SelfOppositeLoopsAreGeneralized) {
  const GenGraph g(1, {{0, 0}}, {0});
  EXPECT_FALSE(g.is_strict());
  EXPECT_TRUE(g.is_self_opposite(0));
  EXPECT_THROW(betti(g), Error);
}

TEST(GenGraph, BettiOfTriangle) {
  EXPECT_EQ(betti(triangle()), (Betti{1, 1}));
  EXPECT_EQ(triangle().edge_count(), 3);
  EXPECT_EQ(triangle().component_labels(), (std::vector<int>{0, 0, 0}));
}

TEST(GraphAction, RejectsNonCommutingAction) {
  const Group g = catalog::symmetric(3);
  const GenGraph graph = triangle();
  std::vector<std::vector<int>> vimg(6, {0, 1, 2}), eimg(6, {0, 1, 2, 3, 4, 5});
  vimg[1] = {1, 0, 2};  // moves vertices while fixing every edge
  EXPECT_THROW(GraphAction(graph, g, vimg, eimg), Error);
}

TEST(GraphAction, TriangleCharacter) {
  const GraphAction action = s3_on_triangle();
  const auto orbits = edge_orbit_data(action);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].stabilizer.order(), 2u);
  EXPECT_FALSE(orbits[0].orientable);
  // H0 - H1 = trivial - sign
  const ClassFunction chi = graph_virtual_character(action);
  const Group& g = action.group();
  for (element_id x = 0; x < 6; ++x) {
    const int order = g->element_order(x);
    EXPECT_EQ(chi(x), order == 1 ? 0 : order == 2 ? 2 : 0);
  }
}

TEST(GraphAction, IcosahedralCoverGraphs) {
  const auto fam = catalog::icosahedral_family();
  const CoverCurve dih = build_cover(fam.dihedral);
  EXPECT_EQ(betti(dih.action.graph()), (Betti{1, 6}));
  auto orbits = edge_orbit_data(dih.action);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].stabilizer.order(), 10u);
  EXPECT_FALSE(orbits[0].orientable);
  EXPECT_EQ(graph_virtual_character(dih.action).degree(), -5);

  const CoverCurve split = build_cover(fam.split);
  EXPECT_EQ(betti(split.action.graph()), (Betti{1, 6}));
  orbits = edge_orbit_data(split.action);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].stabilizer.order(), 5u);
  EXPECT_TRUE(orbits[0].orientable);
  EXPECT_EQ(graph_virtual_character(split.action).degree(), -5);
  EXPECT_EQ(vertex_permutation_character(split.action).degree(), 7);
  EXPECT_EQ(edge_chain_character(split.action).degree(), 12);
}

TEST(Dot, TriangleOutput) {
  std::ostringstream os;
  DotStyle style;
  style.name = "tri";
  style.edge_labels = {"a", "b", "c"};
  style.dashed = {false, true, false};
  write_dot(os, triangle(), style);
  EXPECT_EQ(os.str(),
            "graph tri {\n"
            "  node [shape=circle];\n"
            "  v0 [label=\"v0\"];\n"
            "  v1 [label=\"v1\"];\n"
            "  v2 [label=\"v2\"];\n"
            "  v0 -- v1 [label=\"a\"];\n"
            "  v1 -- v2 [label=\"b\", style=dashed];\n"
            "  v0 -- v2 [label=\"c\"];\n"
            "}\n");
}

TEST(Dot, SelfOppositeAlwaysDashed) {
  std::ostringstream os;
  write_dot(os, GenGraph(1, {{0, 0}}, {0}));
  EXPECT_NE(os.str().find("v0 -- v0 [style=dashed];"), std::string::npos);
}
