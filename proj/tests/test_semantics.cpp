// Copyright 2026 The sgm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sgm/generate.hpp"
#include "sgm/oracle.hpp"
#include "sgm/semantics.hpp"

namespace sgm {
namespace {

Graph star(int leaves, LabelId el = 0) {
  GraphBuilder b;
  b.add_vertex(0);
  for (int i = 0; i < leaves; ++i) b.add_vertex(1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, static_cast<VertexId>(i), el);
  return std::move(b).build();
}

Graph path2(LabelId a, LabelId b) {
  GraphBuilder gb;
  gb.add_vertex(a);
  gb.add_vertex(b);
  gb.add_edge(0, 1, 0);
  return std::move(gb).build();
}

TEST(ModeTest, ParseAndPrint) {
  for (auto m : {MatchMode::Isomorphism, MatchMode::Homomorphism, MatchMode::EdgeIsomorphism})
    EXPECT_EQ(parse_mode(to_string(m)), m);
  EXPECT_THROW(parse_mode("iso2"), Error);
}

TEST(LineGraphTest, StarBecomesTriangle) {
  auto lg = line_graph_transform(star(3, 4));
  EXPECT_EQ(lg.graph.num_vertices(), 3u);
  EXPECT_EQ(lg.graph.num_edges(), 3u);
  for (VertexId a = 0; a < 3; ++a) {
    EXPECT_EQ(lg.graph.label(a), 4u);
    for (VertexId c = a + 1; c < 3; ++c) EXPECT_TRUE(lg.graph.has_edge(a, c, 0));  // centre label
  }
}

TEST(LineGraphTest, SingleEdge) {
  auto lg = line_graph_transform(path2(0, 1));
  EXPECT_EQ(lg.graph.num_vertices(), 1u);
  EXPECT_EQ(lg.graph.num_edges(), 0u);
  EXPECT_EQ(lg.map.edge(0).src, 0u);
  EXPECT_EQ(lg.map.edge(0).dst, 1u);
}

TEST(LineGraphTest, EdgeCountIsDegreeSum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    auto g = random_graph(80, 4, cfg);
    auto lg = line_graph_transform(g);
    std::size_t want = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) want += g.degree(v) * (g.degree(v) - (g.degree(v) ? 1 : 0)) / 2;
    EXPECT_EQ(lg.graph.num_vertices(), g.num_edges());
    EXPECT_EQ(lg.graph.num_edges(), want);
    // Forward map is a bijection onto the sorted edge list.
    EXPECT_EQ(lg.map.edges, g.edges());
    for (VertexId i = 0; i < lg.graph.num_vertices(); ++i) EXPECT_EQ(lg.graph.label(i), lg.map.edge(i).label);
  }
}

TEST(LineGraphTest, Cap) { EXPECT_THROW(line_graph_transform(star(10), 44), CapacityError); }

TEST(MultiLabelTest, ExpansionIsParallelEntries) {
  GraphBuilder b(true);
  b.add_vertex({0});
  b.add_vertex({1});
  b.add_edge(0, 1, 2);
  b.add_edge(0, 1, 5);
  auto g = std::move(b).build();
  auto e = expand_multilabel(g);
  EXPECT_EQ(e.edges(), (std::vector<EdgeRecord>{{0, 1, 2}, {0, 1, 5}}));
  EXPECT_TRUE(e.same_structure(g));
  GenConfig cfg;
  auto single = random_graph(30, 3, cfg);
  EXPECT_EQ(expand_multilabel(single).edges(), single.edges());
}

TEST(ModeMatchTest, SmallHomVersusIso) {
  // a-b query on a single edge with labels (0, 0): two matches either way.
  auto g = path2(0, 0);
  auto q = path2(0, 0);
  EXPECT_EQ(match_with_mode(q, g, MatchMode::Isomorphism).size(), 2u);
  EXPECT_EQ(match_with_mode(q, g, MatchMode::Homomorphism).size(), 2u);
  // Two label-1 leaves on a label-0 centre against a single label-1 leaf:
  // hom folds both leaves onto it, iso finds nothing.
  auto q2 = star(2);
  auto g2 = star(1);
  EXPECT_EQ(match_with_mode(q2, g2, MatchMode::Isomorphism).size(), 0u);
  EXPECT_EQ(match_with_mode(q2, g2, MatchMode::Homomorphism).size(), 1u);
  EXPECT_EQ(backtracking_match(q2, g2, MatchMode::Homomorphism).size(), 1u);
}

TEST(ModeMatchTest, EdgeIsoOnStarPattern) {
  // Two-edge path query on a 3-star: any ordered pair of distinct edges.
  auto g = star(3);
  GraphBuilder b;
  b.add_vertex(1);
  b.add_vertex(0);
  b.add_vertex(1);
  b.add_edge(0, 1, 0);
  b.add_edge(1, 2, 0);
  auto q = std::move(b).build();
  ModeStats st;
  auto got = match_with_mode(q, g, MatchMode::EdgeIsomorphism, {}, &st);
  EXPECT_EQ(got.size(), 6u);
  EXPECT_EQ(got, backtracking_match(q, g, MatchMode::EdgeIsomorphism));
  EXPECT_EQ(st.collapsed_duplicates, 0u);
}

TEST(ModeMatchTest, EdgeIsoRejectsSpuriousAdjacency) {
  // Query: two disjoint-endpoint edges joined by a middle edge (path of 3
  // edges). Data: a triangle plus pendant. Mapped rows must keep the outer
  // query edges on non-touching data edges.
  GenConfig cfg;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    cfg.seed = seed;
    cfg.vertex_labels = 1;
    cfg.edge_labels = 1;
    auto g = random_graph(12, 4, cfg);
    auto q = random_walk_query(g, 4, seed);
    EXPECT_EQ(match_with_mode(q, g, MatchMode::EdgeIsomorphism), backtracking_match(q, g, MatchMode::EdgeIsomorphism));
  }
}

TEST(ModeMatchTest, EdgeIsoNeedsAnEdge) {
  GraphBuilder b;
  b.add_vertex(0);
  auto q = std::move(b).build();
  EXPECT_THROW(match_with_mode(q, star(2), MatchMode::EdgeIsomorphism), Error);
}

TEST(ModeMatchTest, HomContainsIso) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.vertex_labels = 2;
    auto g = random_graph(60, 4, cfg);
    auto q = random_walk_query(g, 4, seed);
    auto iso = match_with_mode(q, g, MatchMode::Isomorphism);
    auto hom = match_with_mode(q, g, MatchMode::Homomorphism);
    EXPECT_GE(iso.size(), 1u);
    EXPECT_TRUE(iso.subset_of(hom));
  }
}

TEST(ModeMatchTest, MultiLabelContainment) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.vertex_labels = 3;
    cfg.edge_labels = 3;
    auto g = random_multilabel_graph(60, 4, cfg, 3);
    auto q = drop_labels(random_walk_query(g, 4, seed), seed);
    auto got = match_with_mode(q, g, MatchMode::Isomorphism);
    EXPECT_GE(got.size(), 1u);
    EXPECT_EQ(got, backtracking_match(q, g, MatchMode::Isomorphism));
  }
}

}  // namespace
}  // namespace sgm
