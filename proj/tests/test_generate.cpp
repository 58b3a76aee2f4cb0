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

#include <cmath>

#include "sgm/generate.hpp"
#include "sgm/oracle.hpp"
#include "sgm/stats.hpp"

namespace sgm {
namespace {

TEST(GenerateTest, SingleLabelDomain) {
  GenConfig cfg;
  cfg.vertex_labels = 1;
  auto g = random_graph(100, 3, cfg);
  for (VertexId v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(g.label(v), 0u);
}

TEST(GenerateTest, Deterministic) {
  GenConfig cfg;
  cfg.seed = 77;
  auto a = random_graph(300, 5, cfg);
  auto b = random_graph(300, 5, cfg);
  EXPECT_TRUE(a.same_structure(b));
  EXPECT_TRUE(assign_labels(a, cfg).same_structure(assign_labels(a, cfg)));
  EXPECT_TRUE(random_walk_query(a, 5, 3).same_structure(random_walk_query(a, 5, 3)));
  cfg.seed = 78;
  EXPECT_FALSE(a.same_structure(random_graph(300, 5, cfg)));
}

TEST(GenerateTest, RequestedEdgeCount) {
  GenConfig cfg;
  auto g = random_graph(200, 4, cfg);
  EXPECT_EQ(g.num_edges(), 400u);
}

TEST(GenerateTest, ZipfRankFrequencySlope) {
  GenConfig cfg;
  cfg.edge_labels = 100;
  cfg.vertex_labels = 1;
  cfg.seed = 5;
  auto g = random_graph(20000, 10, cfg);  // 10^5 edges
  ASSERT_EQ(g.num_edges(), 100000u);
  auto f = label_frequency(g);
  std::vector<double> counts;
  for (auto [l, c] : f) counts.push_back(static_cast<double>(c));
  std::sort(counts.rbegin(), counts.rend());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(counts.size());
  for (std::size_t r = 0; r < counts.size(); ++r) {
    const double x = std::log(static_cast<double>(r + 1)), y = std::log(counts[r]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  EXPECT_NEAR(slope, -1.0, 0.15);
}

TEST(GenerateTest, AssignLabelsKeepsStructure) {
  GenConfig cfg;
  auto g = random_graph(100, 4, cfg);
  cfg.seed = 9;
  cfg.vertex_labels = 7;
  auto h = assign_labels(g, cfg);
  ASSERT_EQ(h.num_vertices(), g.num_vertices());
  auto ge = g.edges(), he = h.edges();
  ASSERT_EQ(ge.size(), he.size());
  for (std::size_t i = 0; i < ge.size(); ++i) {
    EXPECT_EQ(ge[i].src, he[i].src);
    EXPECT_EQ(ge[i].dst, he[i].dst);
  }
}

TEST(GenerateTest, WalkQueriesAreConnectedAndMatch) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    auto g = random_graph(200, 4, cfg);
    for (std::size_t n : {1u, 3u, 6u}) {
      auto q = random_walk_query(g, n, seed);
      EXPECT_EQ(q.num_vertices(), n);
      EXPECT_TRUE(is_connected(q));
      EXPECT_GE(backtracking_match(q, g, MatchMode::Isomorphism).size(), 1u);
    }
  }
}

TEST(GenerateTest, WalkFailsOnTinyComponents) {
  GraphBuilder b;
  b.add_vertex(0);
  b.add_vertex(0);
  b.add_edge(0, 1, 0);
  auto g = std::move(b).build();
  EXPECT_THROW(random_walk_query(g, 3, 1, 5), Error);
}

TEST(GenerateTest, DropLabelsKeepsOne) {
  GenConfig cfg;
  auto g = random_multilabel_graph(50, 4, cfg, 3);
  auto q = drop_labels(random_walk_query(g, 5, 2), 3, 0.99);
  for (VertexId v = 0; v < q.num_vertices(); ++v) EXPECT_GE(q.labels(v).size(), 1u);
  EXPECT_TRUE(is_connected(q));
}

TEST(StatsTest, Summary) {
  auto s = summarize({4, 1, 3, 2});
  EXPECT_EQ(s.count, 4u);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.p50, 2);
  EXPECT_DOUBLE_EQ(s.p95, 4);
  EXPECT_DOUBLE_EQ(s.max, 4);
  EXPECT_EQ(summarize({}).count, 0u);
}

}  // namespace
}  // namespace sgm
