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

#include <sstream>

#include "fixtures.hpp"
#include "sgm/engine.hpp"
#include "sgm/generate.hpp"
#include "sgm/oracle.hpp"

namespace sgm {
namespace {

TEST(EngineTest, MatchesOracleOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    auto g = random_graph(150, 4, cfg);
    auto idx = DataIndex::build(g);
    for (std::size_t n : {2u, 4u, 5u}) {
      auto q = random_walk_query(g, n, seed * 11 + n);
      EXPECT_EQ(match(q, idx), backtracking_match(q, g, MatchMode::Isomorphism)) << seed << " " << n;
    }
  }
}

TEST(EngineTest, RowsAreInjectiveAndEdgeConsistent) {
  GenConfig cfg;
  cfg.seed = 3;
  cfg.vertex_labels = 2;
  auto g = random_graph(300, 6, cfg);
  auto idx = DataIndex::build(g);
  auto q = random_walk_query(g, 5, 4);
  auto ms = match(q, idx);
  ASSERT_GT(ms.size(), 0u);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto r = ms.row(i);
    std::set<VertexId> distinct(r.begin(), r.end());
    EXPECT_EQ(distinct.size(), r.size());
    for (const auto& e : q.edges()) EXPECT_TRUE(g.has_edge(r[e.src], r[e.dst], e.label));
  }
}

TEST(EngineTest, DeterministicAcrossOptions) {
  GenConfig cfg;
  cfg.seed = 8;
  cfg.vertex_labels = 2;
  cfg.edge_labels = 2;
  auto g = random_graph(400, 12, cfg);
  auto idx = DataIndex::build(g);
  auto q = random_walk_query(g, 4, 2);
  const auto ref = match(q, idx);
  ASSERT_GT(ref.size(), 0u);
  for (int threads : {1, 2, 8})
    for (bool sched : {true, false})
      for (bool dedup : {true, false})
        for (std::size_t batch : {32u, 128u, 1024u}) {
          JoinOptions o;
          o.threads = threads;
          o.scheduling = sched;
          o.dedup = dedup;
          o.wg.batch_bytes = batch;
          o.wg.w1 = 64;
          o.wg.w2 = 48;
          o.wg.w3 = 36;
          EXPECT_EQ(match(q, idx, o), ref);
        }
}

TEST(EngineTest, SingleVertexQueryIsCandidateSet) {
  auto g = testing::example_data_graph();
  GraphBuilder b;
  b.add_vertex(testing::kA);
  auto q = std::move(b).build();
  EXPECT_EQ(match(q, DataIndex::build(g)), MatchSet(1, {0}));
}

TEST(EngineTest, RejectsDisconnectedQuery) {
  GraphBuilder b;
  b.add_vertex(0);
  b.add_vertex(0);
  auto q = std::move(b).build();
  EXPECT_THROW(match(q, DataIndex::build(testing::example_data_graph())), Error);
}

TEST(EngineTest, StatsReport) {
  auto g = testing::example_data_graph();
  auto idx = DataIndex::build(g);
  MatchStats st;
  auto ms = match(testing::example_query(), idx, {}, &st);
  EXPECT_EQ(ms.size(), 1u);
  EXPECT_EQ(st.order.size(), 4u);
  EXPECT_EQ(st.table_sizes.front(), 1u);  // C(u0) = {v0} starts the join
  EXPECT_EQ(st.table_sizes.back(), 1u);
  EXPECT_EQ(st.prealloc_violations(), 0u);
  std::ostringstream out;
  st.write(out);
  for (const char* key : {"rows_processed=", "gba_bytes=", "groups_read=", "elements_scanned=", "flush_count=",
                          "m_size.0="})
    EXPECT_NE(out.str().find(key), std::string::npos) << key;
}

TEST(EngineTest, EarlyTerminationOnEmptyTable) {
  auto g = testing::example_data_graph();
  GraphBuilder b;
  b.add_vertex(testing::kA);
  b.add_vertex(testing::kA);
  b.add_edge(0, 1, testing::kEdgeA);
  MatchStats st;
  auto ms = match(std::move(b).build(), DataIndex::build(g), {}, &st);
  EXPECT_TRUE(ms.empty());
  EXPECT_EQ(ms.width(), 2u);
}

}  // namespace
}  // namespace sgm
