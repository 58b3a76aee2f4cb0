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
#include "sgm/generate.hpp"
#include "sgm/pcsr.hpp"

namespace sgm {
namespace {

void expect_lookups_match(const PartitionedGraph& d, const Pcsr& p) {
  for (std::size_t i = 0; i < d.num_vertices(); ++i) {
    auto want = d.neighbors_of(i);
    auto got = p.neighbors(d.vertices[i]);
    ASSERT_EQ(std::vector<VertexId>(got.begin(), got.end()), std::vector<VertexId>(want.begin(), want.end()))
        << "vertex " << d.vertices[i];
  }
}

TEST(PcsrTest, LookupsEqualPartitionAcrossGpn) {
  for (unsigned gpn : {2u, 4u, 8u, 16u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto d = testing::random_partition(50 + 300 * seed, 3, seed);
      auto p = Pcsr::build(d, gpn, seed * 7 + 1);
      EXPECT_EQ(p.num_groups(), d.num_vertices());
      expect_lookups_match(d, p);
    }
  }
}

TEST(PcsrTest, AbsentVerticesHaveNoNeighbors) {
  auto d = testing::random_partition(500, 2, 3);
  auto p = Pcsr::build(d);
  std::set<VertexId> present(d.vertices.begin(), d.vertices.end());
  for (VertexId v = 0; v < 2000; ++v) {
    if (present.count(v)) continue;
    ProbeCounter c;
    EXPECT_FALSE(p.locate(v, &c).has_value());
    EXPECT_TRUE(p.neighbors(v).empty());
    EXPECT_GE(c.groups_read, 1u);
  }
}

TEST(PcsrTest, EmptyPartition) {
  PartitionedGraph d;
  auto p = Pcsr::build(d);
  EXPECT_EQ(p.num_groups(), 0u);
  EXPECT_TRUE(p.neighbors(0).empty());
  EXPECT_FALSE(p.locate(5).has_value());
}

TEST(PcsrTest, SingleVertexPartitionIsOneGroup) {
  PartitionedGraph d;
  d.vertices = {7};
  d.neighbors = {};
  d.offsets = {0, 0};
  auto p = Pcsr::build(d);
  ASSERT_EQ(p.num_groups(), 1u);
  auto loc = p.locate(7);
  ASSERT_TRUE(loc.has_value());
  EXPECT_EQ(loc->group, 0u);
  EXPECT_EQ(loc->slot, 0u);
}

TEST(PcsrTest, RejectsBadGpn) {
  auto d = testing::random_partition(10, 2, 1);
  EXPECT_THROW(Pcsr::build(d, 1), Error);
  EXPECT_THROW(Pcsr::build(d, 17), Error);
}

TEST(PcsrTest, GroupLayout) {
  auto d = testing::random_partition(2000, 3, 11);
  auto p = Pcsr::build(d, 4);
  std::set<VertexId> seen;
  for (std::size_t g = 0; g < p.num_groups(); ++g) {
    auto slots = p.group(g);
    bool empty_seen = false;
    for (unsigned s = 0; s + 1 < p.gpn(); ++s) {
      if (slots[s].vertex == kNoVertex) {
        empty_seen = true;
      } else {
        EXPECT_FALSE(empty_seen) << "pairs must be prefix-packed";
        EXPECT_TRUE(seen.insert(slots[s].vertex).second);
      }
    }
    const auto gid = slots[p.gpn() - 1].vertex;
    EXPECT_TRUE(gid == kNoGroup || gid < p.num_groups());
  }
  EXPECT_EQ(seen.size(), d.num_vertices());
  EXPECT_EQ(p.stored_vertices().size(), d.num_vertices());
}

TEST(PcsrTest, ExampleHomeGroupAndOffsets) {
  // Find a seed that sends v0 to group 0 of P(G, a), then check v0's pair.
  auto g = testing::example_data_graph();
  auto d = partition_by_edge_label(g, testing::kEdgeA);
  std::uint64_t seed = 0;
  while (mix64(0, seed) % d.num_vertices() != 0) ++seed;
  auto p = Pcsr::build(d, kDefaultGpn, seed);
  auto loc = p.locate(0);
  ASSERT_TRUE(loc.has_value());
  EXPECT_EQ(loc->group, 0u);
  EXPECT_EQ(loc->slot, 0u);
  EXPECT_EQ(p.group(0)[0].vertex, 0u);
  EXPECT_EQ(loc->begin, p.group(0)[0].offset);
  EXPECT_EQ(loc->end - loc->begin, 100u);
}

TEST(PcsrTest, DumpLoadRoundTrip) {
  auto d = testing::random_partition(300, 3, 5, 9);
  auto p = Pcsr::build(d, 8, 42);
  std::stringstream ss;
  p.dump(ss);
  const std::string bytes = ss.str();
  EXPECT_EQ(bytes.substr(0, 4), "PCSR");
  auto q = Pcsr::load(ss);
  EXPECT_EQ(p, q);
  EXPECT_EQ(q.edge_label(), 9u);
  std::stringstream bad("PCSX");
  EXPECT_THROW(Pcsr::load(bad), Error);
}

TEST(PcsrTest, PcsrSetCoversEveryLabel) {
  GenConfig cfg;
  cfg.edge_labels = 6;
  cfg.seed = 8;
  auto g = random_graph(400, 6, cfg);
  auto set = PcsrSet::build(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (LabelId l = 0; l < 8; ++l) {
      std::vector<VertexId> want;
      for (const auto& e : g.neighbors(v, l)) want.push_back(e.neighbor);
      auto got = set[l].neighbors(v);
      EXPECT_EQ(std::vector<VertexId>(got.begin(), got.end()), want);
    }
}

TEST(BaselineTest, AllLayoutsAgree) {
  GenConfig cfg;
  cfg.edge_labels = 10;
  cfg.seed = 3;
  auto g = random_graph(300, 8, cfg);
  auto pc = PcsrSet::build(g);
  std::vector<VertexId> out;
  for (auto kind : {BaselineKind::CsrFullScan, BaselineKind::Basic, BaselineKind::Compressed}) {
    auto b = BaselineIndex::build(g, kind);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      for (LabelId l = 0; l < 10; ++l) {
        b.neighbors(v, l, out);
        auto want = pc[l].neighbors(v);
        EXPECT_EQ(out, std::vector<VertexId>(want.begin(), want.end()));
      }
  }
}

TEST(BaselineTest, ProbeCostModel) {
  auto g = testing::example_data_graph();
  std::vector<VertexId> out;
  ProbeCounter full, basic, comp;
  BaselineIndex::build(g, BaselineKind::CsrFullScan).neighbors(0, testing::kEdgeB, out, &full);
  EXPECT_EQ(full.groups_read, 1u);
  EXPECT_EQ(full.elements_scanned, 101u);
  BaselineIndex::build(g, BaselineKind::Basic).neighbors(0, testing::kEdgeB, out, &basic);
  EXPECT_EQ(basic.groups_read, 1u);
  EXPECT_EQ(basic.elements_scanned, 1u);
  BaselineIndex::build(g, BaselineKind::Compressed).neighbors(0, testing::kEdgeB, out, &comp);
  EXPECT_LE(comp.groups_read, 3u + 2u);  // ceil(log2(4 + 1)) steps, then the offset pair
  EXPECT_EQ(comp.elements_scanned, 1u);
}

TEST(BaselineTest, BasicRespectsMemoryCap) {
  auto g = testing::example_data_graph();
  EXPECT_THROW(BaselineIndex::build(g, BaselineKind::Basic, 100), CapacityError);
  EXPECT_NO_THROW(BaselineIndex::build(g, BaselineKind::Basic, 1 << 20));
}

}  // namespace
}  // namespace sgm
