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
#include "sgm/graph.hpp"

namespace sgm {
namespace {

Graph parse(const std::string& text, bool multi = false) {
  std::istringstream in(text);
  return parse_graph(in, multi);
}

TEST(GraphTest, ParsesAndRemapsIds) {
  auto g = parse("t 3 2\nv 10 1\nv 20 0\nv 30 1\ne 10 20 4\ne 20 30 2\n");
  ASSERT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.external_id(0), 10);
  EXPECT_EQ(g.external_id(2), 30);
  EXPECT_EQ(g.label(1), 0u);
  EXPECT_TRUE(g.has_edge(0, 1, 4));
  EXPECT_TRUE(g.has_edge(1, 0, 4));
  EXPECT_FALSE(g.has_edge(0, 1, 2));
  EXPECT_EQ(g.num_edge_labels(), 5u);
  EXPECT_EQ(g.num_vertex_labels(), 2u);
}

TEST(GraphTest, CommentsAndBlankLines) {
  auto g = parse("# header follows\n\nt 2 1\nv 0 0 # first\nv 1 0\ne 0 1 0\n");
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(GraphTest, ErrorsCarryLineNumbers) {
  try {
    parse("t 2 1\nv 0 0\nv 1 0\ne 0 7 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("unknown vertex 7"), std::string::npos);
  }
  EXPECT_THROW(parse("v 0 0\n"), ParseError);
  EXPECT_THROW(parse("t 2 1\nv 0 0\nv 1 0\n"), ParseError);
  EXPECT_THROW(parse("t 1 0\nv 0 0 1\n"), ParseError);
  EXPECT_THROW(parse("t 2 1\nv 0 0\nv 1 0\ne 0 0 1\n"), ParseError);
  EXPECT_THROW(parse("t 2 2\nv 0 0\nv 1 0\ne 0 1 0\ne 1 0 0\n"), ParseError);
  EXPECT_THROW(parse("t 2 2\nv 0 0\nv 1 0\ne 0 1 0\ne 1 0 1\n"), ParseError);
  EXPECT_THROW(parse("t 1 0\nv 0 x\n"), ParseError);
  EXPECT_THROW(parse("t 1 0\nq 0 0\n"), ParseError);
}

TEST(GraphTest, MultiLabelParsing) {
  auto g = parse("t 2 1\nv 0 0 2\nv 1 1\ne 0 1 3 5\n", true);
  EXPECT_TRUE(g.multi_label());
  EXPECT_EQ(g.labels(0).size(), 2u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1, 3));
  EXPECT_TRUE(g.has_edge(0, 1, 5));
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(GraphTest, RoundTrip) {
  GenConfig cfg;
  cfg.seed = 4;
  auto g = random_graph(60, 3, cfg);
  std::stringstream ss;
  write_graph(ss, g);
  auto h = parse_graph(ss);
  EXPECT_TRUE(g.same_structure(h));

  auto mg = random_multilabel_graph(40, 3, cfg, 3);
  std::stringstream ms;
  write_graph(ms, mg);
  EXPECT_TRUE(mg.same_structure(parse_graph(ms, true)));
}

TEST(GraphTest, NeighborsByLabelAreSortedSlices) {
  auto g = testing::example_data_graph();
  auto na = g.neighbors(0, testing::kEdgeA);
  ASSERT_EQ(na.size(), 100u);
  for (std::size_t i = 0; i < na.size(); ++i) EXPECT_EQ(na[i].neighbor, i + 1);
  auto nb = g.neighbors(0, testing::kEdgeB);
  ASSERT_EQ(nb.size(), 1u);
  EXPECT_EQ(nb[0].neighbor, 201u);
  EXPECT_TRUE(g.neighbors(199).empty());
  EXPECT_TRUE(g.neighbors(0, 7).empty());
}

TEST(GraphTest, PartitionByEdgeLabel) {
  auto g = testing::example_data_graph();
  auto pb = partition_by_edge_label(g, testing::kEdgeB);
  EXPECT_EQ(pb.num_vertices(), 4u);
  EXPECT_EQ(pb.num_edges(), 2u);
  EXPECT_EQ(pb.vertices, (std::vector<VertexId>{0, 1, 101, 201}));
  auto pa = partition_by_edge_label(g, testing::kEdgeA);
  std::size_t total = 0;
  for (std::size_t i = 0; i < pa.num_vertices(); ++i) {
    auto ns = pa.neighbors_of(i);
    EXPECT_TRUE(std::is_sorted(ns.begin(), ns.end()));
    total += ns.size();
    std::vector<VertexId> scan;
    for (const auto& e : g.neighbors(pa.vertices[i], testing::kEdgeA)) scan.push_back(e.neighbor);
    EXPECT_EQ(std::vector<VertexId>(ns.begin(), ns.end()), scan);
  }
  EXPECT_EQ(total, 2 * pa.num_edges());
}

TEST(GraphTest, LabelFrequency) {
  auto f = label_frequency(testing::example_data_graph());
  EXPECT_EQ(freq_of(f, testing::kEdgeA), 100u + 98u + 2u);
  EXPECT_EQ(freq_of(f, testing::kEdgeB), 2u);
  EXPECT_EQ(freq_of(f, 9), 0u);
}

TEST(GraphTest, Connectivity) {
  EXPECT_TRUE(is_connected(testing::example_query()));
  EXPECT_FALSE(is_connected(testing::example_data_graph()));
  GraphBuilder b;
  b.add_vertex(0);
  EXPECT_TRUE(is_connected(std::move(b).build()));
}

}  // namespace
}  // namespace sgm
