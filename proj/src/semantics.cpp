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

#include "sgm/semantics.hpp"

namespace sgm {

MatchMode parse_mode(std::string_view s) {
  if (s == "iso") return MatchMode::Isomorphism;
  if (s == "hom") return MatchMode::Homomorphism;
  if (s == "edge-iso") return MatchMode::EdgeIsomorphism;
  throw Error("unknown mode '" + std::string(s) + "' (expected iso, hom or edge-iso)");
}

std::string to_string(MatchMode m) {
  switch (m) {
    case MatchMode::Isomorphism: return "iso";
    case MatchMode::Homomorphism: return "hom";
    case MatchMode::EdgeIsomorphism: return "edge-iso";
  }
  return "?";
}

LineGraph line_graph_transform(const Graph& g, std::size_t max_edges) {
  if (g.multi_label()) throw Error("line-graph transform needs a single-label graph");
  std::size_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::size_t d = g.degree(v);
    total += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  if (total > max_edges)
    throw CapacityError("line graph would have " + std::to_string(total) + " edges, cap is " +
                        std::to_string(max_edges));

  LineGraph lg;
  lg.map.edges = g.edges();
  const auto& edges = lg.map.edges;
  GraphBuilder b;
  for (const auto& e : edges) b.add_vertex(e.label);

  // incident[v]: ids of edges with endpoint v, ascending.
  std::vector<std::vector<VertexId>> incident(g.num_vertices());
  for (VertexId i = 0; i < edges.size(); ++i) {
    incident[edges[i].src].push_back(i);
    incident[edges[i].dst].push_back(i);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& inc = incident[v];
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t c = a + 1; c < inc.size(); ++c) b.add_edge(inc[a], inc[c], g.label(v));
  }
  lg.graph = std::move(b).build();
  return lg;
}

Graph expand_multilabel(const Graph& g) {
  GraphBuilder b(true);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto ls = g.labels(v);
    b.add_vertex(std::vector<LabelId>(ls.begin(), ls.end()), g.external_id(v));
  }
  for (const auto& e : g.edges()) b.add_edge(e.src, e.dst, e.label);
  return std::move(b).build();
}

ModeMatcher::ModeMatcher(const Graph& g, MatchMode mode, const IndexOptions& io, std::size_t line_graph_cap)
    : g_(g), mode_(mode) {
  if (mode == MatchMode::EdgeIsomorphism) {
    line_ = std::make_unique<LineGraph>(line_graph_transform(g, line_graph_cap));
    index_ = DataIndex::build(line_->graph, io);
  } else {
    index_ = DataIndex::build(g, io);
  }
}

namespace {

bool share_endpoint(const EdgeRecord& a, const EdgeRecord& b) {
  return a.src == b.src || a.src == b.dst || a.dst == b.src || a.dst == b.dst;
}

}  // namespace

MatchSet ModeMatcher::match(const Graph& q, const JoinOptions& opts, ModeStats* stats) const {
  ModeStats local;
  ModeStats& st = stats ? *stats : local;
  st = ModeStats{};

  if (mode_ != MatchMode::EdgeIsomorphism) {
    JoinOptions o = opts;
    o.homomorphism = mode_ == MatchMode::Homomorphism;
    return sgm::match(q, index_, o, &st.engine);
  }

  if (q.num_edges() == 0) throw Error("edge isomorphism needs a query with at least one edge");
  const LineGraph lq = line_graph_transform(q);
  JoinOptions o = opts;
  o.homomorphism = false;
  MatchSet raw = sgm::match(lq.graph, index_, o, &st.engine);

  const auto& qe = lq.map.edges;
  const auto& ge = line_->map.edges;
  const std::size_t m = qe.size();
  MatchSet out(m);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto r = raw.row(i);
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t c = a + 1; c < m && ok; ++c)
        if (!share_endpoint(qe[a], qe[c]) && share_endpoint(ge[r[a]], ge[r[c]])) ok = false;
    if (ok)
      out.push_row(r);
    else
      ++st.rejected_rows;
  }
  st.collapsed_duplicates = out.canonicalize();
  return out;
}

MatchSet match_with_mode(const Graph& q, const Graph& g, MatchMode mode, const JoinOptions& opts, ModeStats* stats) {
  IndexOptions io;
  io.threads = opts.threads;
  ModeMatcher matcher(g, mode, io);
  return matcher.match(q, opts, stats);
}

}  // namespace sgm
