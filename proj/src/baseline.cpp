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

#include <algorithm>

#include "sgm/pcsr.hpp"

namespace sgm {

BaselineIndex BaselineIndex::build(const Graph& g, BaselineKind kind, std::size_t mem_cap_bytes) {
  BaselineIndex b;
  b.kind_ = kind;
  b.num_vertices_ = g.num_vertices();
  const std::size_t n = g.num_vertices();

  if (kind == BaselineKind::CsrFullScan) {
    b.row_offsets_.reserve(n + 1);
    b.row_offsets_.push_back(0);
    for (VertexId v = 0; v < n; ++v) {
      auto adj = g.neighbors(v);
      b.entries_.insert(b.entries_.end(), adj.begin(), adj.end());
      b.row_offsets_.push_back(static_cast<std::uint32_t>(b.entries_.size()));
    }
    return b;
  }

  if (kind == BaselineKind::Basic) {
    const std::size_t need = std::size_t{g.num_edge_labels()} * (n + 1) * sizeof(std::uint32_t);
    if (need > mem_cap_bytes)
      throw CapacityError("basic representation needs " + std::to_string(need) + " bytes of row offsets, cap is " +
                          std::to_string(mem_cap_bytes));
  }

  b.layers_.resize(g.num_edge_labels());
  for (LabelId l = 0; l < g.num_edge_labels(); ++l) {
    auto& layer = b.layers_[l];
    if (kind == BaselineKind::Basic) {
      layer.offsets.reserve(n + 1);
      layer.offsets.push_back(0);
      for (VertexId v = 0; v < n; ++v) {
        for (const auto& e : g.neighbors(v, l)) layer.ci.push_back(e.neighbor);
        layer.offsets.push_back(static_cast<std::uint32_t>(layer.ci.size()));
      }
    } else {
      auto d = partition_by_edge_label(g, l);
      layer.vertex_ids = std::move(d.vertices);
      layer.ci = std::move(d.neighbors);
      layer.offsets.assign(d.offsets.begin(), d.offsets.end());
    }
  }
  return b;
}

void BaselineIndex::neighbors(VertexId v, LabelId l, std::vector<VertexId>& out, ProbeCounter* counter) const {
  out.clear();
  ProbeCounter local;
  switch (kind_) {
    case BaselineKind::CsrFullScan: {
      if (v >= num_vertices_) break;
      ++local.groups_read;  // row_offsets[v], row_offsets[v+1]
      for (auto i = row_offsets_[v]; i < row_offsets_[v + 1]; ++i) {
        ++local.elements_scanned;
        if (entries_[i].label == l) out.push_back(entries_[i].neighbor);
      }
      break;
    }
    case BaselineKind::Basic: {
      ++local.groups_read;
      if (l >= layers_.size() || v >= num_vertices_) break;
      const auto& layer = layers_[l];
      for (auto i = layer.offsets[v]; i < layer.offsets[v + 1]; ++i) out.push_back(layer.ci[i]);
      local.elements_scanned += out.size();
      break;
    }
    case BaselineKind::Compressed: {
      if (l >= layers_.size()) break;
      const auto& layer = layers_[l];
      // One probe per binary-search step on the vertex-id layer, then two
      // for the offset pair.
      std::size_t lo = 0;
      std::size_t hi = layer.vertex_ids.size();
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        ++local.groups_read;
        const auto x = layer.vertex_ids[mid];
        if (x == v) {
          local.groups_read += 2;
          for (auto i = layer.offsets[mid]; i < layer.offsets[mid + 1]; ++i) out.push_back(layer.ci[i]);
          local.elements_scanned += out.size();
          break;
        }
        if (x < v)
          lo = mid + 1;
        else
          hi = mid;
      }
      break;
    }
  }
  if (counter) *counter += local;
}

std::size_t BaselineIndex::memory_bytes() const {
  std::size_t total = row_offsets_.size() * sizeof(std::uint32_t) + entries_.size() * sizeof(AdjEntry);
  for (const auto& layer : layers_)
    total += (layer.vertex_ids.size() + layer.offsets.size() + layer.ci.size()) * sizeof(std::uint32_t);
  return total;
}

}  // namespace sgm
