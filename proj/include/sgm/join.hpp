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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sgm/common.hpp"
#include "sgm/graph.hpp"
#include "sgm/pcsr.hpp"
#include "sgm/set_ops.hpp"
#include "sgm/signature.hpp"

namespace sgm {

/// Abstract execution model. A work group (lane_width lanes) owns one row;
/// block_rows work groups form a block; W1 > W2 > W3 > lane_width are the
/// load-balancing thresholds.
struct WorkGroupModel {
  unsigned lane_width = 32;
  unsigned block_rows = 32;
  std::size_t batch_bytes = 128;
  std::size_t w1 = 4096;
  std::size_t w2 = 1024;
  std::size_t w3 = 256;

  void validate() const;
};

/// Row-major partial matches. Column j is the image of columns()[j];
/// column order is join order.
class IntermediateTable {
 public:
  IntermediateTable() = default;
  explicit IntermediateTable(std::vector<VertexId> columns) : columns_(std::move(columns)) {}
  IntermediateTable(std::vector<VertexId> columns, std::vector<VertexId> cells)
      : columns_(std::move(columns)), cells_(std::move(cells)) {}

  std::span<const VertexId> columns() const { return columns_; }
  std::size_t width() const { return columns_.size(); }
  std::size_t rows() const { return width() == 0 ? 0 : cells_.size() / width(); }
  bool empty() const { return cells_.empty(); }
  std::span<const VertexId> row(std::size_t i) const { return {cells_.data() + i * width(), width()}; }
  std::span<const VertexId> cells() const { return cells_; }
  std::vector<VertexId>& mutable_cells() { return cells_; }
  /// Column index of query vertex u; throws if u is not matched yet.
  std::size_t column_of(VertexId u) const;

  friend bool operator==(const IntermediateTable&, const IntermediateTable&) = default;

 private:
  std::vector<VertexId> columns_;
  std::vector<VertexId> cells_;
};

/// One flat output buffer for a join step plus its offset array F.
/// Row i owns buffer[F[i], F[i+1]); valid_counts[i] of those are live.
struct Gba {
  std::vector<VertexId> buffer;
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> valid_counts;

  std::size_t capacity(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
  std::span<VertexId> segment(std::size_t i) {
    return {buffer.data() + offsets[i], capacity(i)};
  }
  std::span<const VertexId> live(std::size_t i) const {
    return {buffer.data() + offsets[i], valid_counts[i]};
  }
  std::size_t bytes() const { return buffer.size() * sizeof(VertexId); }
};

/// Query edge between the matched part and the vertex being joined.
struct LinkingEdge {
  VertexId query_neighbor;
  LabelId label;
  friend bool operator==(const LinkingEdge&, const LinkingEdge&) = default;
};

struct JoinStep {
  VertexId vertex = 0;
  std::vector<LinkingEdge> linking;
  std::size_t first_edge = 0;
};

struct JoinPlan {
  std::vector<VertexId> order;
  /// steps[i] joins order[i + 1].
  std::vector<JoinStep> steps;
};

/// Greedy order: start at argmin |C(u)|/deg(u); then repeatedly the
/// argmin-score vertex adjacent to the matched part, multiplying each
/// neighbor's score by freq(label) of the edge to the vertex just added.
/// Ties go to the smallest query vertex id.
JoinPlan plan_join_order(const Graph& q, std::span<const CandidateSet> cands, const LabelFrequency& freq);

/// Index of the linking edge whose label is rarest in the data graph; ties
/// by (label, query vertex).
std::size_t select_first_edge(std::span<const LinkingEdge> es, const LabelFrequency& freq);

/// offsets[0] = 0, offsets[i+1] = offsets[i] + xs[i].
std::vector<std::size_t> exclusive_prefix_sum(std::span<const std::size_t> xs, int threads = 0);
std::vector<std::size_t> exclusive_prefix_sum_serial(std::span<const std::size_t> xs);

/// Sizes row i's buffer by |N(v_i', l0)| where v_i' is the row's image of
/// e0's matched endpoint, and combines all buffers into one allocation.
/// Throws CapacityError if the buffer exceeds mem_cap_bytes.
Gba preallocate(const IntermediateTable& m, const LinkingEdge& e0, const Pcsr& pcsr,
                std::size_t mem_cap_bytes = kDefaultMemCap, ProbeCounter* counter = nullptr, int threads = 0);

enum class RowClass : std::uint8_t { Oversized, Block, Pooled, PerRow };

struct RowSchedule {
  /// Load > W1: one dedicated task each.
  std::vector<std::size_t> oversized;
  /// W2 < load <= W1: processed by a whole block.
  std::vector<std::size_t> block;
  /// Load in (W3, W2] within a block: work pooled and split evenly.
  std::vector<std::size_t> pooled;
  /// The rest: one work group each.
  std::vector<std::size_t> per_row;
  std::vector<RowClass> row_class;
};

/// 4-layer classification of rows by workload. Throws Error on invalid
/// thresholds.
RowSchedule schedule_rows(std::span<const std::size_t> workloads, const WorkGroupModel& wg);

/// Within one block: addr[i] is the first j with ids[j] == ids[i]; rows
/// with addr[i] != i reuse row addr[i]'s fetched neighbor list.
std::vector<std::uint32_t> dedup_shared_fetch(std::span<const VertexId> ids);

struct JoinOptions {
  bool homomorphism = false;
  WorkGroupModel wg;
  int threads = 0;
  bool scheduling = true;
  bool dedup = true;
  std::size_t mem_cap_bytes = kDefaultMemCap;
  /// Record a visit count per (row, linking edge) pair.
  bool track_visits = false;
};

struct JoinStepStats {
  std::size_t rows_in = 0;
  std::size_t rows_out = 0;
  std::size_t gba_bytes = 0;
  ProbeCounter probes;
  SetOpStats set_ops;
  std::uint64_t fetches = 0;
  std::uint64_t pair_visits = 0;
  /// Filled when JoinOptions::track_visits: min/max visits over all
  /// (row, linking edge) pairs.
  std::uint32_t min_pair_visits = 0;
  std::uint32_t max_pair_visits = 0;
  std::uint64_t prealloc_violations = 0;
  std::size_t oversized_rows = 0;
  std::size_t block_rows = 0;
  std::size_t pooled_rows = 0;
  std::size_t per_row_rows = 0;
};

/// One vertex-join iteration with a pre-allocated, combined output buffer.
/// Rows are processed independently; row order of the result is all
/// extensions of row 0, then row 1, and so on, each in ascending order.
IntermediateTable join_step(const IntermediateTable& m, const JoinStep& step, const CandidateSet& c_u,
                            const PcsrSet& pcsrs, const JoinOptions& opts = {}, JoinStepStats* stats = nullptr);

/// Serial reference of join_step: one row at a time, std algorithms, no
/// pre-allocation, scheduling or fetch sharing.
IntermediateTable join_step_serial(const IntermediateTable& m, const JoinStep& step, const CandidateSet& c_u,
                                   const PcsrSet& pcsrs, bool homomorphism = false);

}  // namespace sgm
