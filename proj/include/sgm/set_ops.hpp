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

// Per-row set operations of the join. Inputs and outputs are ascending
// VertexId runs. Three granularities: the row itself (tiny, scanned
// linearly), a neighbor list (streamed through a staging buffer one batch at
// a time), and a candidate set (probed through its bit view).

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sgm/common.hpp"
#include "sgm/signature.hpp"

namespace sgm {

inline constexpr std::size_t kMaxBatchBytes = 4096;

struct SetOpStats {
  std::uint64_t flushes = 0;
  std::uint64_t batches = 0;

  SetOpStats& operator+=(const SetOpStats& o) {
    flushes += o.flushes;
    batches += o.batches;
    return *this;
  }
};

/// Bounded write-back cache: elements are staged and copied to the target
/// in one flush when the cache fills.
class WriteCache {
 public:
  WriteCache(std::span<VertexId> target, std::size_t batch_bytes, SetOpStats& stats);

  void push(VertexId x) {
    cache_[cached_++] = x;
    if (cached_ == capacity_) flush();
  }
  void flush();
  /// Elements pushed so far (flushed or not).
  std::size_t size() const { return flushed_ + cached_; }

 private:
  std::span<VertexId> target_;
  std::array<VertexId, kMaxBatchBytes / sizeof(VertexId)> cache_{};
  std::size_t capacity_;
  std::size_t cached_ = 0;
  std::size_t flushed_ = 0;
  SetOpStats& stats_;
};

/// Throws Error unless batch_bytes is a multiple of 4 in [4, 4096].
void validate_batch_bytes(std::size_t batch_bytes);

/// nlist minus the vertices of row.
std::vector<VertexId> set_subtract_row(std::span<const VertexId> nlist, std::span<const VertexId> row);

/// Fused first-edge pass: writes (nlist \ row) ∩ C(u) to out and returns the
/// count. An empty row skips the subtraction. out.size() >= nlist.size().
std::size_t subtract_and_filter(std::span<const VertexId> nlist, std::span<const VertexId> row, const CandidateSet& c,
                                std::span<VertexId> out, std::size_t batch_bytes, SetOpStats& stats);

/// Keeps buf[0, count) members of C(u) in place; returns the new count.
std::size_t intersect_with_candidates(std::span<VertexId> buf, std::size_t count, const CandidateSet& c,
                                      std::size_t batch_bytes, SetOpStats& stats);

/// buf[0, count) ∩ nlist in place; nlist is read batch_bytes at a time.
/// Returns the new count.
std::size_t intersect_with_neighbors(std::span<VertexId> buf, std::size_t count, std::span<const VertexId> nlist,
                                     std::size_t batch_bytes, SetOpStats& stats);

}  // namespace sgm
