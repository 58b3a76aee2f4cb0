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

#include "sgm/set_ops.hpp"

#include <algorithm>
#include <string>

namespace sgm {

void validate_batch_bytes(std::size_t batch_bytes) {
  if (batch_bytes < sizeof(VertexId) || batch_bytes > kMaxBatchBytes || batch_bytes % sizeof(VertexId) != 0)
    throw Error("batch size must be a multiple of 4 in [4, 4096] bytes, got " + std::to_string(batch_bytes));
}

WriteCache::WriteCache(std::span<VertexId> target, std::size_t batch_bytes, SetOpStats& stats)
    : target_(target), capacity_(batch_bytes / sizeof(VertexId)), stats_(stats) {}

void WriteCache::flush() {
  if (cached_ == 0) return;
  std::copy_n(cache_.begin(), cached_, target_.begin() + static_cast<std::ptrdiff_t>(flushed_));
  flushed_ += cached_;
  cached_ = 0;
  ++stats_.flushes;
}

namespace {

bool in_row(std::span<const VertexId> row, VertexId x) {
  for (auto r : row)
    if (r == x) return true;
  return false;
}

}  // namespace

std::vector<VertexId> set_subtract_row(std::span<const VertexId> nlist, std::span<const VertexId> row) {
  std::vector<VertexId> out;
  out.reserve(nlist.size());
  for (auto x : nlist)
    if (!in_row(row, x)) out.push_back(x);
  return out;
}

std::size_t subtract_and_filter(std::span<const VertexId> nlist, std::span<const VertexId> row, const CandidateSet& c,
                                std::span<VertexId> out, std::size_t batch_bytes, SetOpStats& stats) {
  WriteCache cache(out, batch_bytes, stats);
  for (auto x : nlist)
    if (!in_row(row, x) && c.contains(x)) cache.push(x);
  cache.flush();
  return cache.size();
}

std::size_t intersect_with_candidates(std::span<VertexId> buf, std::size_t count, const CandidateSet& c,
                                      std::size_t batch_bytes, SetOpStats& stats) {
  WriteCache cache(buf, batch_bytes, stats);
  for (std::size_t i = 0; i < count; ++i)
    if (c.contains(buf[i])) cache.push(buf[i]);
  cache.flush();
  return cache.size();
}

std::size_t intersect_with_neighbors(std::span<VertexId> buf, std::size_t count, std::span<const VertexId> nlist,
                                     std::size_t batch_bytes, SetOpStats& stats) {
  std::array<VertexId, kMaxBatchBytes / sizeof(VertexId)> stage;
  const std::size_t batch = batch_bytes / sizeof(VertexId);
  WriteCache cache(buf, batch_bytes, stats);
  std::size_t p = 0;
  // Skip batches that lie entirely below the smallest remaining element.
  for (std::size_t b = 0; b < nlist.size() && p < count; b += batch) {
    const std::size_t len = std::min(batch, nlist.size() - b);
    if (nlist[b + len - 1] < buf[p]) continue;
    std::copy_n(nlist.begin() + static_cast<std::ptrdiff_t>(b), len, stage.begin());
    ++stats.batches;
    std::size_t q = 0;
    while (p < count && q < len) {
      if (buf[p] < stage[q]) {
        ++p;
      } else if (stage[q] < buf[p]) {
        ++q;
      } else {
        cache.push(buf[p]);
        ++p;
        ++q;
      }
    }
  }
  cache.flush();
  return cache.size();
}

}  // namespace sgm
