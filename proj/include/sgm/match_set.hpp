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

#include <span>
#include <vector>

#include "sgm/common.hpp"

namespace sgm {

/// Flat table of full matches. Column j holds the image of query vertex j
/// (or of query edge j in edge-isomorphism mode).
class MatchSet {
 public:
  MatchSet() = default;
  explicit MatchSet(std::size_t width) : width_(width) {}
  MatchSet(std::size_t width, std::vector<VertexId> cells) : width_(width), cells_(std::move(cells)) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return width_ == 0 ? 0 : cells_.size() / width_; }
  bool empty() const { return cells_.empty(); }
  std::span<const VertexId> row(std::size_t i) const { return {cells_.data() + i * width_, width_}; }
  std::span<const VertexId> cells() const { return cells_; }

  void push_row(std::span<const VertexId> r) { cells_.insert(cells_.end(), r.begin(), r.end()); }

  /// Sorts rows lexicographically and drops duplicates. Returns the number
  /// of duplicates removed.
  std::size_t canonicalize();

  /// True if every row of this set appears in `other`. Both canonical.
  bool subset_of(const MatchSet& other) const;

  friend bool operator==(const MatchSet&, const MatchSet&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<VertexId> cells_;
};

}  // namespace sgm
