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

#include "sgm/graph.hpp"
#include "sgm/match_set.hpp"
#include "sgm/semantics.hpp"

namespace sgm {

struct OracleLimits {
  std::size_t max_query_vertices = 10;
  std::size_t max_query_edges = 16;
  std::size_t max_data_vertices = 5000;
};

/// Plain depth-first search over query vertices 0, 1, 2, ... (or query
/// edges in edge-isomorphism mode), with label containment and, for
/// isomorphism, degree feasibility as the only pruning. Throws Error when a
/// limit is exceeded.
MatchSet backtracking_match(const Graph& q, const Graph& g, MatchMode mode, const OracleLimits& limits = {});

}  // namespace sgm
