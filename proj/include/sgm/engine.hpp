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

#include <iosfwd>
#include <vector>

#include "sgm/graph.hpp"
#include "sgm/join.hpp"
#include "sgm/match_set.hpp"
#include "sgm/pcsr.hpp"
#include "sgm/signature.hpp"

namespace sgm {

struct IndexOptions {
  unsigned gpn = kDefaultGpn;
  SignatureParams signature;
  int threads = 0;
};

/// Everything built once per data graph: signature table, one PCSR per edge
/// label and label frequencies. Borrows the graph, which must outlive it.
class DataIndex {
 public:
  static DataIndex build(const Graph& g, const IndexOptions& opts = {});

  const Graph& graph() const { return *g_; }
  const SignatureTable& signatures() const { return signatures_; }
  const PcsrSet& pcsrs() const { return pcsrs_; }
  const LabelFrequency& frequency() const { return frequency_; }

 private:
  const Graph* g_ = nullptr;
  SignatureTable signatures_;
  PcsrSet pcsrs_;
  LabelFrequency frequency_;
};

struct MatchStats {
  std::vector<std::size_t> candidate_sizes;
  std::vector<VertexId> order;
  /// |M| after the initial table and after every executed step.
  std::vector<std::size_t> table_sizes;
  std::vector<JoinStepStats> steps;

  std::size_t rows_processed() const;
  std::size_t gba_bytes() const;
  ProbeCounter probes() const;
  SetOpStats set_ops() const;
  std::uint64_t prealloc_violations() const;

  /// key=value lines.
  void write(std::ostream& out) const;
};

/// All matches of q in the indexed graph. Rows are in query-vertex-id order
/// and canonically sorted. Throws Error on a disconnected or empty query.
MatchSet match(const Graph& q, const DataIndex& index, const JoinOptions& opts = {}, MatchStats* stats = nullptr);

/// Candidate sets as the engine uses them (signature filter, plus label
/// containment in multi-label mode).
std::vector<CandidateSet> engine_candidates(const Graph& q, const DataIndex& index, int threads = 0);

}  // namespace sgm
