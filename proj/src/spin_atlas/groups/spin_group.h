// Copyright 2026 The spin-atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPIN_ATLAS_GROUPS_SPIN_GROUP_H_
#define SPIN_ATLAS_GROUPS_SPIN_GROUP_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "spin_atlas/chains/chain.h"
#include "spin_atlas/core/connection_graph.h"
#include "spin_atlas/core/graph_class.h"
#include "spin_atlas/faces/face_map.h"
#include "spin_atlas/groups/permutation.h"

namespace spin_atlas {

struct SearchBudget {
  int max_steps = 6;
  // Used when the group was still growing at max_steps.
  int escalate_steps = 8;
  std::uint64_t closure_cap = 400000;
  // Run the whole budget even after the prediction is reached.
  bool exhaustive = false;
};

absl::Status ValidateBudget(const SearchBudget& budget);

GroupVerdict PredictGroup(const ConnectionGraph& cg, VertexId v);

struct SpinGroupResult {
  VertexId vertex;
  int degree = 0;
  GroupVerdict computed;
  GroupVerdict predicted;
  bool match = false;
  // More elements than the prediction allows.
  bool over_generated = false;
  // Chains that enlarged the group, with their values.
  std::vector<SpinChain> witnesses;
  std::vector<Permutation> witness_values;
  int steps_searched = 0;
  std::uint64_t chains_evaluated = 0;
};

absl::StatusOr<SpinGroupResult> SpinGroupAt(const ChainEngine& engine,
                                            VertexId v,
                                            const SearchBudget& budget);

struct ClassReport {
  GraphClass gc;
  ConnectionGraph cg;
  std::vector<SpinGroupResult> vertices;
  bool match_all = false;
};

// Vertices are processed by up to `jobs` threads; the report order is the
// vertex order regardless.
absl::StatusOr<ClassReport> VerifyClass(const GraphClass& gc,
                                        const FaceMapTables& tables,
                                        const SearchBudget& budget,
                                        int jobs = 1);

}  // namespace spin_atlas

#endif  // SPIN_ATLAS_GROUPS_SPIN_GROUP_H_
