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

#ifndef SPIN_ATLAS_CORE_GRAPH_CLASS_H_
#define SPIN_ATLAS_CORE_GRAPH_CLASS_H_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace spin_atlas {

// Index of a conjugate-pair class: 0 is the head class P, l is P_l.
using ClassIndex = int;

// Largest order supported by the bitmask representations.
inline constexpr int kMaxOrder = 60;

struct VertexId {
  ClassIndex cls = 0;
  bool tilded = false;

  auto operator<=>(const VertexId&) const = default;
};

inline VertexId Conjugate(VertexId v) { return {v.cls, !v.tilded}; }

// Bipartition side of the basic graph.
inline int Side(VertexId v) {
  return (v.tilded ? 1 : 0) ^ (v.cls == 0 ? 1 : 0);
}

// Dense index 2 * class + tilded.
inline int VertexIndex(VertexId v) { return 2 * v.cls + (v.tilded ? 1 : 0); }
inline VertexId VertexFromIndex(int index) {
  return {index / 2, (index % 2) == 1};
}

// "P", "~P", "P3", "~P3".
std::string VertexName(VertexId v);
absl::StatusOr<VertexId> ParseVertexName(absl::string_view name, int order);

// The isomorphism class S_{i,p_1..p_r}(g).
struct GraphClass {
  int genus = 0;
  int order = 0;
  int i = 0;
  std::vector<int> p;

  bool operator==(const GraphClass&) const = default;
};

// Names the violated invariant on failure.
absl::Status ValidateGraphClass(const GraphClass& gc);
absl::StatusOr<GraphClass> MakeGraphClass(int genus, int order, int i,
                                          std::vector<int> p);

// (k_0, .., k_r).
std::vector<int> KTuple(const GraphClass& gc);

int GenusOf(int order, int i, const std::vector<int>& p);

// All classes of the genus, sorted by (order, i, p).
std::vector<GraphClass> EnumerateClasses(int genus,
                                         std::optional<int> order = {});

// Classes l with k_l = k_0.
std::vector<ClassIndex> Heads(const GraphClass& gc);

std::string ClassLabel(const GraphClass& gc);

}  // namespace spin_atlas

#endif  // SPIN_ATLAS_CORE_GRAPH_CLASS_H_
