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

#ifndef SPIN_ATLAS_CHAINS_CHAIN_H_
#define SPIN_ATLAS_CHAINS_CHAIN_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "spin_atlas/core/connection_graph.h"
#include "spin_atlas/faces/face.h"
#include "spin_atlas/faces/face_map.h"
#include "spin_atlas/groups/permutation.h"

namespace spin_atlas {

struct ChainStep {
  Cell cell;
  Face face;
  VertexId next;

  bool operator==(const ChainStep&) const = default;
};

// A based loop with a (cell, face) per step; the last step returns to start.
struct SpinChain {
  VertexId start;
  std::vector<ChainStep> steps;

  bool operator==(const SpinChain&) const = default;
};

SpinChain ReverseChain(const SpinChain& chain);
SpinChain ConcatenateChains(const SpinChain& a, const SpinChain& b);
// "P -[P P2 ~P3 P3]-> P3 -[P P1 ~P3 P2]-> P"; cells are shown as "@{..}"
// when `show_cells` is set.
std::string ChainString(const SpinChain& chain, bool show_cells);

enum class StructuralError {
  kOk,
  kStepNotOnFace,
  kFaceNotInCell,
  kLoopNotClosed
};

absl::string_view StructuralErrorName(StructuralError e);

struct StructureCheck {
  StructuralError error = StructuralError::kOk;
  int step = -1;
  std::string message;

  bool ok() const { return error == StructuralError::kOk; }
};

StructureCheck ValidateStructure(const ConnectionGraph& cg,
                                 const SpinChain& chain);

enum class AdmissibilityReason { kComposable, kDomainMismatch, kDegreeMismatch };

absl::string_view AdmissibilityReasonName(AdmissibilityReason r);

struct AdmissibilityVerdict {
  bool admissible = true;
  std::optional<int> failing_step;
  AdmissibilityReason reason = AdmissibilityReason::kComposable;
};

// Face maps of one graph, resolved once for every (face, cell, u, v).
class ChainEngine {
 public:
  static absl::StatusOr<ChainEngine> Create(const ConnectionGraph& cg,
                                            const FaceMapTables& tables);

  const ConnectionGraph& graph() const { return cg_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Cell>& cells(int face) const { return cells_[face]; }
  // Face indices through v.
  const std::vector<int>& faces_at(VertexId v) const {
    return faces_at_[VertexIndex(v)];
  }
  int FaceIndex(const Face& face) const;
  int CellIndex(int face, const Cell& cell) const;
  const LabelMap& Map(int face, int cell, int from_pos, int to_pos) const {
    return maps_[face][cell][from_pos * 4 + to_pos];
  }

  // Precondition: ValidateStructure(chain).ok().
  AdmissibilityVerdict IsAdmissible(const SpinChain& chain) const;
  // Permutation of the positions of LabelSet(start); identity when
  // inadmissible.
  Permutation Evaluate(const SpinChain& chain) const;
  bool IsBasic(const SpinChain& chain) const;

  // Every structurally valid chain at v with 2..max_steps steps, by length
  // and then depth-first in (face, cell, next) order. Stops when `visit`
  // returns false.
  void ForEachChain(VertexId v, int max_steps,
                    const std::function<bool(const SpinChain&)>& visit) const;
  std::vector<SpinChain> EnumerateChains(VertexId v, int max_steps) const;

 private:
  struct Run {
    AdmissibilityVerdict verdict;
    Permutation value;
  };
  Run Execute(const SpinChain& chain) const;

  ConnectionGraph cg_;
  std::vector<Face> faces_;
  std::map<Face, int> face_index_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::vector<int>> faces_at_;
  // [face][cell][from * 4 + to]
  std::vector<std::vector<std::vector<LabelMap>>> maps_;
};

// Convenience forms over the built-in tables.
AdmissibilityVerdict IsAdmissible(const ConnectionGraph& cg,
                                  const SpinChain& chain);
Permutation Evaluate(const ConnectionGraph& cg, const SpinChain& chain);
std::vector<SpinChain> EnumerateChains(const ConnectionGraph& cg, VertexId v,
                                       int max_steps);
bool IsBasic(const ConnectionGraph& cg, const SpinChain& chain);

// Carried state of a partial evaluation; exposed for the group search.
class ChainCursor {
 public:
  ChainCursor(const ConnectionGraph& cg, VertexId start);

  VertexId current() const { return current_; }
  // Applies one step; false if the chain becomes inadmissible.
  bool Advance(const LabelMap& map, VertexId next, AdmissibilityReason* why);
  // Closes a segment at the start vertex and folds it into the value.
  void CloseSegment();
  // Value on start labels as a class map (valid after CloseSegment).
  Permutation Value() const;

 private:
  const ConnectionGraph* cg_;
  VertexId start_;
  VertexId current_;
  std::vector<ClassIndex> labels_;
  // phi_[c] = current label carried by start label c, or -1.
  std::vector<int> phi_;
  ClassMask image_ = 0;
  std::vector<int> value_;
};

}  // namespace spin_atlas

#endif  // SPIN_ATLAS_CHAINS_CHAIN_H_
