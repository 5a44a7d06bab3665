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

#ifndef SPIN_ATLAS_FACES_FACE_H_
#define SPIN_ATLAS_FACES_FACE_H_

#include <array>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "spin_atlas/core/connection_graph.h"
#include "spin_atlas/core/graph_class.h"

namespace spin_atlas {

enum class FaceKind { kStandard = 0, kOnePair = 1, kTwoPair = 2 };

absl::string_view FaceKindName(FaceKind kind);

// A 4-cycle, stored as its lexicographically least rotation/reflection.
struct Face {
  std::array<VertexId, 4> cycle;

  auto operator<=>(const Face&) const = default;
};

Face CanonicalFace(const std::array<VertexId, 4>& cycle);
bool IsFaceOf(const ConnectionGraph& cg, const Face& face);
// Position of v in the cycle, or -1.
int FacePosition(const Face& face, VertexId v);
inline bool FaceContains(const Face& face, VertexId v) {
  return FacePosition(face, v) >= 0;
}
ClassMask FaceClasses(const Face& face);
Face ConjugateFace(const Face& face);
FaceKind GetFaceKind(const Face& face);

// All 4-cycles, sorted.
std::vector<Face> EnumerateFaces(const ConnectionGraph& cg);

// "P P1 ~P3 P2".
std::string FaceName(const Face& face);
absl::StatusOr<Face> ParseFace(absl::string_view text, int order);

// A set of conjugate-pair classes: four classes at r >= 4, the whole graph
// otherwise.
struct Cell {
  ClassMask classes = 0;

  auto operator<=>(const Cell&) const = default;
};

Cell WholeGraphCell(const ConnectionGraph& cg);
std::string CellName(const Cell& cell);
// Cells through the face, sorted.
std::vector<Cell> CellsContaining(const ConnectionGraph& cg, const Face& face);
bool IsValidCellFor(const ConnectionGraph& cg, const Cell& cell,
                    const Face& face);

// A 3-cell seen as an order-3 graph. Local class = rank in the cell; the
// parity is adjusted to keep sides (and adjacency).
class DecoratedCell {
 public:
  const ConnectionGraph& local() const { return local_; }
  const std::vector<ClassIndex>& classes() const { return classes_; }
  ClassIndex ToLocalClass(ClassIndex c) const;
  ClassIndex ToGlobalClass(ClassIndex c) const { return classes_[c]; }
  VertexId ToLocal(VertexId v) const;
  VertexId ToGlobal(VertexId v) const;

 private:
  friend absl::StatusOr<DecoratedCell> MakeDecoratedCell(
      const ConnectionGraph& cg, const Cell& cell);
  ConnectionGraph local_;
  std::vector<ClassIndex> classes_;
};

absl::StatusOr<DecoratedCell> MakeDecoratedCell(const ConnectionGraph& cg,
                                                const Cell& cell);

}  // namespace spin_atlas

#endif  // SPIN_ATLAS_FACES_FACE_H_
