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

#include "spin_atlas/faces/face.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace spin_atlas {

absl::string_view FaceKindName(FaceKind kind) {
  switch (kind) {
    case FaceKind::kStandard:
      return "Standard";
    case FaceKind::kOnePair:
      return "OnePair";
    case FaceKind::kTwoPair:
      return "TwoPair";
  }
  return "?";
}

Face CanonicalFace(const std::array<VertexId, 4>& cycle) {
  Face best{cycle};
  for (int k = 0; k < 4; ++k) {
    Face fwd, bwd;
    for (int j = 0; j < 4; ++j) {
      fwd.cycle[j] = cycle[(k + j) % 4];
      bwd.cycle[j] = cycle[(k - j + 4) % 4];
    }
    best = std::min({best, fwd, bwd});
  }
  return best;
}

bool IsFaceOf(const ConnectionGraph& cg, const Face& face) {
  for (int j = 0; j < 4; ++j) {
    if (!cg.Contains(face.cycle[j])) return false;
    for (int k = j + 1; k < 4; ++k) {
      if (face.cycle[j] == face.cycle[k]) return false;
    }
    if (!cg.Adjacent(face.cycle[j], face.cycle[(j + 1) % 4])) return false;
  }
  return true;
}

int FacePosition(const Face& face, VertexId v) {
  for (int j = 0; j < 4; ++j) {
    if (face.cycle[j] == v) return j;
  }
  return -1;
}

ClassMask FaceClasses(const Face& face) {
  ClassMask mask = 0;
  for (VertexId v : face.cycle) mask |= ClassBit(v.cls);
  return mask;
}

Face ConjugateFace(const Face& face) {
  std::array<VertexId, 4> c;
  for (int j = 0; j < 4; ++j) c[j] = Conjugate(face.cycle[j]);
  return CanonicalFace(c);
}

FaceKind GetFaceKind(const Face& face) {
  return static_cast<FaceKind>(4 - PopCount(FaceClasses(face)));
}

std::vector<Face> EnumerateFaces(const ConnectionGraph& cg) {
  // a is the least vertex of the cycle and b < d, so every 4-cycle is
  // produced once, already canonical.
  std::vector<Face> faces;
  for (VertexId a : cg.Vertices()) {
    const auto& na = cg.Neighbors(a);
    for (size_t x = 0; x < na.size(); ++x) {
      const VertexId b = na[x];
      if (b < a) continue;
      for (size_t y = x + 1; y < na.size(); ++y) {
        const VertexId d = na[y];
        if (d < a) continue;
        for (VertexId c : cg.Neighbors(b)) {
          if (c <= a || c == d) continue;
          if (cg.Adjacent(c, d)) faces.push_back(Face{{a, b, c, d}});
        }
      }
    }
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::string FaceName(const Face& face) {
  return absl::StrJoin(face.cycle, " ", [](std::string* out, VertexId v) {
    out->append(VertexName(v));
  });
}

absl::StatusOr<Face> ParseFace(absl::string_view text, int order) {
  std::vector<absl::string_view> parts =
      absl::StrSplit(text, ' ', absl::SkipEmpty());
  if (parts.size() != 4) {
    return absl::InvalidArgumentError(
        absl::StrCat("a face needs 4 vertices: '", text, "'"));
  }
  std::array<VertexId, 4> cycle;
  for (int j = 0; j < 4; ++j) {
    absl::StatusOr<VertexId> v = ParseVertexName(parts[j], order);
    if (!v.ok()) return v.status();
    cycle[j] = *v;
  }
  return CanonicalFace(cycle);
}

Cell WholeGraphCell(const ConnectionGraph& cg) {
  return Cell{cg.AllClasses()};
}

std::string CellName(const Cell& cell) {
  return absl::StrCat("{", absl::StrJoin(MaskToClasses(cell.classes), ","),
                      "}");
}

std::vector<Cell> CellsContaining(const ConnectionGraph& cg,
                                  const Face& face) {
  if (cg.order() <= 3) return {WholeGraphCell(cg)};
  const ClassMask base = FaceClasses(face);
  const std::vector<ClassIndex> rest = MaskToClasses(cg.AllClasses() & ~base);
  const int need = 4 - PopCount(base);
  std::vector<Cell> cells;
  const int m = static_cast<int>(rest.size());
  // Subsets of `rest` of size `need`.
  std::vector<int> idx(need);
  for (int j = 0; j < need; ++j) idx[j] = j;
  while (true) {
    ClassMask mask = base;
    for (int j : idx) mask |= ClassBit(rest[j]);
    cells.push_back(Cell{mask});
    int j = need - 1;
    while (j >= 0 && idx[j] == m - need + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < need; ++t) idx[t] = idx[t - 1] + 1;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool IsValidCellFor(const ConnectionGraph& cg, const Cell& cell,
                    const Face& face) {
  if ((FaceClasses(face) & ~cell.classes) != 0) return false;
  if (cg.order() <= 3) return cell.classes == cg.AllClasses();
  return PopCount(cell.classes) == 4 && (cell.classes & ~cg.AllClasses()) == 0;
}

ClassIndex DecoratedCell::ToLocalClass(ClassIndex c) const {
  auto it = std::find(classes_.begin(), classes_.end(), c);
  return it == classes_.end() ? -1
                              : static_cast<ClassIndex>(it - classes_.begin());
}

VertexId DecoratedCell::ToLocal(VertexId v) const {
  const ClassIndex lc = ToLocalClass(v.cls);
  return {lc, (Side(v) ^ (lc == 0 ? 1 : 0)) == 1};
}

VertexId DecoratedCell::ToGlobal(VertexId v) const {
  const ClassIndex gc = classes_[v.cls];
  const int side = (v.tilded ? 1 : 0) ^ (v.cls == 0 ? 1 : 0);
  return {gc, (side ^ (gc == 0 ? 1 : 0)) == 1};
}

absl::StatusOr<DecoratedCell> MakeDecoratedCell(const ConnectionGraph& cg,
                                                const Cell& cell) {
  if (PopCount(cell.classes) != 4 || (cell.classes & ~cg.AllClasses()) != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("a 3-cell needs 4 classes of the graph, got ",
                     CellName(cell)));
  }
  DecoratedCell out;
  out.classes_ = MaskToClasses(cell.classes);
  ClassMask local = 0;
  for (int j = 0; j < 4; ++j) {
    if (cg.IsConnected(out.classes_[j])) local |= ClassBit(j);
  }
  out.local_ = ConnectionGraph(3, local);
  return out;
}

}  // namespace spin_atlas
