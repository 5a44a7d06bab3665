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

#include "spin_atlas/core/connection_graph.h"

#include <bit>

#include "absl/strings/str_cat.h"

namespace spin_atlas {

ConnectionGraph::ConnectionGraph(int order, ClassMask connected)
    : order_(order),
      connected_(connected & ((ClassMask{1} << (order + 1)) - 1)),
      neighbors_(2 * order + 2),
      labels_(2 * order + 2, 0) {
  const int n = num_vertices();
  for (int a = 0; a < n; ++a) {
    const VertexId u = VertexFromIndex(a);
    for (int b = 0; b < n; ++b) {
      const VertexId v = VertexFromIndex(b);
      if (Adjacent(u, v)) {
        neighbors_[a].push_back(v);
        labels_[a] |= ClassBit(v.cls);
      }
    }
  }
}

bool ConnectionGraph::Adjacent(VertexId u, VertexId v) const {
  if (!Contains(u) || !Contains(v) || u == v) return false;
  if (v == Conjugate(u)) return IsConnected(u.cls);
  return Side(u) != Side(v);
}

std::vector<ClassIndex> ConnectionGraph::connected_pairs() const {
  return MaskToClasses(connected_);
}

std::vector<VertexId> ConnectionGraph::Vertices() const {
  std::vector<VertexId> out;
  for (int a = 0; a < num_vertices(); ++a) out.push_back(VertexFromIndex(a));
  return out;
}

ConnectionGraph BuildConnectionGraph(const GraphClass& gc) {
  const std::vector<int> k = KTuple(gc);
  ClassMask connected = 0;
  for (int l = 0; l <= gc.order; ++l) {
    if (k[l] >= 2) connected |= ClassBit(l);
  }
  return ConnectionGraph(gc.order, connected);
}

int EpsilonDegree(const ConnectionGraph& cg, VertexId v) {
  return cg.Degree(v);
}

std::vector<ClassIndex> LabelSet(const ConnectionGraph& cg, VertexId v) {
  return MaskToClasses(cg.LabelMask(v));
}

std::vector<ClassIndex> MaskToClasses(ClassMask mask) {
  std::vector<ClassIndex> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

ClassMask ClassesToMask(const std::vector<ClassIndex>& classes) {
  ClassMask mask = 0;
  for (ClassIndex c : classes) mask |= ClassBit(c);
  return mask;
}

int PopCount(ClassMask mask) { return std::popcount(mask); }

absl::StatusOr<std::vector<EdgeMultiplicity>> EdgeMultiplicitiesRLe2(
    const GraphClass& gc) {
  if (absl::Status s = ValidateGraphClass(gc); !s.ok()) return s;
  if (gc.order > 2) {
    return absl::UnimplementedError(absl::StrCat(
        "edge multiplicities are only defined for r <= 2, got r=", gc.order));
  }
  const std::vector<int> k = KTuple(gc);
  const ConnectionGraph cg = BuildConnectionGraph(gc);
  std::vector<EdgeMultiplicity> out;
  for (VertexId u : cg.Vertices()) {
    for (VertexId v : cg.Neighbors(u)) {
      if (VertexIndex(v) < VertexIndex(u)) continue;
      EdgeMultiplicity e{u, v, 0, 0, u};
      if (u.cls == v.cls) {
        e.straight = k[u.cls] - 1;
      } else {
        e.straight = k[u.cls];
        e.arc = k[v.cls] - k[u.cls];
      }
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace spin_atlas
