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

#ifndef SPIN_ATLAS_CORE_CONNECTION_GRAPH_H_
#define SPIN_ATLAS_CORE_CONNECTION_GRAPH_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "spin_atlas/core/graph_class.h"

namespace spin_atlas {

using ClassMask = std::uint64_t;

inline ClassMask ClassBit(ClassIndex c) { return ClassMask{1} << c; }

// Basic graph S(r) plus one chord per connected conjugate pair.
class ConnectionGraph {
 public:
  ConnectionGraph() : ConnectionGraph(0, 0) {}
  ConnectionGraph(int order, ClassMask connected);

  int order() const { return order_; }
  int num_vertices() const { return 2 * order_ + 2; }
  ClassMask connected_mask() const { return connected_; }
  std::vector<ClassIndex> connected_pairs() const;
  bool IsConnected(ClassIndex c) const { return (connected_ >> c) & 1; }

  bool Contains(VertexId v) const { return v.cls >= 0 && v.cls <= order_; }
  bool Adjacent(VertexId u, VertexId v) const;
  // Sorted by vertex index.
  const std::vector<VertexId>& Neighbors(VertexId v) const {
    return neighbors_[VertexIndex(v)];
  }
  std::vector<VertexId> Vertices() const;
  int Degree(VertexId v) const {
    return static_cast<int>(Neighbors(v).size());
  }
  // Classes of the neighbours of v.
  ClassMask LabelMask(VertexId v) const { return labels_[VertexIndex(v)]; }
  ClassMask AllClasses() const { return (ClassMask{1} << (order_ + 1)) - 1; }

  bool operator==(const ConnectionGraph& o) const {
    return order_ == o.order_ && connected_ == o.connected_;
  }

 private:
  int order_;
  ClassMask connected_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<ClassMask> labels_;
};

ConnectionGraph BuildConnectionGraph(const GraphClass& gc);

int EpsilonDegree(const ConnectionGraph& cg, VertexId v);

// Neighbour classes of v in increasing class order.
std::vector<ClassIndex> LabelSet(const ConnectionGraph& cg, VertexId v);

std::vector<ClassIndex> MaskToClasses(ClassMask mask);
ClassMask ClassesToMask(const std::vector<ClassIndex>& classes);
int PopCount(ClassMask mask);

// Edge of the full graph for r <= 2. The arc (if any) counts towards the
// divisor of arc_owner only.
struct EdgeMultiplicity {
  VertexId u;
  VertexId v;
  int straight = 0;
  int arc = 0;
  VertexId arc_owner;

  bool operator==(const EdgeMultiplicity&) const = default;
};

absl::StatusOr<std::vector<EdgeMultiplicity>> EdgeMultiplicitiesRLe2(
    const GraphClass& gc);

}  // namespace spin_atlas

#endif  // SPIN_ATLAS_CORE_CONNECTION_GRAPH_H_
