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

#ifndef SPIN_ATLAS_FACES_FACE_MAP_H_
#define SPIN_ATLAS_FACES_FACE_MAP_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "spin_atlas/core/connection_graph.h"
#include "spin_atlas/faces/face.h"

namespace spin_atlas {

// Partial bijection between class labels of two vertices.
class LabelMap {
 public:
  LabelMap() = default;
  explicit LabelMap(int num_classes) : image_(num_classes, -1) {}

  int num_classes() const { return static_cast<int>(image_.size()); }
  ClassIndex Get(ClassIndex c) const {
    return c < num_classes() ? image_[c] : -1;
  }
  // Fails if `from` is already mapped or `to` already hit.
  absl::Status Set(ClassIndex from, ClassIndex to);
  ClassMask domain() const { return domain_; }
  ClassMask image() const { return image_mask_; }
  int size() const { return PopCount(domain_); }

  LabelMap Inverse() const;
  // x -> next(this(x)) wherever both are defined.
  LabelMap Then(const LabelMap& next) const;
  // Same map on more classes; used when lifting local tables.
  LabelMap Resized(int num_classes) const;
  std::vector<std::pair<ClassIndex, ClassIndex>> Pairs() const;

  bool operator==(const LabelMap& o) const {
    return domain_ == o.domain_ && Pairs() == o.Pairs();
  }

 private:
  std::vector<std::int8_t> image_;
  ClassMask domain_ = 0;
  ClassMask image_mask_ = 0;
};

std::string LabelMapString(const LabelMap& m);

// The face map from u to v on a graph of order <= 3 whose whole class set is
// the cell, from the face rules.
absl::StatusOr<LabelMap> SynthesizeLocalFaceMap(const ConnectionGraph& g,
                                                const Face& face, VertexId u,
                                                VertexId v);

struct FaceMapKey {
  int order = 0;
  ClassMask connected = 0;
  Face face;
  VertexId from;
  VertexId to;

  auto operator<=>(const FaceMapKey&) const = default;
};

// Face maps of every order-1..3 decoration pattern.
class FaceMapTables {
 public:
  static absl::StatusOr<FaceMapTables> Synthesize();
  static absl::StatusOr<FaceMapTables> Parse(absl::string_view text);
  static absl::StatusOr<FaceMapTables> LoadFile(const std::string& path);
  // Built-in synthesized tables; aborts if the rules ever fail to certify.
  static const FaceMapTables& Default();

  std::string Render() const;
  // Checks every face-map invariant on every stored pattern.
  absl::Status Certify() const;

  const LabelMap* Find(const FaceMapKey& key) const;
  size_t size() const { return maps_.size(); }
  bool operator==(const FaceMapTables& o) const { return maps_ == o.maps_; }

 private:
  std::map<FaceMapKey, LabelMap> maps_;
};

// The face map of a step (cell, face, u -> v) of a graph of any order.
// Classes outside the cell map identically.
absl::StatusOr<LabelMap> FaceMap(const FaceMapTables& tables,
                                 const ConnectionGraph& cg, const Cell& cell,
                                 const Face& face, VertexId u, VertexId v);

}  // namespace spin_atlas

#endif  // SPIN_ATLAS_FACES_FACE_MAP_H_
