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

#ifndef SPIN_ATLAS_ATLAS_ATLAS_H_
#define SPIN_ATLAS_ATLAS_ATLAS_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "spin_atlas/core/graph_class.h"
#include "spin_atlas/groups/permutation.h"
#include "spin_atlas/groups/spin_group.h"

namespace spin_atlas {

// One class of the atlas. Vertex lists follow the order P, ~P, P1, ~P1, ..
struct AtlasRow {
  int genus = 0;
  int order = 0;
  int i = 0;
  std::vector<int> p;
  std::vector<int> k;
  std::vector<int> connected;
  std::vector<int> heads;
  // Epsilon-degree per class.
  std::vector<int> degrees;
  std::vector<GroupVerdict> predicted;
  std::vector<GroupVerdict> computed;
  bool match = false;

  bool operator==(const AtlasRow&) const = default;
};

AtlasRow MakeAtlasRow(const ClassReport& report);

// Single-line "row key=value ..." record.
std::string RenderAtlasRecord(const AtlasRow& row);
absl::StatusOr<AtlasRow> ParseAtlasRecord(absl::string_view line);

// Fixed-width table with a header line.
std::string RenderAtlasTable(const std::vector<AtlasRow>& rows);

// Per-vertex verdicts and witnesses.
std::string RenderClassifyText(const ClassReport& report,
                               const std::vector<VertexId>& vertices);
std::string RenderClassifyRecords(const ClassReport& report,
                                  const std::vector<VertexId>& vertices);

// "mismatch ..." lines for every vertex that disagrees with the prediction.
std::string RenderMismatches(const ClassReport& report);

// Step encoding used in witness records: "next:face[@cell];..".
std::string EncodeChain(const SpinChain& chain, bool with_cells);

enum class DotKind { kConnection, kFull };

absl::StatusOr<std::string> ExportDot(const GraphClass& gc, DotKind kind);

}  // namespace spin_atlas

#endif  // SPIN_ATLAS_ATLAS_ATLAS_H_
