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

#include "spin_atlas/atlas/atlas.h"

#include <string>
#include <vector>

#include "absl/strings/match.h"
#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace spin_atlas {
namespace {

ClassReport Report(int g, int r, int i, std::vector<int> p) {
  auto gc = MakeGraphClass(g, r, i, std::move(p));
  EXPECT_TRUE(gc.ok());
  auto rep = VerifyClass(*gc, FaceMapTables::Default(), {});
  EXPECT_TRUE(rep.ok());
  return *rep;
}

int Count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

TEST(AtlasRowTest, Fields) {
  AtlasRow row = MakeAtlasRow(Report(3, 2, 0, {0, 1}));
  EXPECT_EQ(row.k, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(row.connected, std::vector<int>{2});
  EXPECT_EQ(row.heads, (std::vector<int>{0, 1}));
  EXPECT_EQ(row.degrees, (std::vector<int>{2, 2, 3}));
  ASSERT_EQ(row.computed.size(), 6u);
  EXPECT_EQ(row.computed[4], GroupVerdict::C3());
  EXPECT_TRUE(row.match);
  EXPECT_EQ(RenderAtlasRecord(row),
            "row genus=3 order=2 i=0 p=0,1 k=1,1,2 connected=2 heads=0,1 "
            "degrees=2,2,3 predicted=Trivial,Trivial,Trivial,Trivial,C3,C3 "
            "computed=Trivial,Trivial,Trivial,Trivial,C3,C3 match=1");
}

TEST(AtlasRowTest, RecordRoundTrip) {
  for (int g = 2; g <= 7; ++g) {
    for (const GraphClass& gc : EnumerateClasses(g)) {
      if (gc.order > 4) continue;
      auto rep = VerifyClass(gc, FaceMapTables::Default(), {});
      ASSERT_TRUE(rep.ok());
      AtlasRow row = MakeAtlasRow(*rep);
      std::string line = RenderAtlasRecord(row);
      auto parsed = ParseAtlasRecord(line);
      ASSERT_TRUE(parsed.ok()) << line;
      EXPECT_EQ(*parsed, row);
      EXPECT_EQ(RenderAtlasRecord(*parsed), line);
    }
  }
}

TEST(AtlasRowTest, ParseRejectsMalformed) {
  EXPECT_FALSE(ParseAtlasRecord("").ok());
  EXPECT_FALSE(ParseAtlasRecord("row genus=3").ok());
  EXPECT_FALSE(ParseAtlasRecord(
                   "row order=2 genus=3 i=0 p=0,1 k=1,1,2 connected=2 "
                   "heads=0,1 degrees=2,2,3 predicted=C3 computed=C3 match=1")
                   .ok());
  EXPECT_FALSE(ParseAtlasRecord(
                   "row genus=3 order=2 i=0 p=0,1 k=1,1,2 connected=2 "
                   "heads=0,1 degrees=2,2,3 predicted=Q8 computed=C3 match=1")
                   .ok());
}

TEST(AtlasTableTest, OneLinePerClassPlusHeader) {
  std::vector<AtlasRow> rows;
  for (const GraphClass& gc : EnumerateClasses(4)) {
    auto rep = VerifyClass(gc, FaceMapTables::Default(), {});
    ASSERT_TRUE(rep.ok());
    rows.push_back(MakeAtlasRow(*rep));
  }
  std::string table = RenderAtlasTable(rows);
  std::vector<std::string> lines =
      absl::StrSplit(table, '\n', absl::SkipEmpty());
  EXPECT_EQ(lines.size(), rows.size() + 1);
  EXPECT_EQ(Count(table, "MISMATCH"), 0);
}

TEST(ClassifyTest, RecordsListWitnesses) {
  ClassReport rep = Report(3, 2, 0, {0, 1});
  std::string out = RenderClassifyRecords(rep, {testing::V("P2")});
  EXPECT_TRUE(absl::StrContains(out, "vertex genus=3 order=2 i=0 p=0,1 "
                                     "name=P2 degree=3 labels=0,1,2 "
                                     "predicted=C3 computed=C3 match=1"));
  EXPECT_TRUE(absl::StrContains(out, "witness genus=3 order=2 i=0 p=0,1 "
                                     "name=P2 index=0 value=(123) "));
  EXPECT_TRUE(RenderMismatches(rep).empty());
  std::string text = RenderClassifyText(rep, {testing::V("P2")});
  EXPECT_TRUE(absl::StrContains(text, "C3"));
}

TEST(DotTest, ConnectionGraph) {
  auto gc = MakeGraphClass(3, 2, 0, {0, 1});
  ASSERT_TRUE(gc.ok());
  auto dot = ExportDot(*gc, DotKind::kConnection);
  ASSERT_TRUE(dot.ok());
  EXPECT_TRUE(absl::StartsWith(*dot, "graph spin_graph {"));
  EXPECT_EQ(Count(*dot, " -- "), 7);
  EXPECT_EQ(Count(*dot, "style=dashed"), 7);
  EXPECT_TRUE(absl::StrContains(*dot, "\"P2\" -- \"~P2\""));
  EXPECT_EQ(*dot, *ExportDot(*gc, DotKind::kConnection));
}

TEST(DotTest, FullGraphMultiplicities) {
  auto gc = MakeGraphClass(5, 2, 1, {0, 0});
  ASSERT_TRUE(gc.ok());
  auto dot = ExportDot(*gc, DotKind::kFull);
  ASSERT_TRUE(dot.ok());
  EXPECT_TRUE(absl::StrContains(*dot, "\"P\" -- \"~P\" [label=\"1\"]"));
  EXPECT_TRUE(absl::StrContains(*dot, "\"P\" -- \"P1\" [label=\"2\"]"));
  EXPECT_EQ(*dot, *ExportDot(*gc, DotKind::kFull));
  auto arcs = ExportDot(*MakeGraphClass(5, 1, 0, {4}), DotKind::kFull);
  ASSERT_TRUE(arcs.ok());
  EXPECT_TRUE(absl::StrContains(*arcs, "dir=forward"));
}

TEST(DotTest, FullExportUnsupportedAboveOrderTwo) {
  auto gc = MakeGraphClass(4, 3, 0, {0, 0, 1});
  ASSERT_TRUE(gc.ok());
  auto dot = ExportDot(*gc, DotKind::kFull);
  EXPECT_EQ(dot.status().code(), absl::StatusCode::kUnimplemented);
  EXPECT_TRUE(absl::StrContains(dot.status().message(),
                                "FullExportUnsupported"));
  EXPECT_TRUE(ExportDot(*gc, DotKind::kConnection).ok());
}

}  // namespace
}  // namespace spin_atlas
