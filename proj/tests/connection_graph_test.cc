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

#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace spin_atlas {
namespace {

using testing::Graph;
using testing::V;

GraphClass Class(int g, int r, int i, std::vector<int> p) {
  return *MakeGraphClass(g, r, i, std::move(p));
}

TEST(ConnectionGraphTest, ConnectedPairsFromKTuple) {
  EXPECT_EQ(BuildConnectionGraph(Class(3, 2, 0, {0, 1})).connected_pairs(),
            std::vector<ClassIndex>{2});
  EXPECT_EQ(BuildConnectionGraph(Class(5, 2, 1, {0, 0})).connected_pairs(),
            (std::vector<ClassIndex>{0, 1, 2}));
  EXPECT_EQ(BuildConnectionGraph(Class(4, 3, 0, {0, 0, 1})).connected_pairs(),
            std::vector<ClassIndex>{3});
  EXPECT_EQ(BuildConnectionGraph(Class(5, 4, 0, {0, 0, 0, 1})).connected_pairs(),
            std::vector<ClassIndex>{4});
}

TEST(ConnectionGraphTest, HexagonAndChord) {
  ConnectionGraph cg = Graph(2, {2});
  EXPECT_EQ(cg.num_vertices(), 6);
  EXPECT_TRUE(cg.Adjacent(V("P"), V("P1")));
  EXPECT_TRUE(cg.Adjacent(V("P"), V("P2")));
  EXPECT_FALSE(cg.Adjacent(V("P"), V("~P1")));
  EXPECT_FALSE(cg.Adjacent(V("P"), V("~P")));
  EXPECT_TRUE(cg.Adjacent(V("P2"), V("~P2")));
  EXPECT_FALSE(cg.Adjacent(V("P1"), V("~P1")));
  EXPECT_EQ(LabelSet(cg, V("P")), (std::vector<ClassIndex>{1, 2}));
  EXPECT_EQ(LabelSet(cg, V("P2")), (std::vector<ClassIndex>{0, 1, 2}));
  EXPECT_EQ(EpsilonDegree(cg, V("P")), 2);
  EXPECT_EQ(EpsilonDegree(cg, V("~P2")), 3);
}

TEST(ConnectionGraphTest, FullLabelSetAtOrderThree) {
  ConnectionGraph cg = Graph(3, {2, 3});
  EXPECT_EQ(LabelSet(cg, V("P3")), (std::vector<ClassIndex>{0, 1, 2, 3}));
  EXPECT_EQ(LabelSet(cg, V("P1")), (std::vector<ClassIndex>{0, 2, 3}));
}

TEST(ConnectionGraphTest, OrderZero) {
  ConnectionGraph cg = Graph(0, {0});
  EXPECT_EQ(cg.num_vertices(), 2);
  EXPECT_TRUE(cg.Adjacent(V("P"), V("~P")));
  EXPECT_EQ(LabelSet(cg, V("P")), std::vector<ClassIndex>{0});
}

TEST(ConnectionGraphTest, RegularityAndBipartiteness) {
  for (int r = 1; r <= 7; ++r) {
    ConnectionGraph basic(r, 0);
    int edges = 0;
    for (VertexId u : basic.Vertices()) {
      EXPECT_EQ(basic.Degree(u), r);
      for (VertexId w : basic.Neighbors(u)) {
        EXPECT_NE(Side(u), Side(w));
        ++edges;
      }
    }
    EXPECT_EQ(edges / 2, r * (r + 1));
    ConnectionGraph full(r, basic.AllClasses());
    for (VertexId u : full.Vertices()) EXPECT_EQ(full.Degree(u), r + 1);
  }
}

TEST(ConnectionGraphTest, ConjugationIsAutomorphism) {
  for (int r = 1; r <= 5; ++r) {
    for (ClassMask m = 0; m < (ClassMask{1} << (r + 1)); ++m) {
      ConnectionGraph cg(r, m);
      for (VertexId u : cg.Vertices()) {
        EXPECT_EQ(cg.LabelMask(u), cg.LabelMask(Conjugate(u)));
        for (VertexId w : cg.Vertices()) {
          EXPECT_EQ(cg.Adjacent(u, w),
                    cg.Adjacent(Conjugate(u), Conjugate(w)));
          EXPECT_EQ(cg.Adjacent(u, w), cg.Adjacent(w, u));
        }
      }
    }
  }
}

TEST(ConnectionGraphTest, MaskHelpers) {
  EXPECT_EQ(MaskToClasses(ClassesToMask({0, 3, 5})),
            (std::vector<ClassIndex>{0, 3, 5}));
  EXPECT_EQ(PopCount(ClassesToMask({1, 2, 7})), 3);
}

TEST(EdgeMultiplicityTest, HexagonWithAllChords) {
  auto edges = EdgeMultiplicitiesRLe2(Class(5, 2, 1, {0, 0}));
  ASSERT_TRUE(edges.ok());
  int chords = 0;
  for (const EdgeMultiplicity& e : *edges) {
    if (e.u.cls == e.v.cls) {
      ++chords;
      EXPECT_EQ(e.straight, 1);
    } else {
      EXPECT_EQ(e.straight, 2);
      EXPECT_EQ(e.arc, 0);
    }
  }
  EXPECT_EQ(chords, 3);
}

TEST(EdgeMultiplicityTest, OrderOne) {
  auto edges = EdgeMultiplicitiesRLe2(Class(5, 1, 0, {4}));
  ASSERT_TRUE(edges.ok());
  for (const EdgeMultiplicity& e : *edges) {
    if (e.u.cls == 1 && e.v.cls == 1) {
      EXPECT_EQ(e.straight, 4);
    } else if (e.u.cls == 0 && e.v.cls == 0) {
      ADD_FAILURE() << "P is not chorded";
    } else {
      EXPECT_EQ(e.straight, 1);
      EXPECT_EQ(e.arc, 4);
    }
  }
}

// Every vertex carries exactly g half-edges.
TEST(EdgeMultiplicityTest, DegreeSumIsGenus) {
  for (int g = 2; g <= 12; ++g) {
    for (int r = 0; r <= 2 && r < g; ++r) {
      for (const GraphClass& gc : EnumerateClasses(g, r)) {
        auto edges = EdgeMultiplicitiesRLe2(gc);
        ASSERT_TRUE(edges.ok()) << ClassLabel(gc);
        std::map<VertexId, int> deg;
        for (const EdgeMultiplicity& e : *edges) {
          deg[e.u] += e.straight;
          deg[e.v] += e.straight;
          if (e.arc > 0) deg[e.arc_owner] += e.arc;
        }
        ConnectionGraph cg = BuildConnectionGraph(gc);
        for (VertexId v : cg.Vertices()) {
          EXPECT_EQ(deg[v], g) << ClassLabel(gc) << " " << VertexName(v);
        }
      }
    }
  }
}

TEST(EdgeMultiplicityTest, RejectsHigherOrder) {
  EXPECT_EQ(EdgeMultiplicitiesRLe2(Class(4, 3, 0, {0, 0, 1})).status().code(),
            absl::StatusCode::kUnimplemented);
}

}  // namespace
}  // namespace spin_atlas
