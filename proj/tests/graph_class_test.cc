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

#include "spin_atlas/core/graph_class.h"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "gtest/gtest.h"

namespace spin_atlas {
namespace {

using Key = std::tuple<int, int, std::vector<int>>;

// k-tuples with 1 <= k0 <= k1 <= ... <= kr and sum(k) - 1 = genus.
std::set<Key> BruteForceClasses(int genus, int order) {
  std::set<Key> out;
  std::vector<int> k(order + 1);
  std::function<void(int, int, int)> rec = [&](int pos, int min, int left) {
    if (pos == order + 1) {
      if (left != 0) return;
      std::vector<int> p(order);
      for (int l = 1; l <= order; ++l) p[l - 1] = k[l] - k[l - 1];
      out.insert({order, k[0] - 1, p});
      return;
    }
    for (int v = min; v <= left; ++v) {
      k[pos] = v;
      rec(pos + 1, v, left - v);
    }
  };
  rec(0, 1, genus + 1);
  return out;
}

TEST(GraphClassTest, GenusFormulaExamples) {
  EXPECT_EQ(GenusOf(2, 0, {0, 1}), 3);
  EXPECT_EQ(GenusOf(1, 0, {4}), 5);
  EXPECT_EQ(GenusOf(1, 2, {0}), 5);
  EXPECT_EQ(GenusOf(4, 0, {0, 0, 0, 0}), 4);
  EXPECT_EQ(GenusOf(0, 3, {}), 3);
}

TEST(GraphClassTest, KTuple) {
  auto gc = MakeGraphClass(3, 2, 0, {0, 1});
  ASSERT_TRUE(gc.ok());
  EXPECT_EQ(KTuple(*gc), (std::vector<int>{1, 1, 2}));
  gc = MakeGraphClass(5, 2, 1, {0, 0});
  ASSERT_TRUE(gc.ok());
  EXPECT_EQ(KTuple(*gc), (std::vector<int>{2, 2, 2}));
}

TEST(GraphClassTest, KTupleSumsToGenusPlusOne) {
  for (int g = 2; g <= 12; ++g) {
    for (const GraphClass& gc : EnumerateClasses(g)) {
      int sum = 0;
      for (int k : KTuple(gc)) sum += k;
      EXPECT_EQ(sum, g + 1) << ClassLabel(gc);
    }
  }
}

TEST(GraphClassTest, EnumerationMatchesBruteForce) {
  for (int g = 2; g <= 12; ++g) {
    for (int r = 0; r < g; ++r) {
      std::set<Key> got;
      for (const GraphClass& gc : EnumerateClasses(g, r)) {
        EXPECT_TRUE(ValidateGraphClass(gc).ok()) << ClassLabel(gc);
        EXPECT_TRUE(got.insert({gc.order, gc.i, gc.p}).second);
      }
      EXPECT_EQ(got, BruteForceClasses(g, r)) << "g=" << g << " r=" << r;
    }
  }
}

TEST(GraphClassTest, EnumerationIsSortedAndBounded) {
  for (int g = 2; g <= 10; ++g) {
    auto all = EnumerateClasses(g);
    for (size_t j = 1; j < all.size(); ++j) {
      auto a = std::tie(all[j - 1].order, all[j - 1].i, all[j - 1].p);
      auto b = std::tie(all[j].order, all[j].i, all[j].p);
      EXPECT_LT(a, b);
    }
    for (const GraphClass& gc : all) {
      EXPECT_LE(gc.i, (g - gc.order) / (gc.order + 1));
    }
  }
}

TEST(GraphClassTest, SmallEnumerations) {
  auto g5r1 = EnumerateClasses(5, 1);
  ASSERT_EQ(g5r1.size(), 3u);
  EXPECT_EQ(g5r1[0].p, std::vector<int>{4});
  EXPECT_EQ(g5r1[1].i, 1);
  EXPECT_EQ(g5r1[1].p, std::vector<int>{2});
  EXPECT_EQ(g5r1[2].i, 2);
  EXPECT_EQ(g5r1[2].p, std::vector<int>{0});
  EXPECT_EQ(EnumerateClasses(4, 1).size(), 2u);
  auto g2 = EnumerateClasses(2);
  ASSERT_EQ(g2.size(), 2u);
  EXPECT_EQ(g2[0].order, 0);
  EXPECT_EQ(g2[0].i, 2);
  EXPECT_EQ(g2[1].order, 1);
  EXPECT_EQ(g2[1].p, std::vector<int>{1});
  EXPECT_TRUE(EnumerateClasses(3, 3).empty());
}

TEST(GraphClassTest, ValidationNamesInvariant) {
  auto msg = [](const GraphClass& gc) {
    return std::string(ValidateGraphClass(gc).message());
  };
  EXPECT_TRUE(absl::StrContains(msg({1, 0, 1, {}}), "genus"));
  EXPECT_TRUE(absl::StrContains(msg({3, 3, 0, {0, 0, 0}}), "order"));
  EXPECT_TRUE(absl::StrContains(msg({3, 2, 0, {1}}), "entries"));
  EXPECT_TRUE(absl::StrContains(msg({3, 2, -1, {0, 2}}), "i must"));
  EXPECT_TRUE(absl::StrContains(msg({3, 2, 0, {-1, 3}}), "p"));
  EXPECT_TRUE(absl::StrContains(msg({4, 2, 0, {0, 1}}), "genus formula"));
  EXPECT_EQ(ValidateGraphClass({4, 2, 0, {0, 1}}).code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(MakeGraphClass(4, 2, 0, {0, 1}).ok());
}

TEST(GraphClassTest, Heads) {
  auto heads = [](int g, int r, int i, std::vector<int> p) {
    return Heads(*MakeGraphClass(g, r, i, std::move(p)));
  };
  EXPECT_EQ(heads(3, 2, 0, {0, 1}), (std::vector<ClassIndex>{0, 1}));
  EXPECT_EQ(heads(5, 2, 1, {0, 0}), (std::vector<ClassIndex>{0, 1, 2}));
  EXPECT_EQ(heads(4, 2, 0, {1, 0}), std::vector<ClassIndex>{0});
  for (int g = 2; g <= 9; ++g) {
    for (const GraphClass& c : EnumerateClasses(g)) {
      auto h = Heads(c);
      auto k = KTuple(c);
      ASSERT_FALSE(h.empty());
      EXPECT_EQ(h[0], 0);
      for (int l = 0; l <= c.order; ++l) {
        bool is_head = std::find(h.begin(), h.end(), l) != h.end();
        EXPECT_EQ(is_head, k[l] == k[0]);
      }
    }
  }
}

TEST(GraphClassTest, VertexNames) {
  EXPECT_EQ(VertexName({0, false}), "P");
  EXPECT_EQ(VertexName({0, true}), "~P");
  EXPECT_EQ(VertexName({3, false}), "P3");
  EXPECT_EQ(VertexName({12, true}), "~P12");
  for (int c = 0; c <= 12; ++c) {
    for (bool t : {false, true}) {
      auto v = ParseVertexName(VertexName({c, t}), 12);
      ASSERT_TRUE(v.ok());
      EXPECT_EQ(*v, (VertexId{c, t}));
    }
  }
  EXPECT_FALSE(ParseVertexName("P4", 3).ok());
  EXPECT_FALSE(ParseVertexName("Q1", 3).ok());
  EXPECT_FALSE(ParseVertexName("P-1", 3).ok());
  EXPECT_FALSE(ParseVertexName("", 3).ok());
}

TEST(GraphClassTest, SidesAndConjugates) {
  EXPECT_EQ(Side({0, false}), 1);
  EXPECT_EQ(Side({1, false}), 0);
  for (int c = 0; c < 6; ++c) {
    VertexId v{c, false};
    EXPECT_NE(Side(v), Side(Conjugate(v)));
    EXPECT_EQ(Conjugate(Conjugate(v)), v);
    EXPECT_EQ(VertexFromIndex(VertexIndex(v)), v);
  }
}

}  // namespace
}  // namespace spin_atlas
