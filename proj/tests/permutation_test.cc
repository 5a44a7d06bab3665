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

#include "spin_atlas/groups/permutation.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "spin_atlas/groups/stabilizer_chain.h"

namespace spin_atlas {
namespace {

Permutation P(const char* cycles, int n) {
  auto p = Permutation::FromCycles(cycles, n);
  EXPECT_TRUE(p.ok()) << cycles;
  return *p;
}

// Products of the generators of every length up to n!, over image vectors.
std::set<std::vector<int>> ProductsOracle(
    const std::vector<std::vector<int>>& gens, int n) {
  std::vector<int> id(n);
  for (int j = 0; j < n; ++j) id[j] = j;
  std::set<std::vector<int>> all{id};
  std::vector<std::vector<int>> frontier{id};
  int fact = 1;
  for (int j = 2; j <= n; ++j) fact *= j;
  for (int len = 1; len <= fact && !frontier.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        std::vector<int> p(n);
        for (int x = 0; x < n; ++x) p[x] = g[w[x]];
        if (all.insert(p).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  return all;
}

TEST(PermutationTest, CycleStrings) {
  EXPECT_EQ(Permutation::Identity(3).ToCycleString(), "()");
  EXPECT_EQ(P("(123)", 3).ToCycleString(), "(123)");
  EXPECT_EQ(P("(1 2 3)", 3).ToCycleString(), "(123)");
  EXPECT_EQ(P("(12)(34)", 4).ToCycleString(), "(12)(34)");
  EXPECT_EQ(P("(1 10)", 10).ToCycleString(), "(1 10)");
  EXPECT_FALSE(Permutation::FromCycles("(14)", 3).ok());
  EXPECT_FALSE(Permutation::FromCycles("(121)", 3).ok());
  EXPECT_FALSE(Permutation::FromCycles("(12", 3).ok());
  EXPECT_FALSE(Permutation::FromImages({0, 0, 1}).ok());
}

TEST(PermutationTest, Algebra) {
  Permutation a = P("(123)", 4), b = P("(34)", 4);
  EXPECT_EQ(a.Then(b)(0), 1);
  EXPECT_EQ(a.Then(b)(1), 3);
  EXPECT_TRUE(a.Then(a.Inverse()).IsIdentity());
  EXPECT_TRUE(a.IsEven());
  EXPECT_FALSE(b.IsEven());
  EXPECT_EQ(P("(12)(345)", 5).CycleType(), (std::vector<int>{2, 3}));
  Permutation c = P("(14)(23)", 4);
  EXPECT_EQ(a.Then(b).Then(c), a.Then(b.Then(c)));
}

TEST(ClosureTest, Examples) {
  auto g = Closure({}, 3, 1000);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->order(), 1u);
  g = Closure({P("(123)", 3)}, 3, 1000);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->order(), 3u);
  g = Closure({P("(12)", 3), P("(123)", 3)}, 3, 1000);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->order(), 6u);
  EXPECT_EQ(Closure({P("(12)", 5), P("(12345)", 5)}, 5, 100).status().code(),
            absl::StatusCode::kResourceExhausted);
}

TEST(ClosureTest, DeterministicOrder) {
  std::vector<Permutation> gens{P("(12)", 5), P("(12345)", 5)};
  auto a = Closure(gens, 5, 1000), b = Closure(gens, 5, 1000);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->elements, b->elements);
}

TEST(ClosureTest, MatchesProductsOracle) {
  std::mt19937 rng(20260418);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = static_cast<int>(rng() % 4);
    std::vector<std::vector<int>> raw;
    std::vector<Permutation> gens;
    for (int j = 0; j < k; ++j) {
      std::vector<int> img(n);
      for (int x = 0; x < n; ++x) img[x] = x;
      std::shuffle(img.begin(), img.end(), rng);
      raw.push_back(img);
      gens.push_back(*Permutation::FromImages(img));
    }
    auto g = Closure(gens, n, 1000);
    ASSERT_TRUE(g.ok());
    std::set<std::vector<int>> got;
    for (const Permutation& p : g->elements) {
      got.insert(std::vector<int>(p.images().begin(), p.images().end()));
    }
    ASSERT_EQ(got.size(), g->elements.size());
    ASSERT_EQ(got, ProductsOracle(raw, n)) << "trial " << trial;
    EXPECT_EQ(Factorial(n) % g->order(), 0u);
  }
}

TEST(RecognizeTest, ByOrder) {
  EXPECT_EQ(RecognizeOrder(1, 3, true), GroupVerdict::Trivial());
  EXPECT_EQ(RecognizeOrder(3, 3, true), GroupVerdict::C3());
  EXPECT_EQ(RecognizeOrder(24, 4, false), GroupVerdict::Symmetric(4));
  EXPECT_EQ(RecognizeOrder(12, 4, true), GroupVerdict::Alternating(4));
  EXPECT_EQ(RecognizeOrder(12, 4, false).kind(), GroupVerdict::Kind::kOther);
  EXPECT_EQ(RecognizeOrder(2, 4, false).ToString(), "C2");
  EXPECT_EQ(RecognizeOrder(8, 4, false).ToString(), "Other(8)");
  auto s4 = Closure({P("(12)", 4), P("(1234)", 4)}, 4, 100);
  ASSERT_TRUE(s4.ok());
  EXPECT_EQ(Recognize(*s4), GroupVerdict::Symmetric(4));
  auto a4 = Closure({P("(123)", 4), P("(234)", 4)}, 4, 100);
  ASSERT_TRUE(a4.ok());
  EXPECT_EQ(Recognize(*a4), GroupVerdict::Alternating(4));
}

TEST(RecognizeTest, VerdictStrings) {
  for (const char* s : {"Trivial", "C2", "C3", "A4", "S5", "S10", "Other(8)"}) {
    auto v = GroupVerdict::Parse(s);
    ASSERT_TRUE(v.ok()) << s;
    EXPECT_EQ(v->ToString(), s);
  }
  EXPECT_FALSE(GroupVerdict::Parse("Q8").ok());
  EXPECT_FALSE(GroupVerdict::Parse("S").ok());
}

TEST(StabilizerChainTest, AgreesWithClosure) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int k = static_cast<int>(rng() % 4);
    std::vector<Permutation> gens;
    StabilizerChain chain(n);
    for (int j = 0; j < k; ++j) {
      std::vector<int> img(n);
      for (int x = 0; x < n; ++x) img[x] = x;
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(*Permutation::FromImages(img));
      bool before = chain.Contains(gens.back());
      EXPECT_EQ(chain.Add(gens.back()), !before);
    }
    auto g = Closure(gens, n, 10000);
    ASSERT_TRUE(g.ok());
    EXPECT_EQ(chain.Order(), g->order());
    for (const Permutation& p : g->elements) EXPECT_TRUE(chain.Contains(p));
  }
}

TEST(StabilizerChainTest, LargeSymmetricGroup) {
  StabilizerChain chain(12);
  chain.Add(P("(12)", 12));
  chain.Add(P("(1 2 3 4 5 6 7 8 9 10 11 12)", 12));
  EXPECT_EQ(chain.Order(), Factorial(12));
}

}  // namespace
}  // namespace spin_atlas
