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

#ifndef SPIN_ATLAS_TESTS_TEST_UTIL_H_
#define SPIN_ATLAS_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "spin_atlas/chains/chain.h"
#include "spin_atlas/core/connection_graph.h"
#include "spin_atlas/core/graph_class.h"
#include "spin_atlas/faces/face.h"

namespace spin_atlas::testing {

inline ConnectionGraph Graph(int r, std::vector<int> connected) {
  return ConnectionGraph(r, ClassesToMask(connected));
}

inline VertexId V(absl::string_view name, int r = 60) {
  return *ParseVertexName(name, r);
}

inline Face F(absl::string_view text, int r = 60) {
  return *ParseFace(text, r);
}

inline Cell CellOf(std::vector<int> classes) {
  return Cell{ClassesToMask(classes)};
}

// All classes but `k`, or {1,2,3,4} for k = 5 (order-4 cells of the
// worked examples).
inline Cell Gamma(int k) {
  if (k == 5) return CellOf({1, 2, 3, 4});
  std::vector<int> c;
  for (int x = 0; x <= 4; ++x) {
    if (x != k) c.push_back(x);
  }
  return CellOf(c);
}

struct StepSpec {
  const char* face;
  const char* next;
  Cell cell{};
};

// Cells default to the whole graph.
inline SpinChain Chain(const ConnectionGraph& cg, const char* start,
                       std::vector<StepSpec> steps) {
  SpinChain chain{V(start), {}};
  for (const StepSpec& s : steps) {
    Cell cell = s.cell.classes == 0 ? WholeGraphCell(cg) : s.cell;
    chain.steps.push_back({cell, F(s.face), V(s.next)});
  }
  return chain;
}

// Every 4-cycle by checking all ordered 4-tuples of distinct vertices.
inline std::set<std::set<int>> BruteForceFaceVertexSets(
    const ConnectionGraph& cg, std::set<std::vector<int>>* cycles = nullptr) {
  std::set<std::set<int>> out;
  const int n = cg.num_vertices();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          std::set<int> s{a, b, c, d};
          if (s.size() != 4) continue;
          const int cyc[4] = {a, b, c, d};
          bool ok = true;
          for (int j = 0; j < 4 && ok; ++j) {
            ok = cg.Adjacent(VertexFromIndex(cyc[j]),
                             VertexFromIndex(cyc[(j + 1) % 4]));
          }
          if (!ok) continue;
          out.insert(s);
          if (cycles != nullptr) {
            // Normalise: start at the least vertex, smaller neighbour next.
            std::vector<int> v(cyc, cyc + 4);
            std::rotate(v.begin(), std::min_element(v.begin(), v.end()),
                        v.end());
            if (v[1] > v[3]) std::swap(v[1], v[3]);
            cycles->insert(v);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace spin_atlas::testing

#endif  // SPIN_ATLAS_TESTS_TEST_UTIL_H_
