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

#include <charconv>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace spin_atlas {

std::string VertexName(VertexId v) {
  std::string name = v.tilded ? "~P" : "P";
  if (v.cls > 0) absl::StrAppend(&name, v.cls);
  return name;
}

absl::StatusOr<VertexId> ParseVertexName(absl::string_view name, int order) {
  absl::string_view rest = name;
  VertexId v;
  if (!rest.empty() && rest.front() == '~') {
    v.tilded = true;
    rest.remove_prefix(1);
  }
  if (rest.empty() || rest.front() != 'P') {
    return absl::InvalidArgumentError(
        absl::StrCat("bad vertex name '", name, "'"));
  }
  rest.remove_prefix(1);
  if (!rest.empty()) {
    int cls = -1;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), cls);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || cls < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad vertex name '", name, "'"));
    }
    v.cls = cls;
  }
  if (v.cls > order) {
    return absl::InvalidArgumentError(absl::StrCat(
        "vertex '", name, "' does not exist at order ", order));
  }
  return v;
}

int GenusOf(int order, int i, const std::vector<int>& p) {
  int g = (order + 1) * (i + 1) - 1;
  for (int l = 1; l <= static_cast<int>(p.size()); ++l) {
    g += (order + 1 - l) * p[l - 1];
  }
  return g;
}

absl::Status ValidateGraphClass(const GraphClass& gc) {
  if (gc.genus < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("genus must be >= 2, got ", gc.genus));
  }
  if (gc.order < 0 || gc.order >= gc.genus) {
    return absl::InvalidArgumentError(absl::StrCat(
        "order must satisfy 0 <= r < genus, got r=", gc.order));
  }
  if (gc.order > kMaxOrder) {
    return absl::InvalidArgumentError(
        absl::StrCat("order ", gc.order, " exceeds supported maximum ",
                     kMaxOrder));
  }
  if (static_cast<int>(gc.p.size()) != gc.order) {
    return absl::InvalidArgumentError(absl::StrCat(
        "p must have exactly r=", gc.order, " entries, got ", gc.p.size()));
  }
  if (gc.i < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("i must be >= 0, got ", gc.i));
  }
  for (size_t l = 0; l < gc.p.size(); ++l) {
    if (gc.p[l] < 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "p_", l + 1, " must be >= 0 (k-tuple non-decreasing), got ",
          gc.p[l]));
    }
  }
  const int expected = GenusOf(gc.order, gc.i, gc.p);
  if (expected != gc.genus) {
    return absl::InvalidArgumentError(absl::StrCat(
        "genus formula violated: (r+1)(i+1)-1+sum (r+1-l)p_l = ", expected,
        ", not ", gc.genus));
  }
  return absl::OkStatus();
}

absl::StatusOr<GraphClass> MakeGraphClass(int genus, int order, int i,
                                          std::vector<int> p) {
  GraphClass gc{genus, order, i, std::move(p)};
  if (absl::Status s = ValidateGraphClass(gc); !s.ok()) return s;
  return gc;
}

std::vector<int> KTuple(const GraphClass& gc) {
  std::vector<int> k(gc.order + 1);
  k[0] = gc.i + 1;
  for (int l = 1; l <= gc.order; ++l) k[l] = k[l - 1] + gc.p[l - 1];
  return k;
}

namespace {

void ExtendP(int order, int l, int remaining, std::vector<int>& p,
             const GraphClass& base, std::vector<GraphClass>& out) {
  if (l > order) {
    if (remaining == 0) {
      GraphClass gc = base;
      gc.p = p;
      out.push_back(std::move(gc));
    }
    return;
  }
  const int weight = order + 1 - l;
  for (int v = 0; v * weight <= remaining; ++v) {
    p[l - 1] = v;
    ExtendP(order, l + 1, remaining - v * weight, p, base, out);
  }
  p[l - 1] = 0;
}

}  // namespace

std::vector<GraphClass> EnumerateClasses(int genus, std::optional<int> order) {
  std::vector<GraphClass> out;
  if (genus < 2) return out;
  int lo = 0;
  int hi = std::min(genus - 1, kMaxOrder);
  if (order.has_value()) {
    if (*order < 0 || *order >= genus || *order > kMaxOrder) return out;
    lo = hi = *order;
  }
  for (int r = lo; r <= hi; ++r) {
    for (int i = 0; (r + 1) * (i + 1) - 1 <= genus; ++i) {
      const int remaining = genus - ((r + 1) * (i + 1) - 1);
      std::vector<int> p(r, 0);
      GraphClass base{genus, r, i, {}};
      ExtendP(r, 1, remaining, p, base, out);
    }
  }
  return out;
}

std::vector<ClassIndex> Heads(const GraphClass& gc) {
  const std::vector<int> k = KTuple(gc);
  std::vector<ClassIndex> heads;
  for (int l = 0; l <= gc.order; ++l) {
    if (k[l] == k[0]) heads.push_back(l);
  }
  return heads;
}

std::string ClassLabel(const GraphClass& gc) {
  return absl::StrCat("g=", gc.genus, " r=", gc.order, " (", gc.i,
                      gc.p.empty() ? "" : ",", absl::StrJoin(gc.p, ","), ")");
}

}  // namespace spin_atlas
