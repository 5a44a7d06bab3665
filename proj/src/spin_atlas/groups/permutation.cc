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
#include <deque>
#include <unordered_set>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"

namespace spin_atlas {

Permutation Permutation::Identity(int n) {
  Permutation p;
  p.images_.resize(n);
  for (int i = 0; i < n; ++i) p.images_[i] = static_cast<std::uint8_t>(i);
  return p;
}

absl::StatusOr<Permutation> Permutation::FromImages(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n > 255) return absl::InvalidArgumentError("permutation too large");
  std::vector<bool> hit(n, false);
  Permutation p;
  p.images_.resize(n);
  for (int i = 0; i < n; ++i) {
    if (images[i] < 0 || images[i] >= n || hit[images[i]]) {
      return absl::InvalidArgumentError("images do not form a bijection");
    }
    hit[images[i]] = true;
    p.images_[i] = static_cast<std::uint8_t>(images[i]);
  }
  return p;
}

absl::StatusOr<Permutation> Permutation::FromCycles(absl::string_view cycles,
                                                    int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  absl::string_view rest = cycles;
  while (!rest.empty()) {
    if (rest.front() == ' ') {
      rest.remove_prefix(1);
      continue;
    }
    if (rest.front() != '(') {
      return absl::InvalidArgumentError(
          absl::StrCat("bad cycle notation '", cycles, "'"));
    }
    const size_t close = rest.find(')');
    if (close == absl::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("unclosed cycle in '", cycles, "'"));
    }
    absl::string_view body = rest.substr(1, close - 1);
    rest.remove_prefix(close + 1);
    std::vector<int> points;
    const bool spaced = body.find(' ') != absl::string_view::npos;
    if (spaced) {
      for (size_t pos = 0; pos < body.size();) {
        size_t end = body.find(' ', pos);
        if (end == absl::string_view::npos) end = body.size();
        if (end > pos) {
          int x = 0;
          if (!absl::SimpleAtoi(body.substr(pos, end - pos), &x)) {
            return absl::InvalidArgumentError("bad cycle point");
          }
          points.push_back(x);
        }
        pos = end + 1;
      }
    } else {
      for (char c : body) {
        if (c < '1' || c > '9') {
          return absl::InvalidArgumentError("bad cycle point");
        }
        points.push_back(c - '0');
      }
    }
    for (size_t j = 0; j < points.size(); ++j) {
      const int a = points[j] - 1;
      const int b = points[(j + 1) % points.size()] - 1;
      if (a < 0 || a >= n || b < 0 || b >= n) {
        return absl::InvalidArgumentError("cycle point out of range");
      }
      images[a] = b;
    }
  }
  return FromImages(std::move(images));
}

Permutation Permutation::Then(const Permutation& next) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) {
    out.images_[i] = next.images_[images_[i]];
  }
  return out;
}

Permutation Permutation::Inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) {
    out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  }
  return out;
}

bool Permutation::IsIdentity() const {
  for (size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::CycleType() const {
  std::vector<int> type;
  std::vector<bool> seen(images_.size(), false);
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

bool Permutation::IsEven() const {
  int transpositions = 0;
  for (int len : CycleType()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Permutation::ToCycleString() const {
  const bool compact = images_.size() < 10;
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    bool first = true;
    for (size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first && !compact) out += " ";
      absl::StrAppend(&out, j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

// Points packed four bits each; valid for n <= 16.
std::uint64_t PackedKey(const std::uint8_t* images, int n) {
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i) key |= std::uint64_t{images[i]} << (4 * i);
  return key;
}

}  // namespace

absl::StatusOr<PermGroup> Closure(const std::vector<Permutation>& generators,
                                  int n, std::uint64_t cap) {
  for (const Permutation& g : generators) {
    if (g.degree() != n) {
      return absl::InvalidArgumentError(
          absl::StrCat("generator of degree ", g.degree(), " on ", n,
                       " labels"));
    }
  }
  const bool packed = n <= 16;
  std::unordered_set<std::uint64_t> seen_packed;
  std::unordered_set<std::string> seen_wide;
  auto insert = [&](const std::uint8_t* images) {
    return packed ? seen_packed.insert(PackedKey(images, n)).second
                  : seen_wide
                        .insert(std::string(images, images + n))
                        .second;
  };
  // Elements stored back to back, n bytes each.
  std::vector<std::uint8_t> flat = Permutation::Identity(n).images();
  insert(flat.data());
  std::vector<std::uint8_t> next(n);
  for (size_t head = 0; head * n < flat.size() || (n == 0 && head == 0);
       ++head) {
    for (const Permutation& g : generators) {
      for (int i = 0; i < n; ++i) next[i] = g(flat[head * n + i]);
      if (!insert(next.data())) continue;
      if (flat.size() / std::max(n, 1) >= cap) {
        return absl::ResourceExhaustedError(absl::StrCat(
            "CapExceeded: closure has more than ", cap, " elements"));
      }
      flat.insert(flat.end(), next.begin(), next.end());
    }
    if (n == 0) break;
  }
  PermGroup group;
  group.degree = n;
  group.generators = generators;
  const size_t count = n == 0 ? 1 : flat.size() / n;
  group.elements.reserve(count);
  for (size_t e = 0; e < count; ++e) {
    std::vector<int> images(flat.begin() + e * n, flat.begin() + (e + 1) * n);
    group.elements.push_back(*Permutation::FromImages(std::move(images)));
  }
  return group;
}

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

GroupVerdict RecognizeOrder(std::uint64_t order, int n, bool all_even) {
  using Kind = GroupVerdict::Kind;
  if (order == 1) return GroupVerdict(Kind::kTrivial, 0, 1);
  if (order == 2) return GroupVerdict(Kind::kC2, 0, 2);
  if (order == 3) return GroupVerdict(Kind::kC3, 0, 3);
  const std::uint64_t full = Factorial(n);
  if (all_even && order * 2 == full) {
    return GroupVerdict(Kind::kAlternating, n, order);
  }
  if (order == full) return GroupVerdict(Kind::kSymmetric, n, order);
  return GroupVerdict(Kind::kOther, 0, order);
}

GroupVerdict Recognize(const PermGroup& group) {
  bool all_even = true;
  for (const Permutation& g : group.generators) all_even &= g.IsEven();
  return RecognizeOrder(group.order(), group.degree, all_even);
}

std::string GroupVerdict::ToString() const {
  switch (kind_) {
    case Kind::kTrivial:
      return "Trivial";
    case Kind::kC2:
      return "C2";
    case Kind::kC3:
      return "C3";
    case Kind::kAlternating:
      return absl::StrCat("A", n_);
    case Kind::kSymmetric:
      return absl::StrCat("S", n_);
    case Kind::kOther:
      return absl::StrCat("Other(", order_, ")");
  }
  return "?";
}

absl::StatusOr<GroupVerdict> GroupVerdict::Parse(absl::string_view text) {
  if (text == "Trivial") return Trivial();
  if (text == "C2") return GroupVerdict(Kind::kC2, 0, 2);
  if (text == "C3") return C3();
  absl::string_view rest = text;
  if (absl::ConsumePrefix(&rest, "Other(") && absl::ConsumeSuffix(&rest, ")")) {
    std::uint64_t order = 0;
    if (absl::SimpleAtoi(rest, &order)) {
      return GroupVerdict(Kind::kOther, 0, order);
    }
  }
  if (text.size() >= 2 && (text[0] == 'A' || text[0] == 'S')) {
    int n = 0;
    if (absl::SimpleAtoi(text.substr(1), &n) && n >= 1 &&
        n <= kMaxPermutationDegree) {
      return text[0] == 'A' ? Alternating(n) : Symmetric(n);
    }
  }
  return absl::InvalidArgumentError(
      absl::StrCat("bad group verdict '", text, "'"));
}

}  // namespace spin_atlas
