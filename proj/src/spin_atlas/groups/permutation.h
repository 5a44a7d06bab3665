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

#ifndef SPIN_ATLAS_GROUPS_PERMUTATION_H_
#define SPIN_ATLAS_GROUPS_PERMUTATION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace spin_atlas {

// Largest degree handled by the group engine (orders must fit in 64 bits).
inline constexpr int kMaxPermutationDegree = 20;

// A bijection of {0, .., n-1}.
class Permutation {
 public:
  Permutation() = default;
  static Permutation Identity(int n);
  // Fails unless `images` is a bijection.
  static absl::StatusOr<Permutation> FromImages(std::vector<int> images);
  // Cycle notation on the points 1..n, e.g. "(1 2 3)(4 5)" or "(123)".
  static absl::StatusOr<Permutation> FromCycles(absl::string_view cycles,
                                                int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  // x -> next(this(x)).
  Permutation Then(const Permutation& next) const;
  Permutation Inverse() const;
  bool IsIdentity() const;
  bool IsEven() const;
  // Non-trivial cycle lengths, ascending.
  std::vector<int> CycleType() const;
  // 1-based cycle notation without separators when n < 10; "()" for the
  // identity.
  std::string ToCycleString() const;
  std::string Key() const {
    return std::string(images_.begin(), images_.end());
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  // Breadth-first order from the identity.
  std::vector<Permutation> elements;
  std::uint64_t order() const { return elements.size(); }
};

// Breadth-first product closure; ResourceExhausted ("CapExceeded") when the
// group has more than `cap` elements.
absl::StatusOr<PermGroup> Closure(const std::vector<Permutation>& generators,
                                  int n, std::uint64_t cap);

std::uint64_t Factorial(int n);

class GroupVerdict {
 public:
  enum class Kind { kTrivial, kC2, kC3, kAlternating, kSymmetric, kOther };

  GroupVerdict() = default;
  static GroupVerdict Trivial() { return {Kind::kTrivial, 0, 1}; }
  static GroupVerdict C3() { return {Kind::kC3, 0, 3}; }
  static GroupVerdict Symmetric(int n) {
    return {Kind::kSymmetric, n, Factorial(n)};
  }
  static GroupVerdict Alternating(int n) {
    return {Kind::kAlternating, n, Factorial(n) / 2};
  }
  static absl::StatusOr<GroupVerdict> Parse(absl::string_view text);

  Kind kind() const { return kind_; }
  // Degree for A(n)/S(n), 0 otherwise.
  int n() const { return n_; }
  std::uint64_t order() const { return order_; }
  std::string ToString() const;

  bool operator==(const GroupVerdict&) const = default;

 private:
  GroupVerdict(Kind kind, int n, std::uint64_t order)
      : kind_(kind), n_(n), order_(order) {}
  friend GroupVerdict RecognizeOrder(std::uint64_t, int, bool);

  Kind kind_ = Kind::kTrivial;
  int n_ = 0;
  std::uint64_t order_ = 1;
};

GroupVerdict RecognizeOrder(std::uint64_t order, int n, bool all_even);
GroupVerdict Recognize(const PermGroup& group);

}  // namespace spin_atlas

#endif  // SPIN_ATLAS_GROUPS_PERMUTATION_H_
