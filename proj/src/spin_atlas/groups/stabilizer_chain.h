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

#ifndef SPIN_ATLAS_GROUPS_STABILIZER_CHAIN_H_
#define SPIN_ATLAS_GROUPS_STABILIZER_CHAIN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "spin_atlas/groups/permutation.h"

namespace spin_atlas {

// Deterministic Schreier-Sims chain for membership and order when the full
// element list would be too large.
class StabilizerChain {
 public:
  explicit StabilizerChain(int n) : n_(n) {}

  int degree() const { return n_; }
  bool Contains(const Permutation& g) const;
  // Returns true if the group grew.
  bool Add(const Permutation& g);
  std::uint64_t Order() const;
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    // transversal[b] maps base to b; inverse[b] is its inverse.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::optional<Permutation>> inverse;
  };

  // Residue of g after sifting from `level`; sets *stop to the level where
  // sifting stopped (levels_.size() if it went through).
  Permutation Sift(Permutation g, size_t level, size_t* stop) const;
  void AddAt(size_t lo, size_t hi, const Permutation& g);
  void RebuildOrbit(Level& level);

  int n_;
  std::vector<Level> levels_;
  std::vector<Permutation> generators_;
};

}  // namespace spin_atlas

#endif  // SPIN_ATLAS_GROUPS_STABILIZER_CHAIN_H_
