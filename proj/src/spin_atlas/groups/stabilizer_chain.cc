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

#include "spin_atlas/groups/stabilizer_chain.h"

namespace spin_atlas {

Permutation StabilizerChain::Sift(Permutation g, size_t level,
                                  size_t* stop) const {
  for (size_t k = level; k < levels_.size(); ++k) {
    const Level& l = levels_[k];
    const int b = g(l.base);
    if (!l.transversal[b].has_value()) {
      *stop = k;
      return g;
    }
    g = g.Then(*l.inverse[b]);
  }
  *stop = levels_.size();
  return g;
}

bool StabilizerChain::Contains(const Permutation& g) const {
  size_t stop = 0;
  Permutation residue = Sift(g, 0, &stop);
  return stop == levels_.size() && residue.IsIdentity();
}

bool StabilizerChain::Add(const Permutation& g) {
  if (Contains(g)) return false;
  generators_.push_back(g);
  size_t stop = 0;
  Permutation residue = Sift(g, 0, &stop);
  AddAt(0, stop, residue);
  return true;
}

std::uint64_t StabilizerChain::Order() const {
  std::uint64_t order = 1;
  for (const Level& l : levels_) order *= l.orbit.size();
  return order;
}

void StabilizerChain::RebuildOrbit(Level& level) {
  level.orbit.assign(1, level.base);
  level.transversal.assign(n_, std::nullopt);
  level.inverse.assign(n_, std::nullopt);
  level.transversal[level.base] = Permutation::Identity(n_);
  level.inverse[level.base] = Permutation::Identity(n_);
  for (size_t head = 0; head < level.orbit.size(); ++head) {
    const int b = level.orbit[head];
    for (const Permutation& s : level.gens) {
      const int c = s(b);
      if (level.transversal[c].has_value()) continue;
      Permutation u = level.transversal[b]->Then(s);
      level.inverse[c] = u.Inverse();
      level.transversal[c] = std::move(u);
      level.orbit.push_back(c);
    }
  }
}

void StabilizerChain::AddAt(size_t lo, size_t hi, const Permutation& g) {
  if (hi == levels_.size()) {
    int moved = 0;
    while (moved < n_ && g(moved) == moved) ++moved;
    Level fresh;
    fresh.base = moved;
    levels_.push_back(std::move(fresh));
  }
  // g fixes every base above hi, so it lies in each of these stabilizers.
  for (size_t j = lo; j <= hi; ++j) levels_[j].gens.push_back(g);
  for (size_t j = hi + 1; j-- > lo;) {
    RebuildOrbit(levels_[j]);
    for (size_t oi = 0; oi < levels_[j].orbit.size(); ++oi) {
      for (size_t si = 0; si < levels_[j].gens.size(); ++si) {
        const Level& l = levels_[j];
        const int b = l.orbit[oi];
        const Permutation& s = l.gens[si];
        Permutation h = l.transversal[b]->Then(s).Then(*l.inverse[s(b)]);
        size_t stop = 0;
        Permutation residue = Sift(std::move(h), j + 1, &stop);
        if (stop < levels_.size() || !residue.IsIdentity()) {
          AddAt(j + 1, stop, residue);
        }
      }
    }
  }
}

}  // namespace spin_atlas
