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

#include "spin_atlas/chains/chain.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace spin_atlas {

SpinChain ReverseChain(const SpinChain& chain) {
  SpinChain out{chain.start, {}};
  const int n = static_cast<int>(chain.steps.size());
  for (int k = n - 1; k >= 0; --k) {
    const VertexId to = k == 0 ? chain.start : chain.steps[k - 1].next;
    out.steps.push_back({chain.steps[k].cell, chain.steps[k].face, to});
  }
  return out;
}

SpinChain ConcatenateChains(const SpinChain& a, const SpinChain& b) {
  SpinChain out = a;
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

std::string ChainString(const SpinChain& chain, bool show_cells) {
  std::string out = VertexName(chain.start);
  for (const ChainStep& s : chain.steps) {
    absl::StrAppend(&out, " -[", FaceName(s.face));
    if (show_cells) absl::StrAppend(&out, " @", CellName(s.cell));
    absl::StrAppend(&out, "]-> ", VertexName(s.next));
  }
  return out;
}

absl::string_view StructuralErrorName(StructuralError e) {
  switch (e) {
    case StructuralError::kOk:
      return "Ok";
    case StructuralError::kStepNotOnFace:
      return "StepNotOnFace";
    case StructuralError::kFaceNotInCell:
      return "FaceNotInCell";
    case StructuralError::kLoopNotClosed:
      return "LoopNotClosed";
  }
  return "?";
}

absl::string_view AdmissibilityReasonName(AdmissibilityReason r) {
  switch (r) {
    case AdmissibilityReason::kComposable:
      return "Composable";
    case AdmissibilityReason::kDomainMismatch:
      return "DomainMismatch";
    case AdmissibilityReason::kDegreeMismatch:
      return "DegreeMismatch";
  }
  return "?";
}

StructureCheck ValidateStructure(const ConnectionGraph& cg,
                                 const SpinChain& chain) {
  if (!cg.Contains(chain.start)) {
    return {StructuralError::kStepNotOnFace, 0,
            absl::StrCat(VertexName(chain.start), " is not a vertex")};
  }
  if (chain.steps.empty()) {
    return {StructuralError::kLoopNotClosed, -1, "chain has no steps"};
  }
  VertexId cur = chain.start;
  for (size_t k = 0; k < chain.steps.size(); ++k) {
    const ChainStep& s = chain.steps[k];
    const int step = static_cast<int>(k);
    if (!cg.Contains(s.next) || s.next == cur ||
        !FaceContains(s.face, cur) || !FaceContains(s.face, s.next)) {
      return {StructuralError::kStepNotOnFace, step,
              absl::StrCat("step ", k, ": ", VertexName(cur), "->",
                           VertexName(s.next), " not on face ",
                           FaceName(s.face))};
    }
    if (!IsFaceOf(cg, s.face) || !IsValidCellFor(cg, s.cell, s.face)) {
      return {StructuralError::kFaceNotInCell, step,
              absl::StrCat("step ", k, ": ", FaceName(s.face),
                           " is not a face of cell ", CellName(s.cell))};
    }
    cur = s.next;
  }
  if (cur != chain.start) {
    return {StructuralError::kLoopNotClosed,
            static_cast<int>(chain.steps.size()) - 1,
            absl::StrCat("loop ends at ", VertexName(cur), ", not ",
                         VertexName(chain.start))};
  }
  return {};
}

ChainCursor::ChainCursor(const ConnectionGraph& cg, VertexId start)
    : cg_(&cg),
      start_(start),
      current_(start),
      labels_(LabelSet(cg, start)),
      phi_(cg.order() + 1, -1),
      image_(cg.LabelMask(start)),
      value_(cg.order() + 1) {
  for (ClassIndex c : labels_) phi_[c] = c;
  for (int c = 0; c <= cg.order(); ++c) value_[c] = c;
}

bool ChainCursor::Advance(const LabelMap& map, VertexId next,
                          AdmissibilityReason* why) {
  if (cg_->order() == 2 && cg_->Degree(next) != cg_->Degree(start_)) {
    *why = AdmissibilityReason::kDegreeMismatch;
    return false;
  }
  const ClassMask full = cg_->LabelMask(current_);
  if (map.domain() != full) {
    if (image_ == full) {
      for (ClassIndex c : labels_) {
        if (phi_[c] >= 0 && !(map.domain() & ClassBit(phi_[c]))) phi_[c] = -1;
      }
      image_ &= map.domain();
    } else if (image_ != map.domain()) {
      *why = AdmissibilityReason::kDomainMismatch;
      return false;
    }
  }
  ClassMask image = 0;
  for (ClassIndex c : labels_) {
    if (phi_[c] < 0) continue;
    phi_[c] = map.Get(phi_[c]);
    if (phi_[c] < 0) {
      *why = AdmissibilityReason::kDomainMismatch;
      return false;
    }
    image |= ClassBit(phi_[c]);
  }
  image_ = image;
  current_ = next;
  return true;
}

void ChainCursor::CloseSegment() {
  const ClassMask full = cg_->LabelMask(start_);
  if (image_ != full) {
    const ClassMask missing = full & ~image_;
    for (ClassIndex c : labels_) {
      if (phi_[c] < 0) phi_[c] = MaskToClasses(missing)[0];
    }
  }
  for (ClassIndex c : labels_) value_[c] = phi_[value_[c]];
  for (ClassIndex c : labels_) phi_[c] = c;
  image_ = full;
}

Permutation ChainCursor::Value() const {
  std::vector<int> pos(cg_->order() + 1, -1);
  for (size_t j = 0; j < labels_.size(); ++j) pos[labels_[j]] = j;
  std::vector<int> images(labels_.size());
  for (size_t j = 0; j < labels_.size(); ++j) {
    images[j] = pos[value_[labels_[j]]];
  }
  return *Permutation::FromImages(std::move(images));
}

absl::StatusOr<ChainEngine> ChainEngine::Create(const ConnectionGraph& cg,
                                                const FaceMapTables& tables) {
  ChainEngine e;
  e.cg_ = cg;
  e.faces_ = cg.order() >= 1 ? EnumerateFaces(cg) : std::vector<Face>{};
  e.faces_at_.resize(cg.num_vertices());
  for (size_t f = 0; f < e.faces_.size(); ++f) {
    const Face& face = e.faces_[f];
    e.face_index_[face] = static_cast<int>(f);
    for (VertexId v : face.cycle) {
      e.faces_at_[VertexIndex(v)].push_back(static_cast<int>(f));
    }
    e.cells_.push_back(CellsContaining(cg, face));
    std::vector<std::vector<LabelMap>> per_cell;
    for (const Cell& cell : e.cells_.back()) {
      std::vector<LabelMap> maps(16);
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          if (a == b) continue;
          absl::StatusOr<LabelMap> m =
              FaceMap(tables, cg, cell, face, face.cycle[a], face.cycle[b]);
          if (!m.ok()) return m.status();
          maps[a * 4 + b] = *std::move(m);
        }
      }
      per_cell.push_back(std::move(maps));
    }
    e.maps_.push_back(std::move(per_cell));
  }
  return e;
}

int ChainEngine::FaceIndex(const Face& face) const {
  auto it = face_index_.find(face);
  return it == face_index_.end() ? -1 : it->second;
}

int ChainEngine::CellIndex(int face, const Cell& cell) const {
  const std::vector<Cell>& cs = cells_[face];
  auto it = std::find(cs.begin(), cs.end(), cell);
  return it == cs.end() ? -1 : static_cast<int>(it - cs.begin());
}

ChainEngine::Run ChainEngine::Execute(const SpinChain& chain) const {
  const int n = static_cast<int>(LabelSet(cg_, chain.start).size());
  Run run{{}, Permutation::Identity(n)};
  ChainCursor cursor(cg_, chain.start);
  for (size_t k = 0; k < chain.steps.size(); ++k) {
    const ChainStep& s = chain.steps[k];
    const int f = FaceIndex(s.face);
    const int c = f < 0 ? -1 : CellIndex(f, s.cell);
    const int a = FacePosition(s.face, cursor.current());
    const int b = FacePosition(s.face, s.next);
    AdmissibilityReason why = AdmissibilityReason::kDomainMismatch;
    if (c < 0 || a < 0 || b < 0 || a == b ||
        !cursor.Advance(Map(f, c, a, b), s.next, &why)) {
      run.verdict = {false, static_cast<int>(k), why};
      return run;
    }
    if (s.next == chain.start) cursor.CloseSegment();
  }
  if (cursor.current() != chain.start) {
    run.verdict = {false, static_cast<int>(chain.steps.size()) - 1,
                   AdmissibilityReason::kDomainMismatch};
    return run;
  }
  run.value = cursor.Value();
  return run;
}

AdmissibilityVerdict ChainEngine::IsAdmissible(const SpinChain& chain) const {
  return Execute(chain).verdict;
}

Permutation ChainEngine::Evaluate(const SpinChain& chain) const {
  return Execute(chain).value;
}

bool ChainEngine::IsBasic(const SpinChain& chain) const {
  for (const ChainStep& s : chain.steps) {
    if (GetFaceKind(s.face) != FaceKind::kStandard) return false;
  }
  return true;
}

void ChainEngine::ForEachChain(
    VertexId v, int max_steps,
    const std::function<bool(const SpinChain&)>& visit) const {
  SpinChain chain{v, {}};
  bool stopped = false;
  std::function<void(VertexId, int)> rec = [&](VertexId cur, int remaining) {
    if (stopped) return;
    if (remaining == 0) {
      if (cur == v && !visit(chain)) stopped = true;
      return;
    }
    for (int f : faces_at(cur)) {
      const Face& face = faces_[f];
      for (const Cell& cell : cells_[f]) {
        for (VertexId next : face.cycle) {
          if (next == cur || (remaining == 1 && next != v)) continue;
          chain.steps.push_back({cell, face, next});
          rec(next, remaining - 1);
          chain.steps.pop_back();
          if (stopped) return;
        }
      }
    }
  };
  for (int len = 2; len <= max_steps && !stopped; ++len) rec(v, len);
}

std::vector<SpinChain> ChainEngine::EnumerateChains(VertexId v,
                                                    int max_steps) const {
  std::vector<SpinChain> out;
  ForEachChain(v, max_steps, [&](const SpinChain& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

namespace {

const ChainEngine& EngineFor(const ConnectionGraph& cg,
                             std::optional<ChainEngine>& slot) {
  slot.emplace(*ChainEngine::Create(cg, FaceMapTables::Default()));
  return *slot;
}

}  // namespace

AdmissibilityVerdict IsAdmissible(const ConnectionGraph& cg,
                                  const SpinChain& chain) {
  std::optional<ChainEngine> slot;
  return EngineFor(cg, slot).IsAdmissible(chain);
}

Permutation Evaluate(const ConnectionGraph& cg, const SpinChain& chain) {
  std::optional<ChainEngine> slot;
  return EngineFor(cg, slot).Evaluate(chain);
}

std::vector<SpinChain> EnumerateChains(const ConnectionGraph& cg, VertexId v,
                                       int max_steps) {
  std::optional<ChainEngine> slot;
  return EngineFor(cg, slot).EnumerateChains(v, max_steps);
}

bool IsBasic(const ConnectionGraph& cg, const SpinChain& chain) {
  std::optional<ChainEngine> slot;
  return EngineFor(cg, slot).IsBasic(chain);
}

}  // namespace spin_atlas
