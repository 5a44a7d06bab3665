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

#include "spin_atlas/groups/spin_group.h"

#include <atomic>
#include <thread>

#include "absl/strings/str_cat.h"
#include "spin_atlas/groups/stabilizer_chain.h"

namespace spin_atlas {

absl::Status ValidateBudget(const SearchBudget& budget) {
  if (budget.max_steps < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("max_steps must be >= 2, got ", budget.max_steps));
  }
  if (budget.escalate_steps < budget.max_steps) {
    return absl::InvalidArgumentError(
        "escalate_steps must be >= max_steps");
  }
  if (budget.closure_cap < 1) {
    return absl::InvalidArgumentError("closure_cap must be >= 1");
  }
  return absl::OkStatus();
}

GroupVerdict PredictGroup(const ConnectionGraph& cg, VertexId v) {
  const int r = cg.order();
  if (r <= 1) return GroupVerdict::Trivial();
  if (r == 2) {
    if (cg.IsConnected(0)) return GroupVerdict::Symmetric(3);
    if (cg.IsConnected(1)) {
      return v.cls == 0 ? GroupVerdict::Trivial() : GroupVerdict::Symmetric(3);
    }
    return v.cls == 2 ? GroupVerdict::C3() : GroupVerdict::Trivial();
  }
  return GroupVerdict::Symmetric(EpsilonDegree(cg, v));
}

namespace {

class Search {
 public:
  Search(const ChainEngine& engine, VertexId v, const SearchBudget& budget,
         SpinGroupResult& result)
      : engine_(engine),
        v_(v),
        budget_(budget),
        result_(result),
        group_(result.degree) {}

  void Run() {
    int limit = budget_.max_steps;
    int quiet_levels = 0;
    for (int len = 2; len <= limit && !done_; ++len) {
      grew_ = false;
      chain_ = SpinChain{v_, {}};
      Extend(ChainCursor(engine_.graph(), v_), len);
      result_.steps_searched = len;
      if (done_) break;
      quiet_levels = grew_ ? 0 : quiet_levels + 1;
      if (!budget_.exhaustive && len >= 3 && quiet_levels >= 2) break;
      if (len == limit && grew_ && limit < budget_.escalate_steps &&
          !budget_.exhaustive) {
        limit = budget_.escalate_steps;
      }
    }
  }

  const StabilizerChain& group() const { return group_; }

 private:
  void Extend(const ChainCursor& cursor, int remaining) {
    const VertexId cur = cursor.current();
    for (int f : engine_.faces_at(cur)) {
      const Face& face = engine_.faces()[f];
      const int a = FacePosition(face, cur);
      for (int c = 0; c < static_cast<int>(engine_.cells(f).size()); ++c) {
        for (int b = 0; b < 4; ++b) {
          const VertexId next = face.cycle[b];
          // Returning to the base early only yields products of shorter
          // loops.
          if (b == a || (remaining == 1) != (next == v_)) continue;
          ChainCursor nc = cursor;
          AdmissibilityReason why;
          if (!nc.Advance(engine_.Map(f, c, a, b), next, &why)) continue;
          chain_.steps.push_back({engine_.cells(f)[c], face, next});
          if (remaining == 1) {
            nc.CloseSegment();
            Consider(nc.Value());
          } else {
            Extend(nc, remaining - 1);
          }
          chain_.steps.pop_back();
          if (done_) return;
        }
      }
    }
  }

  void Consider(const Permutation& value) {
    ++result_.chains_evaluated;
    if (!group_.Add(value)) return;
    grew_ = true;
    result_.witnesses.push_back(chain_);
    result_.witness_values.push_back(value);
    const GroupVerdict& predicted = result_.predicted;
    if (!budget_.exhaustive &&
        predicted.kind() == GroupVerdict::Kind::kSymmetric &&
        predicted.n() == result_.degree &&
        group_.Order() == predicted.order()) {
      done_ = true;
    }
  }

  const ChainEngine& engine_;
  VertexId v_;
  const SearchBudget& budget_;
  SpinGroupResult& result_;
  StabilizerChain group_;
  SpinChain chain_;
  bool grew_ = false;
  bool done_ = false;
};

}  // namespace

absl::StatusOr<SpinGroupResult> SpinGroupAt(const ChainEngine& engine,
                                            VertexId v,
                                            const SearchBudget& budget) {
  if (absl::Status s = ValidateBudget(budget); !s.ok()) return s;
  const ConnectionGraph& cg = engine.graph();
  if (!cg.Contains(v)) {
    return absl::InvalidArgumentError(
        absl::StrCat(VertexName(v), " is not a vertex of the graph"));
  }
  SpinGroupResult result;
  result.vertex = v;
  result.degree = EpsilonDegree(cg, v);
  if (result.degree > kMaxPermutationDegree) {
    return absl::InvalidArgumentError(
        absl::StrCat("label set of size ", result.degree, " is too large"));
  }
  result.predicted = PredictGroup(cg, v);
  Search search(engine, v, budget, result);
  search.Run();

  const int n = result.degree;
  if (Factorial(n) <= budget.closure_cap) {
    absl::StatusOr<PermGroup> closed =
        Closure(result.witness_values, n, budget.closure_cap);
    if (!closed.ok()) return closed.status();
    if (closed->order() != search.group().Order()) {
      return absl::InternalError("closure and stabilizer chain disagree");
    }
    result.computed = Recognize(*closed);
  } else {
    bool all_even = true;
    for (const Permutation& g : result.witness_values) all_even &= g.IsEven();
    result.computed = RecognizeOrder(search.group().Order(), n, all_even);
  }
  result.match = result.computed == result.predicted;
  result.over_generated = result.computed.order() > result.predicted.order();
  return result;
}

absl::StatusOr<ClassReport> VerifyClass(const GraphClass& gc,
                                        const FaceMapTables& tables,
                                        const SearchBudget& budget, int jobs) {
  if (absl::Status s = ValidateGraphClass(gc); !s.ok()) return s;
  if (absl::Status s = ValidateBudget(budget); !s.ok()) return s;
  ClassReport report;
  report.gc = gc;
  report.cg = BuildConnectionGraph(gc);
  absl::StatusOr<ChainEngine> engine = ChainEngine::Create(report.cg, tables);
  if (!engine.ok()) return engine.status();
  const std::vector<VertexId> vertices = report.cg.Vertices();
  std::vector<absl::StatusOr<SpinGroupResult>> results(
      vertices.size(), absl::UnknownError("not run"));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < vertices.size(); k = next++) {
      results[k] = SpinGroupAt(*engine, vertices[k], budget);
    }
  };
  const int threads =
      std::max(1, std::min<int>(jobs, static_cast<int>(vertices.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  report.match_all = true;
  for (auto& r : results) {
    if (!r.ok()) return r.status();
    report.match_all &= r->match;
    report.vertices.push_back(*std::move(r));
  }
  return report;
}

}  // namespace spin_atlas
