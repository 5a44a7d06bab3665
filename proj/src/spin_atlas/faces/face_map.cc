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

#include "spin_atlas/faces/face_map.h"

#include <fstream>
#include <sstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace spin_atlas {

absl::Status LabelMap::Set(ClassIndex from, ClassIndex to) {
  if (from < 0 || to < 0 || from >= num_classes() || to >= num_classes()) {
    return absl::InvalidArgumentError(
        absl::StrCat("label out of range: ", from, "->", to));
  }
  if (image_[from] == to) return absl::OkStatus();
  if (image_[from] >= 0 || (image_mask_ & ClassBit(to))) {
    return absl::InvalidArgumentError(
        absl::StrCat("not injective at ", from, "->", to));
  }
  image_[from] = static_cast<std::int8_t>(to);
  domain_ |= ClassBit(from);
  image_mask_ |= ClassBit(to);
  return absl::OkStatus();
}

LabelMap LabelMap::Inverse() const {
  LabelMap out(num_classes());
  for (auto [a, b] : Pairs()) out.Set(b, a).IgnoreError();
  return out;
}

LabelMap LabelMap::Then(const LabelMap& next) const {
  LabelMap out(num_classes());
  for (auto [a, b] : Pairs()) {
    const ClassIndex c = next.Get(b);
    if (c >= 0) out.Set(a, c).IgnoreError();
  }
  return out;
}

LabelMap LabelMap::Resized(int num_classes) const {
  LabelMap out(num_classes);
  for (auto [a, b] : Pairs()) out.Set(a, b).IgnoreError();
  return out;
}

std::vector<std::pair<ClassIndex, ClassIndex>> LabelMap::Pairs() const {
  std::vector<std::pair<ClassIndex, ClassIndex>> out;
  for (ClassIndex c : MaskToClasses(domain_)) out.emplace_back(c, image_[c]);
  return out;
}

std::string LabelMapString(const LabelMap& m) {
  if (m.size() == 0) return "-";
  return absl::StrJoin(m.Pairs(), ",", [](std::string* out, auto p) {
    absl::StrAppend(out, p.first, ":", p.second);
  });
}

namespace {

struct Role {
  ClassIndex next;
  ClassIndex prev;
};

Role RoleAt(const Face& face, int k) {
  return {face.cycle[(k + 1) % 4].cls, face.cycle[(k + 3) % 4].cls};
}

// Domain of the maps leaving the vertex at position k, and its "third"
// label (-1 if none).
std::pair<ClassMask, ClassIndex> LocalDomain(const ConnectionGraph& g,
                                             const Face& face, int k) {
  const int r = g.order();
  const VertexId x = face.cycle[k];
  const Role role = RoleAt(face, k);
  ClassMask labels = g.LabelMask(x);
  if (r == 2) {
    return {labels & (ClassBit(role.next) | ClassBit(role.prev)), -1};
  }
  const FaceKind kind = GetFaceKind(face);
  const bool full_degree = g.Degree(x) == r + 1;
  if (kind == FaceKind::kStandard && full_degree) {
    labels &= ~ClassBit(x.cls);
  } else if (kind == FaceKind::kOnePair && full_degree) {
    labels &= ~(g.AllClasses() & ~FaceClasses(face));
  }
  if (kind == FaceKind::kTwoPair) return {labels, -1};
  const ClassMask thirds =
      labels & ~(ClassBit(role.next) | ClassBit(role.prev));
  if (PopCount(thirds) != 1) return {labels, -2};
  return {labels, MaskToClasses(thirds)[0]};
}

}  // namespace

absl::StatusOr<LabelMap> SynthesizeLocalFaceMap(const ConnectionGraph& g,
                                                const Face& face, VertexId u,
                                                VertexId v) {
  const int r = g.order();
  if (r < 1 || r > 3) {
    return absl::InvalidArgumentError(
        absl::StrCat("local face maps need order 1..3, got ", r));
  }
  const int i = FacePosition(face, u);
  const int j = FacePosition(face, v);
  if (i < 0 || j < 0 || i == j) {
    return absl::InvalidArgumentError(
        absl::StrCat(VertexName(u), "->", VertexName(v),
                     " is not a pair of distinct vertices of ",
                     FaceName(face)));
  }
  const Role ru = RoleAt(face, i);
  const Role rv = RoleAt(face, j);
  LabelMap m(r + 1);
  if (absl::Status s = m.Set(ru.next, rv.next); !s.ok()) return s;
  if (absl::Status s = m.Set(ru.prev, rv.prev); !s.ok()) return s;
  const auto [du, tu] = LocalDomain(g, face, i);
  const auto [dv, tv] = LocalDomain(g, face, j);
  if (tu == -2 || tv == -2) {
    return absl::InternalError(
        absl::StrCat("no unique third label on ", FaceName(face)));
  }
  if (tu >= 0) {
    if (absl::Status s = m.Set(tu, tv); !s.ok()) return s;
  }
  if (r != 2 && GetFaceKind(face) == FaceKind::kTwoPair) {
    for (ClassIndex c : MaskToClasses(du & ~m.domain())) {
      if (absl::Status s = m.Set(c, c); !s.ok()) return s;
    }
  }
  if (g.Degree(u) == r + 1 && g.Degree(v) == r + 1) {
    const ClassMask mu = g.LabelMask(u) & ~m.domain();
    const ClassMask mv = g.LabelMask(v) & ~m.image();
    if (PopCount(mu) != PopCount(mv) || PopCount(mu) > 1) {
      return absl::InternalError(absl::StrCat(
          "cannot extend ", FaceName(face), " ", VertexName(u), "->",
          VertexName(v)));
    }
    if (mu != 0) {
      if (absl::Status s =
              m.Set(MaskToClasses(mu)[0], MaskToClasses(mv)[0]);
          !s.ok()) {
        return s;
      }
    }
  }
  if ((m.domain() & ~g.LabelMask(u)) != 0 ||
      (m.image() & ~g.LabelMask(v)) != 0) {
    return absl::InternalError(
        absl::StrCat("map leaves the label sets on ", FaceName(face)));
  }
  return m;
}

absl::StatusOr<FaceMapTables> FaceMapTables::Synthesize() {
  FaceMapTables out;
  for (int r = 1; r <= 3; ++r) {
    for (ClassMask pattern = 0; pattern < (ClassMask{1} << (r + 1));
         ++pattern) {
      const ConnectionGraph g(r, pattern);
      for (const Face& face : EnumerateFaces(g)) {
        for (VertexId u : face.cycle) {
          for (VertexId v : face.cycle) {
            if (u == v) continue;
            absl::StatusOr<LabelMap> m = SynthesizeLocalFaceMap(g, face, u, v);
            if (!m.ok()) return m.status();
            out.maps_.emplace(FaceMapKey{r, pattern, face, u, v},
                              *std::move(m));
          }
        }
      }
    }
  }
  if (absl::Status s = out.Certify(); !s.ok()) return s;
  return out;
}

const FaceMapTables& FaceMapTables::Default() {
  static const FaceMapTables* tables = [] {
    absl::StatusOr<FaceMapTables> t = Synthesize();
    if (!t.ok()) {
      std::fprintf(stderr, "face-map synthesis failed: %s\n",
                   t.status().ToString().c_str());
      std::abort();
    }
    return new FaceMapTables(*std::move(t));
  }();
  return *tables;
}

const LabelMap* FaceMapTables::Find(const FaceMapKey& key) const {
  auto it = maps_.find(key);
  return it == maps_.end() ? nullptr : &it->second;
}

namespace {

constexpr absl::string_view kHeader = "format spin-face-tables 1";

std::string VertexCode(VertexId v) {
  return absl::StrCat(v.cls, ".", v.tilded ? 1 : 0);
}

absl::StatusOr<VertexId> ParseVertexCode(absl::string_view s) {
  std::pair<absl::string_view, absl::string_view> parts =
      absl::StrSplit(s, absl::MaxSplits('.', 1));
  int cls = 0;
  int t = 0;
  if (!absl::SimpleAtoi(parts.first, &cls) ||
      !absl::SimpleAtoi(parts.second, &t) || cls < 0 || cls > 3 ||
      (t != 0 && t != 1)) {
    return absl::InvalidArgumentError(absl::StrCat("bad vertex '", s, "'"));
  }
  return VertexId{cls, t == 1};
}

}  // namespace

std::string FaceMapTables::Render() const {
  std::string out = absl::StrCat(
      "# spin-atlas face-map tables (one line per face, ordered vertex pair)\n",
      kHeader, "\n");
  for (const auto& [key, m] : maps_) {
    const std::vector<ClassIndex> conn = MaskToClasses(key.connected);
    absl::StrAppend(
        &out, "map order=", key.order,
        " connected=", conn.empty() ? "-" : absl::StrJoin(conn, ","),
        " face=",
        absl::StrJoin(key.face.cycle, ",",
                      [](std::string* o, VertexId v) {
                        o->append(VertexCode(v));
                      }),
        " from=", VertexCode(key.from), " to=", VertexCode(key.to),
        " pairs=", LabelMapString(m), "\n");
  }
  return out;
}

absl::StatusOr<FaceMapTables> FaceMapTables::Parse(absl::string_view text) {
  FaceMapTables out;
  bool seen_header = false;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    auto err = [&](absl::string_view what) {
      return absl::InvalidArgumentError(
          absl::StrCat("tables line ", line_no, ": ", what));
    };
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      if (line != kHeader) return err("missing or unsupported format header");
      seen_header = true;
      continue;
    }
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, ' ', absl::SkipEmpty());
    if (fields.size() != 7 || fields[0] != "map") return err("malformed");
    std::map<absl::string_view, absl::string_view> kv;
    for (size_t f = 1; f < fields.size(); ++f) {
      std::pair<absl::string_view, absl::string_view> p =
          absl::StrSplit(fields[f], absl::MaxSplits('=', 1));
      kv[p.first] = p.second;
    }
    for (absl::string_view name :
         {"order", "connected", "face", "from", "to", "pairs"}) {
      if (!kv.count(name)) return err(absl::StrCat("missing ", name));
    }
    FaceMapKey key;
    if (!absl::SimpleAtoi(kv["order"], &key.order) || key.order < 1 ||
        key.order > 3) {
      return err("bad order");
    }
    if (kv["connected"] != "-") {
      for (absl::string_view c : absl::StrSplit(kv["connected"], ',')) {
        int cls = 0;
        if (!absl::SimpleAtoi(c, &cls) || cls < 0 || cls > key.order) {
          return err("bad connected");
        }
        key.connected |= ClassBit(cls);
      }
    }
    std::vector<absl::string_view> fv = absl::StrSplit(kv["face"], ',');
    if (fv.size() != 4) return err("bad face");
    std::array<VertexId, 4> cycle;
    for (int j = 0; j < 4; ++j) {
      absl::StatusOr<VertexId> v = ParseVertexCode(fv[j]);
      if (!v.ok() || v->cls > key.order) return err("bad face vertex");
      cycle[j] = *v;
    }
    key.face = Face{cycle};
    if (CanonicalFace(cycle) != key.face) return err("face not canonical");
    absl::StatusOr<VertexId> from = ParseVertexCode(kv["from"]);
    absl::StatusOr<VertexId> to = ParseVertexCode(kv["to"]);
    if (!from.ok() || !to.ok()) return err("bad from/to");
    key.from = *from;
    key.to = *to;
    LabelMap m(key.order + 1);
    if (kv["pairs"] != "-") {
      for (absl::string_view p : absl::StrSplit(kv["pairs"], ',')) {
        std::pair<absl::string_view, absl::string_view> ab =
            absl::StrSplit(p, absl::MaxSplits(':', 1));
        int a = 0;
        int b = 0;
        if (!absl::SimpleAtoi(ab.first, &a) ||
            !absl::SimpleAtoi(ab.second, &b) || !m.Set(a, b).ok()) {
          return err("bad pairs");
        }
      }
    }
    if (!out.maps_.emplace(key, std::move(m)).second) {
      return err("duplicate entry");
    }
  }
  if (!seen_header) {
    return absl::InvalidArgumentError("tables: missing format header");
  }
  return out;
}

absl::StatusOr<FaceMapTables> FaceMapTables::LoadFile(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open tables '", path, "'"));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  absl::StatusOr<FaceMapTables> t = Parse(buffer.str());
  if (!t.ok()) return t.status();
  if (absl::Status s = t->Certify(); !s.ok()) return s;
  return t;
}

absl::Status FaceMapTables::Certify() const {
  // Group the stored maps by (order, pattern).
  std::map<std::pair<int, ClassMask>, int> patterns;
  for (const auto& [key, m] : maps_) patterns[{key.order, key.connected}]++;
  for (const auto& [pattern, count] : patterns) {
    const auto [r, connected] = pattern;
    const ConnectionGraph g(r, connected);
    auto fail = [&](const Face& face, absl::string_view what) {
      return absl::FailedPreconditionError(
          absl::StrCat("face-map tables: order ", r, " pattern {",
                       absl::StrJoin(MaskToClasses(connected), ","), "} face ",
                       FaceName(face), ": ", what));
    };
    int expected = 0;
    for (const Face& face : EnumerateFaces(g)) {
      expected += 12;
      auto get = [&](int a, int b) {
        return Find({r, connected, face, face.cycle[a], face.cycle[b]});
      };
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          if (a == b) continue;
          if (get(a, b) == nullptr) return fail(face, "missing map");
        }
      }
      const FaceKind kind = GetFaceKind(face);
      for (int a = 0; a < 4; ++a) {
        const VertexId u = face.cycle[a];
        ClassMask partial_domain = 0;
        for (int b = 0; b < 4; ++b) {
          if (a == b) continue;
          const VertexId v = face.cycle[b];
          const LabelMap& m = *get(a, b);
          if (m.num_classes() != r + 1 ||
              (m.domain() & ~g.LabelMask(u)) != 0 ||
              (m.image() & ~g.LabelMask(v)) != 0) {
            return fail(face, "map leaves the label sets");
          }
          if (!(m.Inverse() == *get(b, a))) {
            return fail(face, "maps u->v and v->u are not inverse");
          }
          const bool total = m.domain() == g.LabelMask(u);
          if (!total) {
            if (partial_domain == 0) partial_domain = m.domain();
            if (partial_domain != m.domain()) {
              return fail(face, "domain of a vertex depends on the target");
            }
          }
          const bool both_full =
              g.Degree(u) == r + 1 && g.Degree(v) == r + 1;
          if (both_full && !total) {
            return fail(face, "degree r+1 endpoints need a total map");
          }
          if (both_full && kind == FaceKind::kStandard &&
              m.Get(u.cls) != v.cls) {
            return fail(face, "own class must map to own class");
          }
          if (kind == FaceKind::kTwoPair && r != 2 && !total) {
            return fail(face, "two-pair maps must be total");
          }
          for (int c = 0; c < 4; ++c) {
            if (c == a || c == b) continue;
            const LabelMap direct = *get(a, c);
            const LabelMap via = m.Then(*get(b, c));
            for (auto [x, y] : via.Pairs()) {
              if (direct.Get(x) != y) {
                return fail(face, "maps do not compose along the face");
              }
            }
          }
          const Face conj = ConjugateFace(face);
          const LabelMap* cm = Find(
              {r, connected, conj, Conjugate(u), Conjugate(v)});
          if (cm == nullptr || !(*cm == m)) {
            return fail(face, "conjugate face table differs");
          }
        }
      }
      LabelMap around = *get(0, 1);
      around = around.Then(*get(1, 2)).Then(*get(2, 3)).Then(*get(3, 0));
      for (auto [x, y] : around.Pairs()) {
        if (x != y) return fail(face, "cyclic composition is not identity");
      }
    }
    if (count != expected) {
      return absl::FailedPreconditionError(absl::StrCat(
          "face-map tables: order ", r, " pattern has ", count,
          " maps, expected ", expected));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<LabelMap> FaceMap(const FaceMapTables& tables,
                                 const ConnectionGraph& cg, const Cell& cell,
                                 const Face& face, VertexId u, VertexId v) {
  if (u == v || !FaceContains(face, u) || !FaceContains(face, v)) {
    return absl::InvalidArgumentError(
        absl::StrCat(VertexName(u), "->", VertexName(v),
                     " is not a pair of distinct vertices of ",
                     FaceName(face)));
  }
  if (!IsFaceOf(cg, face)) {
    return absl::InvalidArgumentError(
        absl::StrCat(FaceName(face), " is not a face of the graph"));
  }
  if (!IsValidCellFor(cg, cell, face)) {
    return absl::InvalidArgumentError(absl::StrCat(
        FaceName(face), " does not lie in cell ", CellName(cell)));
  }
  const int r = cg.order();
  if (r <= 3) {
    const LabelMap* m = tables.Find({r, cg.connected_mask(), face, u, v});
    if (m == nullptr) {
      return absl::NotFoundError(
          absl::StrCat("no face-map table for ", FaceName(face)));
    }
    return *m;
  }
  absl::StatusOr<DecoratedCell> dc = MakeDecoratedCell(cg, cell);
  if (!dc.ok()) return dc.status();
  std::array<VertexId, 4> local;
  for (int j = 0; j < 4; ++j) local[j] = dc->ToLocal(face.cycle[j]);
  const LabelMap* m =
      tables.Find({3, dc->local().connected_mask(), CanonicalFace(local),
                   dc->ToLocal(u), dc->ToLocal(v)});
  if (m == nullptr) {
    return absl::NotFoundError(
        absl::StrCat("no face-map table for ", FaceName(face), " in cell ",
                     CellName(cell)));
  }
  LabelMap out(r + 1);
  for (auto [a, b] : m->Pairs()) {
    if (absl::Status s = out.Set(dc->ToGlobalClass(a), dc->ToGlobalClass(b));
        !s.ok()) {
      return s;
    }
  }
  for (ClassIndex c : MaskToClasses(cg.AllClasses() & ~cell.classes)) {
    if (absl::Status s = out.Set(c, c); !s.ok()) return s;
  }
  return out;
}

}  // namespace spin_atlas
