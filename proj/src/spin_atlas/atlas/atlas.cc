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

#include "spin_atlas/atlas/atlas.h"

#include <map>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "spin_atlas/core/connection_graph.h"

namespace spin_atlas {

namespace {

std::string IntList(const std::vector<int>& v) {
  return v.empty() ? "-" : absl::StrJoin(v, ",");
}

absl::StatusOr<std::vector<int>> ParseIntList(absl::string_view s) {
  std::vector<int> out;
  if (s == "-") return out;
  for (absl::string_view part : absl::StrSplit(s, ',')) {
    int x = 0;
    if (!absl::SimpleAtoi(part, &x)) {
      return absl::InvalidArgumentError(absl::StrCat("bad integer list '", s,
                                                     "'"));
    }
    out.push_back(x);
  }
  return out;
}

std::string VerdictList(const std::vector<GroupVerdict>& v) {
  return absl::StrJoin(v, ",", [](std::string* out, const GroupVerdict& g) {
    out->append(g.ToString());
  });
}

absl::StatusOr<std::vector<GroupVerdict>> ParseVerdictList(
    absl::string_view s) {
  std::vector<GroupVerdict> out;
  // "Other(n)" never contains a comma, so a plain split is safe.
  for (absl::string_view part : absl::StrSplit(s, ',')) {
    absl::StatusOr<GroupVerdict> g = GroupVerdict::Parse(part);
    if (!g.ok()) return g.status();
    out.push_back(*g);
  }
  return out;
}

std::string ClassFields(const GraphClass& gc) {
  return absl::StrCat("genus=", gc.genus, " order=", gc.order, " i=", gc.i,
                      " p=", IntList(gc.p));
}

std::string VertexCode(VertexId v) {
  return VertexName(v);
}

}  // namespace

AtlasRow MakeAtlasRow(const ClassReport& report) {
  AtlasRow row;
  row.genus = report.gc.genus;
  row.order = report.gc.order;
  row.i = report.gc.i;
  row.p = report.gc.p;
  row.k = KTuple(report.gc);
  row.connected = report.cg.connected_pairs();
  row.heads = Heads(report.gc);
  for (int c = 0; c <= report.gc.order; ++c) {
    row.degrees.push_back(EpsilonDegree(report.cg, {c, false}));
  }
  for (const SpinGroupResult& v : report.vertices) {
    row.predicted.push_back(v.predicted);
    row.computed.push_back(v.computed);
  }
  row.match = report.match_all;
  return row;
}

std::string RenderAtlasRecord(const AtlasRow& row) {
  return absl::StrCat(
      "row genus=", row.genus, " order=", row.order, " i=", row.i,
      " p=", IntList(row.p), " k=", IntList(row.k),
      " connected=", IntList(row.connected), " heads=", IntList(row.heads),
      " degrees=", IntList(row.degrees),
      " predicted=", VerdictList(row.predicted),
      " computed=", VerdictList(row.computed), " match=", row.match ? 1 : 0);
}

absl::StatusOr<AtlasRow> ParseAtlasRecord(absl::string_view line) {
  static constexpr absl::string_view kFields[] = {
      "genus", "order", "i", "p", "k", "connected", "heads", "degrees",
      "predicted", "computed", "match"};
  std::vector<absl::string_view> parts =
      absl::StrSplit(line, ' ', absl::SkipEmpty());
  if (parts.size() != 12 || parts[0] != "row") {
    return absl::InvalidArgumentError("not an atlas row record");
  }
  std::map<absl::string_view, absl::string_view> kv;
  for (size_t j = 1; j < parts.size(); ++j) {
    std::pair<absl::string_view, absl::string_view> f =
        absl::StrSplit(parts[j], absl::MaxSplits('=', 1));
    if (f.first != kFields[j - 1]) {
      return absl::InvalidArgumentError(
          absl::StrCat("expected field ", kFields[j - 1], ", got '", f.first,
                       "'"));
    }
    kv[f.first] = f.second;
  }
  AtlasRow row;
  if (!absl::SimpleAtoi(kv["genus"], &row.genus) ||
      !absl::SimpleAtoi(kv["order"], &row.order) ||
      !absl::SimpleAtoi(kv["i"], &row.i)) {
    return absl::InvalidArgumentError("bad integer field");
  }
  struct ListField {
    absl::string_view name;
    std::vector<int>* out;
  };
  for (ListField lf : {ListField{"p", &row.p}, ListField{"k", &row.k},
                       ListField{"connected", &row.connected},
                       ListField{"heads", &row.heads},
                       ListField{"degrees", &row.degrees}}) {
    absl::StatusOr<std::vector<int>> v = ParseIntList(kv[lf.name]);
    if (!v.ok()) return v.status();
    *lf.out = *std::move(v);
  }
  absl::StatusOr<std::vector<GroupVerdict>> pred =
      ParseVerdictList(kv["predicted"]);
  if (!pred.ok()) return pred.status();
  absl::StatusOr<std::vector<GroupVerdict>> comp =
      ParseVerdictList(kv["computed"]);
  if (!comp.ok()) return comp.status();
  row.predicted = *std::move(pred);
  row.computed = *std::move(comp);
  if (kv["match"] != "0" && kv["match"] != "1") {
    return absl::InvalidArgumentError("match must be 0 or 1");
  }
  row.match = kv["match"] == "1";
  return row;
}

std::string RenderAtlasTable(const std::vector<AtlasRow>& rows) {
  std::string out = absl::StrFormat("%-5s %-5s %-14s %-16s %-12s %-10s %-16s %s\n",
                                    "genus", "order", "(i;p)", "k", "connected",
                                    "heads", "degrees", "groups / match");
  for (const AtlasRow& row : rows) {
    std::vector<std::string> groups;
    for (size_t c = 0; 2 * c + 1 < row.computed.size(); ++c) {
      const GroupVerdict& a = row.computed[2 * c];
      const GroupVerdict& b = row.computed[2 * c + 1];
      std::string name = VertexName({static_cast<int>(c), false});
      groups.push_back(a == b ? absl::StrCat(name, ":", a.ToString())
                              : absl::StrCat(name, ":", a.ToString(), "|",
                                             b.ToString()));
    }
    absl::StrAppend(
        &out,
        absl::StrFormat("%-5d %-5d %-14s %-16s %-12s %-10s %-16s %s %s\n",
                        row.genus, row.order,
                        absl::StrCat("(", row.i, ";", IntList(row.p), ")"),
                        IntList(row.k), IntList(row.connected),
                        IntList(row.heads), IntList(row.degrees),
                        absl::StrJoin(groups, " "),
                        row.match ? "ok" : "MISMATCH"));
  }
  return out;
}

std::string EncodeChain(const SpinChain& chain, bool with_cells) {
  std::vector<std::string> steps;
  for (const ChainStep& s : chain.steps) {
    std::string step = absl::StrCat(
        VertexCode(s.next), ":",
        absl::StrJoin(s.face.cycle, ",", [](std::string* o, VertexId v) {
          o->append(VertexCode(v));
        }));
    if (with_cells) {
      absl::StrAppend(&step, "@",
                      absl::StrJoin(MaskToClasses(s.cell.classes), "."));
    }
    steps.push_back(std::move(step));
  }
  return absl::StrCat(VertexCode(chain.start), ";", absl::StrJoin(steps, ";"));
}

std::string RenderClassifyText(const ClassReport& report,
                               const std::vector<VertexId>& vertices) {
  const bool cells = report.gc.order >= 4;
  std::string out = absl::StrCat(
      "class ", ClassLabel(report.gc), " k=", IntList(KTuple(report.gc)),
      " connected=", IntList(report.cg.connected_pairs()),
      " heads=", IntList(Heads(report.gc)), "\n");
  for (const SpinGroupResult& v : report.vertices) {
    if (std::find(vertices.begin(), vertices.end(), v.vertex) ==
        vertices.end()) {
      continue;
    }
    absl::StrAppend(
        &out,
        absl::StrFormat("%-4s degree=%d labels=%s predicted=%s computed=%s %s\n",
                        VertexName(v.vertex), v.degree,
                        IntList(LabelSet(report.cg, v.vertex)),
                        v.predicted.ToString(), v.computed.ToString(),
                        v.match ? "ok" : "MISMATCH"));
    for (size_t w = 0; w < v.witnesses.size(); ++w) {
      absl::StrAppend(&out, "  ", v.witness_values[w].ToCycleString(), "  ",
                      ChainString(v.witnesses[w], cells), "\n");
    }
  }
  return out;
}

std::string RenderClassifyRecords(const ClassReport& report,
                                  const std::vector<VertexId>& vertices) {
  const bool cells = report.gc.order >= 4;
  std::string out;
  for (const SpinGroupResult& v : report.vertices) {
    if (std::find(vertices.begin(), vertices.end(), v.vertex) ==
        vertices.end()) {
      continue;
    }
    absl::StrAppend(&out, "vertex ", ClassFields(report.gc),
                    " name=", VertexName(v.vertex), " degree=", v.degree,
                    " labels=", IntList(LabelSet(report.cg, v.vertex)),
                    " predicted=", v.predicted.ToString(),
                    " computed=", v.computed.ToString(),
                    " match=", v.match ? 1 : 0,
                    " steps=", v.steps_searched, "\n");
    for (size_t w = 0; w < v.witnesses.size(); ++w) {
      absl::StrAppend(&out, "witness ", ClassFields(report.gc),
                      " name=", VertexName(v.vertex), " index=", w,
                      " value=", v.witness_values[w].ToCycleString(),
                      " chain=", EncodeChain(v.witnesses[w], cells), "\n");
    }
  }
  return out;
}

std::string RenderMismatches(const ClassReport& report) {
  std::string out;
  for (const SpinGroupResult& v : report.vertices) {
    if (v.match) continue;
    absl::StrAppend(&out, "mismatch ", ClassFields(report.gc),
                    " name=", VertexName(v.vertex), " degree=", v.degree,
                    " predicted=", v.predicted.ToString(),
                    " computed=", v.computed.ToString(),
                    " steps=", v.steps_searched, "\n");
  }
  return out;
}

absl::StatusOr<std::string> ExportDot(const GraphClass& gc, DotKind kind) {
  if (absl::Status s = ValidateGraphClass(gc); !s.ok()) return s;
  if (kind == DotKind::kFull && gc.order > 2) {
    return absl::UnimplementedError(absl::StrCat(
        "FullExportUnsupported: full graphs are only defined for r <= 2, "
        "got r=",
        gc.order));
  }
  const ConnectionGraph cg = BuildConnectionGraph(gc);
  std::string out = absl::StrCat(
      "graph spin_graph {\n", "  label=\"", ClassLabel(gc),
      kind == DotKind::kFull ? " full" : " connection", "\";\n",
      "  node [shape=circle];\n");
  for (VertexId v : cg.Vertices()) {
    absl::StrAppend(&out, "  \"", VertexName(v), "\";\n");
  }
  if (kind == DotKind::kConnection) {
    for (VertexId u : cg.Vertices()) {
      for (VertexId v : cg.Neighbors(u)) {
        if (v < u) continue;
        absl::StrAppend(&out, "  \"", VertexName(u), "\" -- \"",
                        VertexName(v), "\" [style=dashed];\n");
      }
    }
  } else {
    absl::StatusOr<std::vector<EdgeMultiplicity>> edges =
        EdgeMultiplicitiesRLe2(gc);
    if (!edges.ok()) return edges.status();
    for (const EdgeMultiplicity& e : *edges) {
      absl::StrAppend(&out, "  \"", VertexName(e.u), "\" -- \"",
                      VertexName(e.v), "\" [label=\"", e.straight, "\"];\n");
      if (e.arc > 0) {
        const VertexId other = e.arc_owner == e.u ? e.v : e.u;
        absl::StrAppend(&out, "  \"", VertexName(e.arc_owner), "\" -- \"",
                        VertexName(other), "\" [label=\"", e.arc,
                        "\", style=bold, dir=forward];\n");
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace spin_atlas
