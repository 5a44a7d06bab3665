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

#include "spin_atlas/spin_atlas.h"

#include <algorithm>
#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "spin_atlas/atlas/atlas.h"
#include "spin_atlas/core/connection_graph.h"
#include "spin_atlas/core/graph_class.h"
#include "spin_atlas/faces/face_map.h"
#include "spin_atlas/groups/spin_group.h"

struct sa_context {
  sa_options options;
  std::optional<spin_atlas::FaceMapTables> loaded;
  const spin_atlas::FaceMapTables* tables = nullptr;
};

struct sa_class {
  spin_atlas::GraphClass gc;
  spin_atlas::ConnectionGraph cg;
};

struct sa_buffer {
  std::string data;
};

namespace {

thread_local std::string last_error;

sa_status Fail(sa_status code, const absl::Status& status) {
  last_error = std::string(status.message());
  return code;
}

sa_status FromStatus(const absl::Status& status,
                     sa_status invalid = SA_ERR_INVALID_ARGUMENT) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return SA_OK;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kFailedPrecondition:
      return Fail(invalid, status);
    case absl::StatusCode::kUnimplemented:
      return Fail(SA_ERR_UNSUPPORTED, status);
    case absl::StatusCode::kNotFound:
      return Fail(SA_ERR_IO, status);
    case absl::StatusCode::kResourceExhausted:
      return Fail(SA_ERR_CAP_EXCEEDED, status);
    default:
      return Fail(SA_ERR_INTERNAL, status);
  }
}

sa_status Emit(std::string text, sa_buffer** out) {
  *out = new sa_buffer{std::move(text)};
  return SA_OK;
}

spin_atlas::SearchBudget BudgetOf(const sa_options& o) {
  spin_atlas::SearchBudget b;
  b.max_steps = o.max_steps;
  b.escalate_steps = std::max(o.escalate_steps, o.max_steps);
  b.closure_cap = o.closure_cap;
  b.exhaustive = o.exhaustive != 0;
  return b;
}

absl::Status CheckGenus(const sa_context* ctx, int genus) {
  if (genus < 2 || genus > ctx->options.max_genus) {
    return absl::InvalidArgumentError(
        absl::StrCat("genus must be in 2..", ctx->options.max_genus, ", got ",
                     genus));
  }
  return absl::OkStatus();
}

// Verifies every class, `jobs` classes at a time, keeping input order.
absl::StatusOr<std::vector<spin_atlas::ClassReport>> VerifyAll(
    const sa_context* ctx, const std::vector<spin_atlas::GraphClass>& classes) {
  const spin_atlas::SearchBudget budget = BudgetOf(ctx->options);
  std::vector<absl::StatusOr<spin_atlas::ClassReport>> results(
      classes.size(), absl::UnknownError("not run"));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < classes.size(); k = next++) {
      results[k] = spin_atlas::VerifyClass(classes[k], *ctx->tables, budget);
    }
  };
  const int threads = std::max(
      1, std::min<int>(ctx->options.jobs, static_cast<int>(classes.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::vector<spin_atlas::ClassReport> out;
  for (auto& r : results) {
    if (!r.ok()) return r.status();
    out.push_back(*std::move(r));
  }
  return out;
}

}  // namespace

extern "C" {

const char* sa_version(void) { return "1.0.0"; }

const char* sa_status_name(sa_status status) {
  switch (status) {
    case SA_OK:
      return "OK";
    case SA_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case SA_ERR_INVALID_CLASS:
      return "InvalidClass";
    case SA_ERR_UNSUPPORTED:
      return "Unsupported";
    case SA_ERR_IO:
      return "IoError";
    case SA_ERR_CAP_EXCEEDED:
      return "CapExceeded";
    case SA_ERR_INTERNAL:
      return "Internal";
  }
  return "Unknown";
}

const char* sa_last_error(void) { return last_error.c_str(); }

void sa_options_init(sa_options* options) {
  if (options == nullptr) return;
  const spin_atlas::SearchBudget b;
  options->max_steps = b.max_steps;
  options->escalate_steps = b.escalate_steps;
  options->closure_cap = b.closure_cap;
  options->exhaustive = 0;
  options->jobs = 1;
  options->max_genus = 12;
}

sa_status sa_context_create(const sa_options* options, const char* tables_path,
                            sa_context** out) {
  if (out == nullptr) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("out is NULL"));
  }
  auto ctx = std::make_unique<sa_context>();
  sa_options_init(&ctx->options);
  if (options != nullptr) ctx->options = *options;
  if (ctx->options.jobs < 1) ctx->options.jobs = 1;
  if (absl::Status s = spin_atlas::ValidateBudget(BudgetOf(ctx->options));
      !s.ok()) {
    return FromStatus(s);
  }
  if (ctx->options.max_genus < 2) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("max_genus must be >= 2"));
  }
  if (tables_path != nullptr && tables_path[0] != '\0') {
    absl::StatusOr<spin_atlas::FaceMapTables> t =
        spin_atlas::FaceMapTables::LoadFile(tables_path);
    if (!t.ok()) return FromStatus(t.status());
    ctx->loaded = *std::move(t);
    ctx->tables = &*ctx->loaded;
  } else {
    ctx->tables = &spin_atlas::FaceMapTables::Default();
  }
  *out = ctx.release();
  return SA_OK;
}

void sa_context_destroy(sa_context* ctx) { delete ctx; }

sa_status sa_class_create(int genus, int order, int i, const int* p,
                          size_t p_len, sa_class** out) {
  if (out == nullptr || (p == nullptr && p_len > 0)) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("NULL argument"));
  }
  absl::StatusOr<spin_atlas::GraphClass> gc = spin_atlas::MakeGraphClass(
      genus, order, i, std::vector<int>(p, p + p_len));
  if (!gc.ok()) return FromStatus(gc.status(), SA_ERR_INVALID_CLASS);
  *out = new sa_class{*gc, spin_atlas::BuildConnectionGraph(*gc)};
  return SA_OK;
}

void sa_class_destroy(sa_class* cls) { delete cls; }

int sa_class_order(const sa_class* cls) {
  return cls == nullptr ? -1 : cls->gc.order;
}

sa_status sa_class_k_tuple(const sa_class* cls, int* out, size_t cap,
                           size_t* len) {
  if (cls == nullptr || len == nullptr) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("NULL argument"));
  }
  const std::vector<int> k = spin_atlas::KTuple(cls->gc);
  *len = k.size();
  if (cap < k.size() || out == nullptr) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("output buffer too small"));
  }
  std::copy(k.begin(), k.end(), out);
  return SA_OK;
}

sa_status sa_class_epsilon_degree(const sa_class* cls, const char* vertex,
                                  int* degree) {
  if (cls == nullptr || vertex == nullptr || degree == nullptr) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("NULL argument"));
  }
  absl::StatusOr<spin_atlas::VertexId> v =
      spin_atlas::ParseVertexName(vertex, cls->gc.order);
  if (!v.ok()) return FromStatus(v.status());
  *degree = spin_atlas::EpsilonDegree(cls->cg, *v);
  return SA_OK;
}

sa_status sa_class_count(int genus, int order, size_t* count) {
  if (count == nullptr) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("NULL argument"));
  }
  *count = spin_atlas::EnumerateClasses(
               genus, order < 0 ? std::nullopt : std::optional<int>(order))
               .size();
  return SA_OK;
}

sa_status sa_atlas(sa_context* ctx, int genus, int order, sa_format format,
                   sa_buffer** out) {
  if (ctx == nullptr || out == nullptr) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("NULL argument"));
  }
  if (absl::Status s = CheckGenus(ctx, genus); !s.ok()) return FromStatus(s);
  if (order >= genus) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError(absl::StrCat(
                    "order must be < genus, got ", order)));
  }
  const std::vector<spin_atlas::GraphClass> classes =
      spin_atlas::EnumerateClasses(
          genus, order < 0 ? std::nullopt : std::optional<int>(order));
  absl::StatusOr<std::vector<spin_atlas::ClassReport>> reports =
      VerifyAll(ctx, classes);
  if (!reports.ok()) return FromStatus(reports.status(), SA_ERR_INTERNAL);
  std::vector<spin_atlas::AtlasRow> rows;
  for (const auto& r : *reports) rows.push_back(spin_atlas::MakeAtlasRow(r));
  if (format == SA_FORMAT_TEXT) return Emit(RenderAtlasTable(rows), out);
  std::string text;
  for (const auto& row : rows) {
    absl::StrAppend(&text, spin_atlas::RenderAtlasRecord(row), "\n");
  }
  return Emit(std::move(text), out);
}

sa_status sa_classify(sa_context* ctx, const sa_class* cls, const char* vertex,
                      sa_format format, sa_buffer** out) {
  if (ctx == nullptr || cls == nullptr || out == nullptr) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("NULL argument"));
  }
  std::vector<spin_atlas::VertexId> vertices = cls->cg.Vertices();
  if (vertex != nullptr) {
    absl::StatusOr<spin_atlas::VertexId> v =
        spin_atlas::ParseVertexName(vertex, cls->gc.order);
    if (!v.ok()) return FromStatus(v.status());
    vertices = {*v};
  }
  absl::StatusOr<spin_atlas::ClassReport> report = spin_atlas::VerifyClass(
      cls->gc, *ctx->tables, BudgetOf(ctx->options), ctx->options.jobs);
  if (!report.ok()) return FromStatus(report.status(), SA_ERR_INTERNAL);
  return Emit(format == SA_FORMAT_TEXT
                  ? spin_atlas::RenderClassifyText(*report, vertices)
                  : spin_atlas::RenderClassifyRecords(*report, vertices),
              out);
}

sa_status sa_verify(sa_context* ctx, int genus_lo, int genus_hi,
                    const int* orders, size_t orders_len, sa_format format,
                    int* all_match, sa_buffer** out) {
  if (ctx == nullptr || out == nullptr || all_match == nullptr ||
      (orders == nullptr && orders_len > 0)) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("NULL argument"));
  }
  if (absl::Status s = CheckGenus(ctx, genus_lo); !s.ok()) return FromStatus(s);
  if (absl::Status s = CheckGenus(ctx, genus_hi); !s.ok()) return FromStatus(s);
  if (genus_lo > genus_hi) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("empty genus range"));
  }
  std::vector<int> wanted(orders, orders + orders_len);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  std::vector<spin_atlas::GraphClass> classes;
  for (int g = genus_lo; g <= genus_hi; ++g) {
    for (spin_atlas::GraphClass& gc : spin_atlas::EnumerateClasses(g)) {
      if (wanted.empty() ||
          std::binary_search(wanted.begin(), wanted.end(), gc.order)) {
        classes.push_back(std::move(gc));
      }
    }
  }
  absl::StatusOr<std::vector<spin_atlas::ClassReport>> reports =
      VerifyAll(ctx, classes);
  if (!reports.ok()) return FromStatus(reports.status(), SA_ERR_INTERNAL);
  std::vector<spin_atlas::AtlasRow> rows;
  std::string mismatches;
  size_t vertices = 0;
  size_t bad = 0;
  for (const auto& r : *reports) {
    rows.push_back(spin_atlas::MakeAtlasRow(r));
    mismatches += spin_atlas::RenderMismatches(r);
    vertices += r.vertices.size();
    for (const auto& v : r.vertices) bad += v.match ? 0 : 1;
  }
  std::string text;
  if (format == SA_FORMAT_TEXT) {
    text = spin_atlas::RenderAtlasTable(rows);
  } else {
    for (const auto& row : rows) {
      absl::StrAppend(&text, spin_atlas::RenderAtlasRecord(row), "\n");
    }
  }
  text += mismatches;
  absl::StrAppend(
      &text, "summary genus=", genus_lo, "..", genus_hi, " orders=",
      wanted.empty() ? "all" : absl::StrJoin(wanted, ","),
      " classes=", rows.size(), " vertices=", vertices, " mismatches=", bad,
      " status=", bad == 0 ? "ok" : "mismatch", "\n");
  *all_match = bad == 0 ? 1 : 0;
  return Emit(std::move(text), out);
}

sa_status sa_export_dot(const sa_class* cls, sa_dot_kind kind,
                        sa_buffer** out) {
  if (cls == nullptr || out == nullptr) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("NULL argument"));
  }
  absl::StatusOr<std::string> dot = spin_atlas::ExportDot(
      cls->gc, kind == SA_DOT_FULL ? spin_atlas::DotKind::kFull
                                   : spin_atlas::DotKind::kConnection);
  if (!dot.ok()) return FromStatus(dot.status());
  return Emit(*std::move(dot), out);
}

sa_status sa_render_tables(sa_buffer** out) {
  if (out == nullptr) {
    return Fail(SA_ERR_INVALID_ARGUMENT,
                absl::InvalidArgumentError("NULL argument"));
  }
  return Emit(spin_atlas::FaceMapTables::Default().Render(), out);
}

const char* sa_buffer_data(const sa_buffer* buf) {
  return buf == nullptr ? "" : buf->data.c_str();
}

size_t sa_buffer_size(const sa_buffer* buf) {
  return buf == nullptr ? 0 : buf->data.size();
}

void sa_buffer_destroy(sa_buffer* buf) { delete buf; }

}  // extern "C"
