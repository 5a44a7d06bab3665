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

// spin-atlas: classify the spin groups of exceptional spin graphs.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spin_atlas/spin_atlas.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct ClassArgs {
  int genus = 0;
  int order = 0;
  int i = 0;
  std::vector<int> p;
};

int Report(sa_status status) {
  std::fprintf(stderr, "error: %s: %s\n", sa_status_name(status),
               sa_last_error());
  return kExitUsage;
}

int Print(sa_buffer* buf) {
  std::fwrite(sa_buffer_data(buf), 1, sa_buffer_size(buf), stdout);
  sa_buffer_destroy(buf);
  return kExitOk;
}

bool ParseRange(const std::string& text, int* lo, int* hi) {
  const size_t dots = text.find("..");
  try {
    size_t used = 0;
    if (dots == std::string::npos) {
      *lo = *hi = std::stoi(text, &used);
      return used == text.size();
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    *lo = std::stoi(a, &used);
    if (used != a.size()) return false;
    *hi = std::stoi(b, &used);
    return used == b.size() && *lo <= *hi;
  } catch (const std::exception&) {
    return false;
  }
}

void AddClassOptions(CLI::App* cmd, ClassArgs* args) {
  cmd->add_option("-g,--genus", args->genus, "Genus")->required();
  cmd->add_option("-r,--order", args->order, "Order r")->required();
  cmd->add_option("-i", args->i, "Parameter i (default: forced by genus)");
  cmd->add_option("-p", args->p, "Parameters p_1..p_r")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin groups of exceptional spin graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  sa_options options;
  sa_options_init(&options);
  std::string tables_path;
  if (const char* env = std::getenv("SPIN_ATLAS_TABLES")) tables_path = env;
  std::string format = "text";

  app.add_option("--max-steps", options.max_steps, "Chain length budget");
  app.add_option("--escalate-steps", options.escalate_steps,
                 "Budget used when the group still grows at --max-steps");
  app.add_option("--closure-cap", options.closure_cap,
                 "Largest group enumerated element by element");
  app.add_flag("--exhaustive", options.exhaustive,
               "Run the whole budget, no early stop");
  app.add_option("--jobs", options.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-genus", options.max_genus, "Largest accepted genus");
  app.add_option("--tables", tables_path,
                 "Face-map table file (env SPIN_ATLAS_TABLES)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "records"}));

  CLI::App* atlas = app.add_subcommand("atlas", "One row per class");
  int atlas_genus = 0;
  int atlas_order = -1;
  atlas->add_option("-g,--genus", atlas_genus, "Genus")->required();
  atlas->add_option("-r,--order", atlas_order, "Restrict to one order");

  CLI::App* classify = app.add_subcommand("classify", "Verdicts and witnesses");
  ClassArgs classify_args;
  std::string vertex;
  AddClassOptions(classify, &classify_args);
  classify->add_option("--vertex", vertex, "Only this vertex, e.g. P2 or ~P");

  CLI::App* verify = app.add_subcommand("verify", "Check every class");
  std::string range;
  std::vector<int> orders;
  verify->add_option("-g,--genus", range, "Genus or range lo..hi")
      ->required();
  verify->add_option("--orders", orders, "Restrict to these orders")
      ->delimiter(',');

  CLI::App* dot = app.add_subcommand("export-dot", "Graphviz output");
  ClassArgs dot_args;
  std::string kind = "connection";
  AddClassOptions(dot, &dot_args);
  dot->add_option("--kind", kind, "connection or full")
      ->check(CLI::IsMember({"connection", "full"}));

  app.add_subcommand("tables", "Print the built-in face-map tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const sa_format fmt = format == "records" ? SA_FORMAT_RECORDS : SA_FORMAT_TEXT;

  auto make_class = [](const ClassArgs& a, sa_class** out) {
    return sa_class_create(a.genus, a.order, a.i, a.p.data(), a.p.size(),
                           out);
  };
  // -i defaults to the value forced by the genus formula.
  auto fill_i = [](CLI::App* cmd, ClassArgs* a) {
    if (cmd->count("-i") > 0) return;
    int weighted = 0;
    for (size_t l = 0; l < a->p.size(); ++l) {
      weighted += (a->order - static_cast<int>(l)) * a->p[l];
    }
    const int num = a->genus + 1 - weighted;
    a->i = (num % (a->order + 1) == 0) ? num / (a->order + 1) - 1 : -1;
  };

  if (app.got_subcommand("tables")) {
    sa_buffer* buf = nullptr;
    if (sa_status s = sa_render_tables(&buf); s != SA_OK) return Report(s);
    return Print(buf);
  }
  if (dot->parsed()) {
    fill_i(dot, &dot_args);
    sa_class* cls = nullptr;
    if (sa_status s = make_class(dot_args, &cls); s != SA_OK) return Report(s);
    sa_buffer* buf = nullptr;
    sa_status s = sa_export_dot(
        cls, kind == "full" ? SA_DOT_FULL : SA_DOT_CONNECTION, &buf);
    sa_class_destroy(cls);
    if (s != SA_OK) return Report(s);
    return Print(buf);
  }

  sa_context* ctx = nullptr;
  if (sa_status s = sa_context_create(
          &options, tables_path.empty() ? nullptr : tables_path.c_str(), &ctx);
      s != SA_OK) {
    return Report(s);
  }
  int exit_code = kExitOk;
  sa_buffer* buf = nullptr;
  if (atlas->parsed()) {
    sa_status s = sa_atlas(ctx, atlas_genus, atlas_order, fmt, &buf);
    exit_code = s == SA_OK ? Print(buf) : Report(s);
  } else if (classify->parsed()) {
    fill_i(classify, &classify_args);
    sa_class* cls = nullptr;
    sa_status s = make_class(classify_args, &cls);
    if (s == SA_OK) {
      s = sa_classify(ctx, cls, vertex.empty() ? nullptr : vertex.c_str(), fmt,
                      &buf);
      sa_class_destroy(cls);
    }
    exit_code = s == SA_OK ? Print(buf) : Report(s);
  } else if (verify->parsed()) {
    int lo = 0;
    int hi = 0;
    if (!ParseRange(range, &lo, &hi)) {
      std::fprintf(stderr, "error: malformed genus range '%s'\n",
                   range.c_str());
      exit_code = kExitUsage;
    } else {
      int all_match = 0;
      sa_status s = sa_verify(ctx, lo, hi, orders.data(), orders.size(), fmt,
                              &all_match, &buf);
      if (s != SA_OK) {
        exit_code = Report(s);
      } else {
        Print(buf);
        exit_code = all_match ? kExitOk : kExitMismatch;
      }
    }
  }
  sa_context_destroy(ctx);
  return exit_code;
}
