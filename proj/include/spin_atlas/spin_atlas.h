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

#ifndef SPIN_ATLAS_SPIN_ATLAS_H_
#define SPIN_ATLAS_SPIN_ATLAS_H_

#include <stddef.h>

#if defined(SPIN_ATLAS_BUILDING)
#define SA_API __attribute__((visibility("default")))
#else
#define SA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sa_status {
  SA_OK = 0,
  SA_ERR_INVALID_ARGUMENT = 1,
  SA_ERR_INVALID_CLASS = 2,
  SA_ERR_UNSUPPORTED = 3,
  SA_ERR_IO = 4,
  SA_ERR_CAP_EXCEEDED = 5,
  SA_ERR_INTERNAL = 6
} sa_status;

typedef enum sa_format {
  SA_FORMAT_TEXT = 0,
  SA_FORMAT_RECORDS = 1
} sa_format;

typedef enum sa_dot_kind {
  SA_DOT_CONNECTION = 0,
  SA_DOT_FULL = 1
} sa_dot_kind;

typedef struct sa_options {
  int max_steps;
  int escalate_steps;
  unsigned long long closure_cap;
  int exhaustive;
  int jobs;
  int max_genus;
} sa_options;

typedef struct sa_context sa_context;
typedef struct sa_class sa_class;
typedef struct sa_buffer sa_buffer;

SA_API const char* sa_version(void);
SA_API const char* sa_status_name(sa_status status);
// Message of the last failure on the calling thread.
SA_API const char* sa_last_error(void);

SA_API void sa_options_init(sa_options* options);

// tables_path may be NULL for the built-in tables.
SA_API sa_status sa_context_create(const sa_options* options,
                                   const char* tables_path, sa_context** out);
SA_API void sa_context_destroy(sa_context* ctx);

SA_API sa_status sa_class_create(int genus, int order, int i, const int* p,
                                 size_t p_len, sa_class** out);
SA_API void sa_class_destroy(sa_class* cls);
SA_API int sa_class_order(const sa_class* cls);
// Writes k_0..k_r; *len receives r+1 even when cap is too small.
SA_API sa_status sa_class_k_tuple(const sa_class* cls, int* out, size_t cap,
                                  size_t* len);
// Epsilon-degree of a vertex named "P", "~P", "P3", ...
SA_API sa_status sa_class_epsilon_degree(const sa_class* cls,
                                         const char* vertex, int* degree);

// Number of classes of a genus (order < 0 for all orders).
SA_API sa_status sa_class_count(int genus, int order, size_t* count);

// One row per class of the genus.
SA_API sa_status sa_atlas(sa_context* ctx, int genus, int order,
                          sa_format format, sa_buffer** out);
// vertex may be NULL for all vertices.
SA_API sa_status sa_classify(sa_context* ctx, const sa_class* cls,
                             const char* vertex, sa_format format,
                             sa_buffer** out);
// orders may be NULL for all orders; *all_match is 1 iff every vertex of
// every class matches the prediction.
SA_API sa_status sa_verify(sa_context* ctx, int genus_lo, int genus_hi,
                           const int* orders, size_t orders_len,
                           sa_format format, int* all_match, sa_buffer** out);
SA_API sa_status sa_export_dot(const sa_class* cls, sa_dot_kind kind,
                               sa_buffer** out);
// The built-in face-map tables in file form.
SA_API sa_status sa_render_tables(sa_buffer** out);

SA_API const char* sa_buffer_data(const sa_buffer* buf);
SA_API size_t sa_buffer_size(const sa_buffer* buf);
SA_API void sa_buffer_destroy(sa_buffer* buf);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // SPIN_ATLAS_SPIN_ATLAS_H_
