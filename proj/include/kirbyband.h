/*
 * kirbyband.h
 *
 * This source file is part of the kirbyband project.
 *
 * Copyright 2026 The kirbyband Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef KIRBYBAND_H
#define KIRBYBAND_H

#include <stddef.h>
#include <stdint.h>

#if defined(KB_BUILDING_LIBRARY)
#define KB_API __attribute__((visibility("default")))
#else
#define KB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kb_diagram kb_diagram;

typedef enum kb_status {
    KB_OK = 0,
    KB_ERR_PARSE = 1,
    KB_ERR_VALIDATION = 2,
    /* algebra data unusable: bad c/g, cap/cup/swim condition failure */
    KB_ERR_ALGEBRA = 3,
    KB_ERR_MOVE = 4,
    KB_ERR_BUDGET = 5,
    KB_ERR_ARGUMENT = 6,
    KB_ERR_UNKNOWN_FIXTURE = 7,
    KB_ERR_INTERNAL = 8
} kb_status;

/* Bits of kb_params.set */
#define KB_PARAM_N 1u
#define KB_PARAM_T 2u
#define KB_PARAM_H 4u
#define KB_PARAM_C 8u
#define KB_PARAM_G 16u

typedef struct kb_params {
    unsigned set;
    int N;
    int t;
    int H;
    int c;
    int g;
} kb_params;

typedef struct kb_move {
    const char* kind;
    size_t row;
    size_t col;
    int over;    /* component id for slides, -1 otherwise */
    int variant;
    int inverse;
} kb_move;

KB_API const char* kb_status_string(kb_status status);

/* Message and JSON document ({"error": {...}}) for the last failure on the
 * calling thread. Valid until the next call on that thread. */
KB_API const char* kb_last_error(void);
KB_API const char* kb_last_error_json(void);

KB_API kb_status kb_diagram_parse(const char* text, kb_diagram** out);
KB_API kb_status kb_fixture_load(const char* name, kb_diagram** out);
KB_API void kb_diagram_free(kb_diagram* d);

/* Replaces header values whose bit is set. */
KB_API kb_status kb_diagram_set_params(kb_diagram* d, const kb_params* params);

/* Strings returned through char** are owned by the caller; release them with kb_string_free. */
KB_API kb_status kb_diagram_serialize(const kb_diagram* d, char** out);
KB_API void kb_string_free(char* s);

/* budget: maximum number of live basis states; 0 selects the default
 * (KB_STATE_BUDGET or 4000000). */
KB_API kb_status kb_evaluate_json(const kb_diagram* d, size_t budget, char** out);
KB_API kb_status kb_invariant_json(const kb_diagram* d, size_t budget, char** out);

/* d may be NULL; params override the diagram header or the defaults N=6 t=1 H=2. */
KB_API kb_status kb_info_json(const kb_diagram* d, const kb_params* params, char** out);
/* Needs c and g from params or the diagram header. Returns KB_ERR_ALGEBRA with
 * the report still written to *out when a check fails. */
KB_API kb_status kb_verify_json(const kb_diagram* d, const kb_params* params, char** out);

KB_API kb_status kb_apply_move(const kb_diagram* d, const kb_move* move, kb_diagram** out);
KB_API kb_status kb_fuzz_json(const kb_diagram* d, uint64_t seed, int steps, char** out);

KB_API kb_status kb_fixture_names_json(char** out);
KB_API kb_status kb_fixture_text(const char* name, char** out);
/* The fixture's expected values and note as JSON. */
KB_API kb_status kb_fixture_info_json(const char* name, char** out);

#ifdef __cplusplus
}
#endif

#endif
