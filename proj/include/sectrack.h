/* Copyright 2026 The sectrack Authors. All rights reserved.
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

/* C interface of the sectrack shared library.
 *
 * sectrack tracks moving objects seen through a quantized range/bearing
 * channel (Soccer Simulation 2D style): each object carries a convex belief
 * region that is grown by its motion bounds every cycle and intersected with
 * the sector implied by each new observation. The library bundles the
 * tracker, a deterministic benchmark simulator, a scripted two-cycle demo
 * and worst-case player travel tables.
 *
 * All functions return SECTRACK_OK on success; on failure they return an
 * error code and leave a human-readable message in sectrack_last_error()
 * (thread-local). Out parameters are written only on success. Handles are
 * opaque and must be released with their matching _free function; strings
 * returned through char** are heap-allocated and must be released with
 * sectrack_string_free().
 */

#ifndef SECTRACK_H_
#define SECTRACK_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sectrack_status {
  SECTRACK_OK = 0,
  SECTRACK_ERR_INVALID_ARGUMENT = 1, /* bad parameter or constraint violation */
  SECTRACK_ERR_EMPTY_REGION = 2,
  SECTRACK_ERR_NO_PREIMAGE = 3,      /* value is not a realizable quantizer output */
  SECTRACK_ERR_KIND_MISMATCH = 4,
  SECTRACK_ERR_CONFIG = 5,           /* scenario config failed validation */
  SECTRACK_ERR_IO = 6,
  SECTRACK_ERR_INTERNAL = 7
} sectrack_status;

typedef struct sectrack_scenario sectrack_scenario;
typedef struct sectrack_report sectrack_report;
typedef struct sectrack_demo sectrack_demo;

/* Aggregate statistics of a benchmark run. Distance bands are keyed by the
 * observer-to-object distance: [0,10), [10,20), [20,40), [40,inf) meters.
 * NaN marks statistics with no scored rows. */
typedef struct sectrack_stats {
  uint64_t rows;               /* seeds * cycles * objects */
  uint64_t rows_scored;        /* rows where both error columns are defined */
  double mean_baseline_m;
  double mean_denoised_m;
  double improvement_m;        /* pooled mean baseline - mean denoised */
  double mean_improvement_m;   /* mean of per-seed improvements */
  double improvement_stddev_m; /* stddev of per-seed improvements */
  double min_soundness_rate;   /* minimum over seeds */
  uint64_t reset_count;
  uint64_t band_rows[4];
  double band_baseline_m[4];
  double band_denoised_m[4];
  double band_improvement_m[4];
} sectrack_stats;

const char* sectrack_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
const char* sectrack_last_error(void);

/* ---- scenario configs ---------------------------------------------- */

/* Parse a scenario from JSON text. Unknown keys and invalid field values are
 * SECTRACK_ERR_CONFIG with a field-by-field message. */
sectrack_status sectrack_scenario_parse(const char* json_text, sectrack_scenario** out);

/* Load and parse a scenario file (SECTRACK_ERR_IO when unreadable). */
sectrack_status sectrack_scenario_load(const char* path, sectrack_scenario** out);

/* Override the point estimator: "centroid" or "bbox_midpoint". */
sectrack_status sectrack_scenario_set_estimator(sectrack_scenario* scenario, const char* mode);

void sectrack_scenario_free(sectrack_scenario* scenario);

/* ---- benchmark runs ------------------------------------------------- */

/* Run the scenario for seeds base_seed .. base_seed + n_seeds - 1. The run
 * is deterministic: identical inputs give byte-identical serializations. */
sectrack_status sectrack_run(const sectrack_scenario* scenario, uint64_t base_seed,
                             uint32_t n_seeds, sectrack_report** out);

/* CSV document: header, one line per (seed, cycle, object) sorted by
 * (seed, cycle, object_id), then #-prefixed summary lines. */
sectrack_status sectrack_report_csv(const sectrack_report* report, char** out_text);

/* JSON document {"rows": [...], "summary": {...}}. */
sectrack_status sectrack_report_json(const sectrack_report* report, char** out_text);

sectrack_status sectrack_report_stats(const sectrack_report* report, sectrack_stats* out);

void sectrack_report_free(sectrack_report* report);

/* ---- two-cycle demo -------------------------------------------------- */

/* Scripted demo: an observer watches a moving teammate for two consecutive
 * cycles; the dump captures sector, predicted region, intersection and the
 * baseline/denoised estimates per cycle. */
sectrack_status sectrack_demo_run(sectrack_demo** out);

sectrack_status sectrack_demo_json(const sectrack_demo* demo, char** out_text);

/* SVG rendering of the same geometry (one <g> group per cycle). */
sectrack_status sectrack_demo_svg(const sectrack_demo* demo, char** out_text);

void sectrack_demo_free(sectrack_demo* demo);

/* ---- player travel tables -------------------------------------------- */

/* Worst-case travel table for a player type. Writes speeds[0..horizon-1]
 * (per-cycle speed bounds) and cumulative[0..horizon] (distance bound after
 * n cycles, cumulative[0] == 0). Either array may be NULL to skip it. */
sectrack_status sectrack_table(int type_id, uint32_t horizon, double* speeds,
                               double* cumulative);

void sectrack_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SECTRACK_H_ */
