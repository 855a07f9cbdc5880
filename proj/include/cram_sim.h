/*
 * Copyright 2026 The cram-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CRAM_SIM_H
#define CRAM_SIM_H

/*
 * C interface to the CRAM in-memory vision simulator.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a cram_status; on failure cram_last_error() holds a
 * message for the calling thread until its next failing call.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CRAM_SIM_BUILDING)
#    define CRAM_API __declspec(dllexport)
#  else
#    define CRAM_API __declspec(dllimport)
#  endif
#else
#  define CRAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes match the CLI exit codes. */
typedef enum cram_status {
  CRAM_OK = 0,
  CRAM_ERR_INPUT = 1,
  CRAM_ERR_CONFIG = 2,
  CRAM_ERR_GUARD = 3,
  CRAM_ERR_INTERNAL = 4
} cram_status;

typedef enum cram_probe_location { CRAM_PROBE_CENTER = 0, CRAM_PROBE_CORNER = 1 } cram_probe_location;

typedef enum cram_polarity { CRAM_POLARITY_ANY = 0, CRAM_POLARITY_POSITIVE = 1 } cram_polarity;

typedef struct cram_config cram_config;
typedef struct cram_frame cram_frame;
typedef struct cram_boxes cram_boxes;

/* Inclusive box; x is the column. */
typedef struct cram_box {
  uint32_t x0, y0, x1, y1;
} cram_box;

CRAM_API const char* cram_version(void);
CRAM_API const char* cram_last_error(void);

/* ---- configuration ---------------------------------------------------- */

CRAM_API cram_status cram_config_create(cram_config** out);
CRAM_API void cram_config_destroy(cram_config* cfg);
/* Applies `key = value` lines from a file on top of the current values. */
CRAM_API cram_status cram_config_load(cram_config* cfg, const char* path);
CRAM_API cram_status cram_config_set(cram_config* cfg, const char* key, const char* value);
/* Copies the value into buf (NUL-terminated); *needed gets the full length
 * including the terminator. buf may be NULL to query the size. */
CRAM_API cram_status cram_config_get(const cram_config* cfg, const char* key, char* buf, size_t len,
                                     size_t* needed);
CRAM_API cram_status cram_config_validate(const cram_config* cfg);

/* ---- frames ----------------------------------------------------------- */

CRAM_API cram_status cram_frame_create(uint32_t width, uint32_t height, cram_frame** out);
CRAM_API cram_status cram_frame_load(const char* path, cram_frame** out);
CRAM_API cram_status cram_frame_save(const cram_frame* frame, const char* path);
/* Accumulates events with t in [t_start, t_end) from a CSV or binary event file. */
CRAM_API cram_status cram_frame_from_events(const char* path, uint32_t t_start, uint32_t t_end,
                                            uint32_t width, uint32_t height, cram_polarity polarity,
                                            cram_frame** out);
CRAM_API void cram_frame_destroy(cram_frame* frame);
CRAM_API uint32_t cram_frame_width(const cram_frame* frame);
CRAM_API uint32_t cram_frame_height(const cram_frame* frame);
CRAM_API int cram_frame_get(const cram_frame* frame, uint32_t x, uint32_t y);
CRAM_API cram_status cram_frame_set(cram_frame* frame, uint32_t x, uint32_t y, int value);
CRAM_API size_t cram_frame_popcount(const cram_frame* frame);

/* ---- pipeline --------------------------------------------------------- */

CRAM_API cram_status cram_restore(const cram_config* cfg, const cram_frame* in, cram_frame** out);
CRAM_API int cram_blank_frame(const cram_frame* frame, size_t max_ones);
/* Region proposal; cycle counts use the configured cost table. Either cycle
 * pointer may be NULL. */
CRAM_API cram_status cram_propose(const cram_config* cfg, const cram_frame* frame, cram_boxes** out,
                                  uint64_t* imc_cycles, uint64_t* total_cycles);
CRAM_API size_t cram_boxes_count(const cram_boxes* boxes);
CRAM_API cram_status cram_boxes_get(const cram_boxes* boxes, size_t index, cram_box* out);
CRAM_API cram_status cram_boxes_json(const cram_boxes* boxes, char* buf, size_t len, size_t* needed);
CRAM_API void cram_boxes_destroy(cram_boxes* boxes);

CRAM_API cram_status cram_probe(const cram_config* cfg, cram_probe_location location, uint64_t* steps);

CRAM_API uint64_t cram_minimal_cycles_imc(uint64_t n_objects);
CRAM_API uint64_t cram_minimal_cycles_total(uint64_t n_objects);

/* ---- commands (file in, file out) ------------------------------------- */

CRAM_API cram_status cram_cmd_synth(const cram_config* cfg, const char* out_dir);
CRAM_API cram_status cram_cmd_restore(const cram_config* cfg, const char* const* inputs, size_t n_inputs,
                                      const char* out_dir);
CRAM_API cram_status cram_cmd_propose(const cram_config* cfg, const char* const* inputs, size_t n_inputs,
                                      const char* out_dir);
CRAM_API cram_status cram_cmd_eval(const cram_config* cfg, const char* corpus_dir, const char* out_dir);
CRAM_API cram_status cram_cmd_probe(const cram_config* cfg, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* CRAM_SIM_H */
