/* Copyright 2026 The blockge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libblockge.
 *
 * Every fallible call returns a blockge_status. On failure the calling
 * thread's last error message is set (see blockge_last_error). Handles are
 * opaque and owned by the caller; release them with the matching destroy
 * function. Strings returned by the library stay valid until the next call
 * on the same thread.
 */

#ifndef BLOCKGE_BLOCKGE_H
#define BLOCKGE_BLOCKGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BLOCKGE_API __declspec(dllexport)
#else
#define BLOCKGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum blockge_status {
    BLOCKGE_OK = 0,
    BLOCKGE_INVALID_ARGUMENT = 1,
    BLOCKGE_DIMENSION_MISMATCH = 2,
    BLOCKGE_NON_FINITE_INPUT = 3,
    BLOCKGE_BLOCK_TOO_LARGE = 4,
    BLOCKGE_SHAPE_MISMATCH = 5,
    BLOCKGE_SINGLE_CLASS = 6,
    BLOCKGE_ZERO_NORMAL_LEVEL = 7,
    BLOCKGE_NO_NORMAL_FRAMES = 8,
    BLOCKGE_NON_POSITIVE_LEVEL = 9,
    BLOCKGE_ZERO_VARIANCE = 10,
    BLOCKGE_TOO_FEW_SEGMENTS = 11,
    BLOCKGE_PLACEMENT_FAILURE = 12,
    BLOCKGE_PARSE_ERROR = 13,
    BLOCKGE_MISSING_FILE = 14,
    BLOCKGE_LABEL_OUT_OF_RANGE = 15,
    BLOCKGE_DUPLICATE_SEGMENT_ID = 16,
    BLOCKGE_BAD_MAGIC = 17,
    BLOCKGE_TRUNCATED_FILE = 18,
    BLOCKGE_NON_FINITE_VALUE = 19,
    BLOCKGE_NEGATIVE_VALUE = 20,
    BLOCKGE_IO_ERROR = 21,
    BLOCKGE_EMPTY_SERIES = 22,
    BLOCKGE_TOO_FEW_POINTS = 23,
    BLOCKGE_INTERNAL = 99
} blockge_status;

/* Symbolic name of a status, e.g. "BlockTooLarge". Never NULL. */
BLOCKGE_API const char* blockge_status_name(blockge_status status);

/* Full message of the last failure on this thread, "" when none. */
BLOCKGE_API const char* blockge_last_error(void);

/* One-line summary of the last successful command on this thread. */
BLOCKGE_API const char* blockge_last_summary(void);

/* ---- GE maps --------------------------------------------------------- */

typedef struct blockge_gemap blockge_gemap;

/* Copies height * width non-negative finite values in row-major order. */
BLOCKGE_API blockge_status blockge_gemap_create(size_t height, size_t width, const float* values,
                                                blockge_gemap** out);
/* GEM1 or 8/16-bit PGM. */
BLOCKGE_API blockge_status blockge_gemap_read(const char* path, blockge_gemap** out);
BLOCKGE_API blockge_status blockge_gemap_write(const blockge_gemap* map, const char* path);
BLOCKGE_API void blockge_gemap_destroy(blockge_gemap* map);
BLOCKGE_API blockge_status blockge_gemap_shape(const blockge_gemap* map, size_t* height, size_t* width);
/* Borrowed pointer to height * width floats, valid while the handle lives. */
BLOCKGE_API const float* blockge_gemap_data(const blockge_gemap* map);

/* Per-pixel |pred - gt|^exponent summed over channels; exponent is 1 or 2. */
BLOCKGE_API blockge_status blockge_gemap_from_frames(const char* pred_path, const char* gt_path, int exponent,
                                                     blockge_gemap** out);

/* Maximum mean over all fully contained block_h x block_w windows. */
BLOCKGE_API blockge_status blockge_block_level_ge(const blockge_gemap* map, size_t block_h, size_t block_w,
                                                  double* out);
/* Mean over the whole map. */
BLOCKGE_API blockge_status blockge_frame_level_ge(const blockge_gemap* map, double* out);

/* ---- Series-level helpers -------------------------------------------- */

/* ROC AUC of scores against 0/1 labels, ties counted as one half. */
BLOCKGE_API blockge_status blockge_roc_auc(const double* scores, const uint8_t* labels, size_t n, double* out);

/* Median filter over one segment with window 2 * radius + 1. */
BLOCKGE_API blockge_status blockge_median_filter(const double* values, size_t n, size_t radius, double* out);

/* ---- Runs ------------------------------------------------------------ */

typedef struct blockge_run blockge_run;

BLOCKGE_API blockge_status blockge_run_create(blockge_run** out);
BLOCKGE_API void blockge_run_destroy(blockge_run* run);

BLOCKGE_API blockge_status blockge_run_set_manifest(blockge_run* run, const char* path);
BLOCKGE_API blockge_status blockge_run_set_out_dir(blockge_run* run, const char* path);
BLOCKGE_API blockge_status blockge_run_set_block(blockge_run* run, size_t block_h, size_t block_w);
BLOCKGE_API blockge_status blockge_run_set_exponent(blockge_run* run, int exponent);
BLOCKGE_API blockge_status blockge_run_set_radius(blockge_run* run, size_t radius);
/* "dataset" / "norm0" or "video" / "norm1". */
BLOCKGE_API blockge_status blockge_run_set_norm(blockge_run* run, const char* mode);
BLOCKGE_API blockge_status blockge_run_set_population(blockge_run* run, const char* population);
BLOCKGE_API blockge_status blockge_run_set_weights(blockge_run* run, const double* weights, size_t n);
BLOCKGE_API blockge_status blockge_run_set_sweep_grid(blockge_run* run, const size_t* sizes, size_t n);
BLOCKGE_API blockge_status blockge_run_set_seed(blockge_run* run, uint64_t seed);
BLOCKGE_API blockge_status blockge_run_set_threads(blockge_run* run, size_t threads);
BLOCKGE_API blockge_status blockge_run_set_emit_frame_level(blockge_run* run, int enabled);
BLOCKGE_API blockge_status blockge_run_set_plot(blockge_run* run, int enabled);
BLOCKGE_API blockge_status blockge_run_set_save_ge(blockge_run* run, int enabled);

/* Subcommands. Outputs land in the run's out_dir. */
BLOCKGE_API blockge_status blockge_cmd_score(const blockge_run* run);
BLOCKGE_API blockge_status blockge_cmd_evaluate(const blockge_run* run, const char* score_path);
BLOCKGE_API blockge_status blockge_cmd_sweep(const blockge_run* run);
BLOCKGE_API blockge_status blockge_cmd_correlate(const blockge_run* run);
BLOCKGE_API blockge_status blockge_cmd_norm_compare(const blockge_run* run);
BLOCKGE_API blockge_status blockge_cmd_synth(const char* config_path, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* BLOCKGE_BLOCKGE_H */
