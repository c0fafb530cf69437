// Copyright 2026 The blockge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockge/blockge.h"

#include "blockge/block.hpp"
#include "blockge/dataset_io.hpp"
#include "blockge/error.hpp"
#include "blockge/ge_map.hpp"
#include "blockge/metrics.hpp"
#include "blockge/pipeline.hpp"
#include "blockge/temporal.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <string>

struct blockge_gemap {
    blockge::GEMap map;
};

struct blockge_run {
    blockge::RunConfig config;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_summary;

template <class Fn>
blockge_status guard(Fn&& fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return BLOCKGE_OK;
    } catch(const blockge::Error& e) {
        g_last_error = e.what();
        return static_cast<blockge_status>(static_cast<int>(e.code()));
    } catch(const std::bad_alloc&) {
        g_last_error = "out of memory";
        return BLOCKGE_INTERNAL;
    } catch(const std::exception& e) {
        g_last_error = e.what();
        return BLOCKGE_INTERNAL;
    } catch(...) {
        g_last_error = "unknown exception";
        return BLOCKGE_INTERNAL;
    }
}

void require(const void* p, const char* name) {
    if(!p)
        throw blockge::Error(blockge::ErrorCode::InvalidArgument, std::string(name) + " is null");
}

std::string opt_text(const std::optional<double>& v) {
    return v ? blockge::format_double(*v) : "NA";
}

} // namespace

extern "C" {

const char* blockge_status_name(blockge_status status) {
    if(status == BLOCKGE_OK)
        return "Ok";
    if(status == BLOCKGE_INTERNAL)
        return "Internal";
    if(status < BLOCKGE_INVALID_ARGUMENT || status > BLOCKGE_TOO_FEW_POINTS)
        return "Unknown";
    return blockge::error_name(static_cast<blockge::ErrorCode>(status)).data();
}

const char* blockge_last_error(void) {
    return g_last_error.c_str();
}

const char* blockge_last_summary(void) {
    return g_last_summary.c_str();
}

blockge_status blockge_gemap_create(size_t height, size_t width, const float* values, blockge_gemap** out) {
    return guard([&] {
        require(out, "out");
        *out = nullptr;
        require(values, "values");
        if(height == 0 || width == 0)
            throw blockge::Error(blockge::ErrorCode::InvalidArgument, "map must be non-empty");
        auto h = std::make_unique<blockge_gemap>();
        h->map = blockge::GEMap(height, width, std::vector<float>(values, values + height * width));
        *out = h.release();
    });
}

blockge_status blockge_gemap_read(const char* path, blockge_gemap** out) {
    return guard([&] {
        require(out, "out");
        *out = nullptr;
        require(path, "path");
        auto h = std::make_unique<blockge_gemap>();
        h->map = blockge::read_gemap(path);
        *out = h.release();
    });
}

blockge_status blockge_gemap_write(const blockge_gemap* map, const char* path) {
    return guard([&] {
        require(map, "map");
        require(path, "path");
        blockge::write_gemap(path, map->map);
    });
}

void blockge_gemap_destroy(blockge_gemap* map) {
    delete map;
}

blockge_status blockge_gemap_shape(const blockge_gemap* map, size_t* height, size_t* width) {
    return guard([&] {
        require(map, "map");
        require(height, "height");
        require(width, "width");
        *height = map->map.height();
        *width = map->map.width();
    });
}

const float* blockge_gemap_data(const blockge_gemap* map) {
    return map ? map->map.values().data() : nullptr;
}

blockge_status blockge_gemap_from_frames(const char* pred_path, const char* gt_path, int exponent,
                                         blockge_gemap** out) {
    return guard([&] {
        require(out, "out");
        *out = nullptr;
        require(pred_path, "pred_path");
        require(gt_path, "gt_path");
        const auto p = blockge::exponent_from_int(exponent);
        auto h = std::make_unique<blockge_gemap>();
        h->map = blockge::compute_ge_map(blockge::read_frame(pred_path), blockge::read_frame(gt_path), p);
        *out = h.release();
    });
}

blockge_status blockge_block_level_ge(const blockge_gemap* map, size_t block_h, size_t block_w, double* out) {
    return guard([&] {
        require(map, "map");
        require(out, "out");
        *out = blockge::block_level_ge(map->map, blockge::BlockSpec{block_h, block_w});
    });
}

blockge_status blockge_frame_level_ge(const blockge_gemap* map, double* out) {
    return guard([&] {
        require(map, "map");
        require(out, "out");
        if(map->map.empty())
            throw blockge::Error(blockge::ErrorCode::InvalidArgument, "map is empty");
        *out = blockge::frame_level_ge(map->map);
    });
}

blockge_status blockge_roc_auc(const double* scores, const uint8_t* labels, size_t n, double* out) {
    return guard([&] {
        require(out, "out");
        if(n > 0) {
            require(scores, "scores");
            require(labels, "labels");
        }
        *out = blockge::roc_auc(std::span<const double>(scores, n), std::span<const std::uint8_t>(labels, n));
    });
}

blockge_status blockge_median_filter(const double* values, size_t n, size_t radius, double* out) {
    return guard([&] {
        if(n == 0)
            return;
        require(values, "values");
        require(out, "out");
        const auto filtered =
            blockge::median_filter(blockge::ScoreSeries::single("series", std::vector<double>(values, values + n)), radius);
        std::copy(filtered.values().begin(), filtered.values().end(), out);
    });
}

blockge_status blockge_run_create(blockge_run** out) {
    return guard([&] {
        require(out, "out");
        *out = new blockge_run();
    });
}

void blockge_run_destroy(blockge_run* run) {
    delete run;
}

#define BLOCKGE_RUN_SETTER(...)     \
    return guard([&] {              \
        require(run, "run");        \
        auto& cfg = run->config;    \
        __VA_ARGS__;                \
    })

blockge_status blockge_run_set_manifest(blockge_run* run, const char* path) {
    BLOCKGE_RUN_SETTER(require(path, "path"); cfg.manifest = path);
}

blockge_status blockge_run_set_out_dir(blockge_run* run, const char* path) {
    BLOCKGE_RUN_SETTER(require(path, "path"); cfg.out_dir = path);
}

blockge_status blockge_run_set_block(blockge_run* run, size_t block_h, size_t block_w) {
    BLOCKGE_RUN_SETTER(if(block_h == 0 || block_w == 0) throw blockge::Error(blockge::ErrorCode::InvalidArgument,
                                                                             "block dimensions must be positive");
                       cfg.block = blockge::BlockSpec{block_h, block_w});
}

blockge_status blockge_run_set_exponent(blockge_run* run, int exponent) {
    BLOCKGE_RUN_SETTER(blockge::exponent_from_int(exponent); cfg.exponent = exponent);
}

blockge_status blockge_run_set_radius(blockge_run* run, size_t radius) {
    BLOCKGE_RUN_SETTER(cfg.radius = radius);
}

blockge_status blockge_run_set_norm(blockge_run* run, const char* mode) {
    BLOCKGE_RUN_SETTER(require(mode, "mode"); cfg.norm = blockge::parse_normalization_mode(mode));
}

blockge_status blockge_run_set_population(blockge_run* run, const char* population) {
    BLOCKGE_RUN_SETTER(require(population, "population"); cfg.population = population);
}

blockge_status blockge_run_set_weights(blockge_run* run, const double* weights, size_t n) {
    BLOCKGE_RUN_SETTER(if(n) require(weights, "weights"); cfg.weights.assign(weights, weights + n));
}

blockge_status blockge_run_set_sweep_grid(blockge_run* run, const size_t* sizes, size_t n) {
    BLOCKGE_RUN_SETTER(if(n) require(sizes, "sizes"); cfg.sweep_grid.assign(sizes, sizes + n));
}

blockge_status blockge_run_set_seed(blockge_run* run, uint64_t seed) {
    BLOCKGE_RUN_SETTER(cfg.seed = seed);
}

blockge_status blockge_run_set_threads(blockge_run* run, size_t threads) {
    BLOCKGE_RUN_SETTER(cfg.threads = threads);
}

blockge_status blockge_run_set_emit_frame_level(blockge_run* run, int enabled) {
    BLOCKGE_RUN_SETTER(cfg.emit_frame_level = enabled != 0);
}

blockge_status blockge_run_set_plot(blockge_run* run, int enabled) {
    BLOCKGE_RUN_SETTER(cfg.plot = enabled != 0);
}

blockge_status blockge_run_set_save_ge(blockge_run* run, int enabled) {
    BLOCKGE_RUN_SETTER(cfg.save_ge = enabled != 0);
}

#undef BLOCKGE_RUN_SETTER

blockge_status blockge_cmd_score(const blockge_run* run) {
    return guard([&] {
        require(run, "run");
        const auto t = blockge::cmd_score(run->config);
        g_last_summary = "scored " + std::to_string(t.labels.size()) + " frames in " +
                         std::to_string(t.layout.size()) + " segments -> " +
                         (run->config.out_dir / "scores.tsv").string();
    });
}

blockge_status blockge_cmd_evaluate(const blockge_run* run, const char* score_path) {
    return guard([&] {
        require(run, "run");
        require(score_path, "score_path");
        const auto r = blockge::cmd_evaluate(run->config, score_path);
        g_last_summary = "auc=" + opt_text(r.auc);
        if(r.auc_frame)
            g_last_summary += " auc_frame=" + opt_text(r.auc_frame);
        for(const auto& s : r.saliency)
            g_last_summary += " saliency[" + std::string(blockge::to_string(s.level)) + ":" + s.modality +
                              "]=" + opt_text(s.value);
    });
}

blockge_status blockge_cmd_sweep(const blockge_run* run) {
    return guard([&] {
        require(run, "run");
        const auto r = blockge::cmd_sweep(run->config);
        g_last_summary = "sweep best=";
        g_last_summary += r.sweep_best ? std::to_string(r.sweep_best->block_h) + "x" +
                                             std::to_string(r.sweep_best->block_w) + " auc=" +
                                             opt_text(r.sweep_best->auc)
                                       : "NA";
    });
}

blockge_status blockge_cmd_correlate(const blockge_run* run) {
    return guard([&] {
        require(run, "run");
        const auto r = blockge::cmd_correlate(run->config);
        g_last_summary.clear();
        for(const auto& c : r.correlation)
            g_last_summary += (g_last_summary.empty() ? "" : " ") + std::string("r[") +
                              std::string(blockge::to_string(c.level)) + ":" + c.modality + "]=" + opt_text(c.r);
    });
}

blockge_status blockge_cmd_norm_compare(const blockge_run* run) {
    return guard([&] {
        require(run, "run");
        const auto r = blockge::cmd_norm_compare(run->config);
        g_last_summary.clear();
        for(const auto& e : r.norm_compare)
            g_last_summary += (g_last_summary.empty() ? "" : " ") + e.population + ":" + e.mode + "=" + opt_text(e.auc);
    });
}

blockge_status blockge_cmd_synth(const char* config_path, const char* out_dir) {
    return guard([&] {
        require(config_path, "config_path");
        require(out_dir, "out_dir");
        const auto m = blockge::cmd_synth(config_path, out_dir);
        std::size_t frames = 0;
        for(const auto& s : m.segments)
            frames += s.frames.size();
        g_last_summary = "wrote " + std::to_string(frames) + " frames in " + std::to_string(m.segments.size()) +
                         " segments -> " + (std::filesystem::path(out_dir) / "manifest.json").string();
    });
}

} // extern "C"
