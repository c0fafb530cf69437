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

#pragma once

#include "blockge/block.hpp"
#include "blockge/dataset_io.hpp"
#include "blockge/metrics.hpp"
#include "blockge/scoring.hpp"
#include "blockge/series.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blockge {

/// Everything a run needs. Unset exponent / block fall back to the
/// manifest's settings (which themselves default to 2 and 30x30).
struct RunConfig {
    std::filesystem::path manifest;
    std::optional<int> exponent;
    std::optional<BlockSpec> block;
    std::size_t radius = 15;
    NormalizationMode norm = NormalizationMode::Dataset;
    /// "all", or a split tag selecting the segments to score and normalize over.
    std::string population = "all";
    /// One per modality; empty means all ones.
    std::vector<double> weights;
    std::filesystem::path out_dir = "out";
    std::vector<std::size_t> sweep_grid{2, 5, 10, 15, 20, 30, 45, 60};
    std::uint64_t seed = 0;
    bool emit_frame_level = false;
    bool plot = false;
    bool save_ge = false;
    /// 0: BLOCKGE_THREADS or hardware concurrency.
    std::size_t threads = 0;
};

/// Per-frame GE statistics for a set of segments.
struct FrameFeatures {
    std::vector<std::string> modalities;
    std::vector<Segment> layout;
    LabelSeries labels;
    std::vector<std::optional<double>> target_counts;  // per segment
    std::vector<std::string> splits;                    // per segment
    std::vector<BlockSpec> blocks;
    /// block_ge[m][b][frame]; NaN where block b failed.
    std::vector<std::vector<std::vector<double>>> block_ge;
    /// frame_ge[m][frame]
    std::vector<std::vector<double>> frame_ge;
    /// Per block: error name and message when it did not fit some frame.
    std::vector<std::optional<std::string>> block_errors;

    ScoreSeries block_series(std::size_t modality, std::size_t block) const;
    ScoreSeries frame_series(std::size_t modality) const;
};

/// Segment indices selected by `population` ("all" or a split tag).
/// Throws InvalidArgument when nothing matches.
std::vector<std::size_t> select_population(const DatasetManifest& manifest, const std::string& population);

/// Segments that contain anomalies: those tagged split "test" when the
/// manifest uses split tags, else those with at least one abnormal label.
std::vector<std::size_t> anomaly_only_population(const DatasetManifest& manifest);

/// Loads (or differences) every frame's GE map once and evaluates all
/// requested blocks on one integral table. Frames run in parallel.
/// When `save_ge_dir` is set, maps computed from frame pairs are written
/// there as GEM1.
FrameFeatures extract_features(const DatasetManifest& manifest, const std::vector<std::size_t>& segments,
                               const std::vector<BlockSpec>& blocks, ErrorExponent exponent, std::size_t threads = 0,
                               const std::filesystem::path* save_ge_dir = nullptr);

struct ScoredSeries {
    ScoreSeries scores;
    std::vector<std::string> degenerate;  // "<modality>:<scope>"
};

/// Median filter -> normalization -> weighted fusion, per modality.
ScoredSeries score_modalities(const std::vector<ScoreSeries>& raw, const std::vector<std::string>& modalities,
                              std::size_t radius, NormalizationMode mode, const std::vector<double>& weights);

/// Ordered key=value echo of a run's configuration.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg, const DatasetManifest& manifest);

// Subcommands. Each writes its outputs under cfg.out_dir and returns the
// in-memory result. Fatal problems throw Error.

/// Writes scores.tsv (and curve SVGs with cfg.plot).
ScoreTable cmd_score(const RunConfig& cfg);
/// Reads a score table; writes report.tsv / report.json.
EvalReport cmd_evaluate(const RunConfig& cfg, const std::filesystem::path& score_path);
/// Square blocks from cfg.sweep_grid; writes sweep.tsv / sweep.json / sweep.svg.
EvalReport cmd_sweep(const RunConfig& cfg);
/// Pearson r and pairwise ratios; writes correlation.tsv / correlation.json.
EvalReport cmd_correlate(const RunConfig& cfg);
/// AUC for {dataset, video} x {anomaly-only, mixed}; writes norm_compare.tsv / .json.
EvalReport cmd_norm_compare(const RunConfig& cfg);
/// Generates a synthetic dataset into out_dir.
DatasetManifest cmd_synth(const std::filesystem::path& synth_config, const std::filesystem::path& out_dir);

} // namespace blockge
