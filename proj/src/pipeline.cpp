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

#include "blockge/pipeline.hpp"

#include "blockge/error.hpp"
#include "blockge/report.hpp"
#include "blockge/synth.hpp"
#include "blockge/temporal.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>

namespace blockge {

namespace fs = std::filesystem;

namespace {

// Progress and timings go here, never into result files.
class SideLog {
public:
    explicit SideLog(const fs::path& out_dir, const std::string& command) : start_(std::chrono::steady_clock::now()) {
        ensure_directory(out_dir);
        out_.open(out_dir / "blockge.log", std::ios::app);
        line(command + ": start");
    }
    ~SideLog() { line("done"); }

    void line(const std::string& msg) {
        if(!out_)
            return;
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "[%9.3fs] ", secs);
        out_ << buf << msg << '\n';
    }

private:
    std::ofstream out_;
    std::chrono::steady_clock::time_point start_;
};

std::string block_text(BlockSpec b) {
    return std::to_string(b.h) + "x" + std::to_string(b.w);
}

std::string join_doubles(const std::vector<double>& v) {
    std::string s;
    for(std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + format_double(v[i]);
    return s;
}

BlockSpec effective_block(const RunConfig& cfg, const DatasetManifest& m) {
    return cfg.block.value_or(m.settings.block);
}

int effective_exponent(const RunConfig& cfg, const DatasetManifest& m) {
    return cfg.exponent.value_or(m.settings.exponent);
}

std::vector<double> effective_weights(const RunConfig& cfg, const DatasetManifest& m) {
    if(cfg.weights.empty())
        return std::vector<double>(m.modalities.size(), 1.0);
    if(cfg.weights.size() != m.modalities.size())
        throw Error(ErrorCode::InvalidArgument, std::to_string(cfg.weights.size()) + " weights given for " +
                                                    std::to_string(m.modalities.size()) + " modalities");
    return cfg.weights;
}

void write_both(const EvalReport& r, const fs::path& dir, const std::string& stem) {
    write_report(r, dir / (stem + ".tsv"), ReportFormat::Tabular);
    write_report(r, dir / (stem + ".json"), ReportFormat::Structured);
}

std::string error_flag(const std::string& metric, const Error& e) {
    return "error:" + metric + ":" + std::string(error_name(e.code())) + ":" + e.message();
}

template <class Fn>
std::optional<double> guarded(const std::string& metric, std::vector<std::string>& flags, Fn&& fn) {
    try {
        return fn();
    } catch(const Error& e) {
        flags.push_back(error_flag(metric, e));
        return std::nullopt;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Features
// ---------------------------------------------------------------------------

ScoreSeries FrameFeatures::block_series(std::size_t modality, std::size_t block) const {
    if(block_errors[block])
        throw Error(ErrorCode::BlockTooLarge, *block_errors[block]);
    return ScoreSeries(layout, block_ge[modality][block]);
}

ScoreSeries FrameFeatures::frame_series(std::size_t modality) const {
    return ScoreSeries(layout, frame_ge[modality]);
}

std::vector<std::size_t> select_population(const DatasetManifest& m, const std::string& population) {
    std::vector<std::size_t> out;
    for(std::size_t i = 0; i < m.segments.size(); ++i)
        if(population == "all" || m.segments[i].split == population)
            out.push_back(i);
    if(out.empty())
        throw Error(ErrorCode::InvalidArgument, "population '" + population + "' selects no segments");
    return out;
}

std::vector<std::size_t> anomaly_only_population(const DatasetManifest& m) {
    const bool tagged = std::any_of(m.segments.begin(), m.segments.end(), [](const auto& s) { return !s.split.empty(); });
    std::vector<std::size_t> out;
    for(std::size_t i = 0; i < m.segments.size(); ++i) {
        const auto& s = m.segments[i];
        const bool has_anomaly = std::any_of(s.frames.begin(), s.frames.end(), [](const auto& f) { return f.label == 1; });
        if(tagged ? s.split == "test" : has_anomaly)
            out.push_back(i);
    }
    if(out.empty())
        throw Error(ErrorCode::InvalidArgument, "manifest has no anomaly-only subset");
    return out;
}

FrameFeatures extract_features(const DatasetManifest& m, const std::vector<std::size_t>& segments,
                               const std::vector<BlockSpec>& blocks, ErrorExponent exponent, std::size_t threads,
                               const fs::path* save_ge_dir) {
    FrameFeatures f;
    f.modalities = m.modalities;
    f.blocks = blocks;
    std::vector<std::pair<std::string, std::size_t>> ids;
    std::vector<std::uint8_t> labels;
    // (segment index, frame index) per output row
    std::vector<std::pair<std::size_t, std::size_t>> rows;
    for(std::size_t si : segments) {
        const auto& seg = m.segments.at(si);
        ids.emplace_back(seg.id, seg.frames.size());
        f.target_counts.push_back(seg.target_count);
        f.splits.push_back(seg.split);
        for(std::size_t fi = 0; fi < seg.frames.size(); ++fi) {
            labels.push_back(seg.frames[fi].label);
            rows.emplace_back(si, fi);
        }
    }
    f.layout = make_layout(ids);
    f.labels = LabelSeries(f.layout, std::move(labels));

    const std::size_t n = rows.size();
    const std::size_t nm = m.modalities.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    f.block_ge.assign(nm, std::vector<std::vector<double>>(blocks.size(), std::vector<double>(n, nan)));
    f.frame_ge.assign(nm, std::vector<double>(n, nan));
    // per row: blocks that did not fit, with their messages
    std::vector<std::vector<std::size_t>> failed(n);
    std::vector<std::vector<std::string>> fail_msg(n);

    detail::parallel_for(n, threads, [&](std::size_t row) {
        const auto [si, fi] = rows[row];
        const auto& seg = m.segments[si];
        const auto& frame = seg.frames[fi];
        for(std::size_t k = 0; k < nm; ++k) {
            const auto& src = frame.sources[k];
            GEMap map;
            if(src.is_pair()) {
                map = compute_ge_map(read_frame(m.resolve(src.pred)), read_frame(m.resolve(src.gt)), exponent);
                if(save_ge_dir) {
                    char name[64];
                    std::snprintf(name, sizeof name, "%06zu_", fi);
                    write_gemap(*save_ge_dir / seg.id / (name + m.modalities[k] + ".gem"), map);
                }
            } else {
                map = read_gemap(m.resolve(src.ge));
            }
            const IntegralTable table(map);
            f.frame_ge[k][row] = frame_level_ge(table);
            for(std::size_t b = 0; b < blocks.size(); ++b) {
                try {
                    f.block_ge[k][b][row] = block_level_ge(table, blocks[b]);
                } catch(const Error& e) {
                    if(e.code() != ErrorCode::BlockTooLarge && e.code() != ErrorCode::InvalidArgument)
                        throw;
                    failed[row].push_back(b);
                    fail_msg[row].push_back(e.message() + " (segment " + seg.id + " frame " + std::to_string(fi) + ")");
                }
            }
        }
    });

    f.block_errors.assign(blocks.size(), std::nullopt);
    for(std::size_t row = 0; row < n; ++row)
        for(std::size_t j = 0; j < failed[row].size(); ++j)
            if(!f.block_errors[failed[row][j]])
                f.block_errors[failed[row][j]] = fail_msg[row][j];
    return f;
}

ScoredSeries score_modalities(const std::vector<ScoreSeries>& raw, const std::vector<std::string>& modalities,
                              std::size_t radius, NormalizationMode mode, const std::vector<double>& weights) {
    if(raw.size() != modalities.size() || raw.size() != weights.size())
        throw Error(ErrorCode::InvalidArgument, "modality, series and weight counts differ");
    ScoredSeries out;
    std::vector<ScoreSeries> normalized;
    std::vector<FusionWeight> w;
    for(std::size_t k = 0; k < raw.size(); ++k) {
        auto norm = normalize(median_filter(raw[k], radius), mode);
        for(const auto& scope : norm.degenerate_scopes)
            out.degenerate.push_back(modalities[k] + ":" + scope);
        normalized.push_back(std::move(norm.scores));
        w.push_back({modalities[k], weights[k]});
    }
    out.scores = fuse(normalized, FusionWeights(std::move(w)));
    return out;
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg, const DatasetManifest& m) {
    std::vector<std::pair<std::string, std::string>> e;
    std::string mods;
    for(std::size_t i = 0; i < m.modalities.size(); ++i)
        mods += (i ? "," : "") + m.modalities[i];
    e.emplace_back("dataset", m.name);
    if(m.provenance) {
        e.emplace_back("generator", m.provenance->algorithm);
        e.emplace_back("generator_seed", std::to_string(m.provenance->seed));
    }
    e.emplace_back("modalities", mods);
    e.emplace_back("exponent", std::to_string(effective_exponent(cfg, m)));
    e.emplace_back("block", block_text(effective_block(cfg, m)));
    e.emplace_back("anchors", "valid,stride=1");
    e.emplace_back("radius", std::to_string(cfg.radius));
    e.emplace_back("median_edges", "shrink");
    e.emplace_back("norm", std::string(to_string(cfg.norm)));
    e.emplace_back("population", cfg.population);
    e.emplace_back("weights", join_doubles(effective_weights(cfg, m)));
    e.emplace_back("seed", std::to_string(cfg.seed));
    return e;
}

// ---------------------------------------------------------------------------
// score
// ---------------------------------------------------------------------------

ScoreTable cmd_score(const RunConfig& cfg) {
    SideLog log(cfg.out_dir, "score");
    const DatasetManifest m = load_manifest(cfg.manifest);
    const auto segments = select_population(m, cfg.population);
    const BlockSpec block = effective_block(cfg, m);
    const auto exponent = exponent_from_int(effective_exponent(cfg, m));
    const auto weights = effective_weights(cfg, m);
    const fs::path ge_dir = cfg.out_dir / "ge";
    const FrameFeatures f =
        extract_features(m, segments, {block}, exponent, cfg.threads, cfg.save_ge ? &ge_dir : nullptr);
    log.line("features extracted for " + std::to_string(f.labels.size()) + " frames");

    std::vector<ScoreSeries> raw_block, raw_frame;
    for(std::size_t k = 0; k < f.modalities.size(); ++k) {
        raw_block.push_back(f.block_series(k, 0));
        raw_frame.push_back(f.frame_series(k));
    }
    ScoreTable t;
    t.config = config_echo(cfg, m);
    t.layout = f.layout;
    t.labels.assign(f.labels.values().begin(), f.labels.values().end());

    const ScoredSeries block_scores = score_modalities(raw_block, f.modalities, cfg.radius, cfg.norm, weights);
    for(const auto& d : block_scores.degenerate)
        t.flags.push_back("degenerate_range:block:" + d);
    for(std::size_t k = 0; k < f.modalities.size(); ++k) {
        t.column_names.push_back("block_ge:" + f.modalities[k]);
        t.columns.emplace_back(raw_block[k].values().begin(), raw_block[k].values().end());
    }
    t.column_names.push_back("score");
    t.columns.emplace_back(block_scores.scores.values().begin(), block_scores.scores.values().end());

    std::optional<ScoredSeries> frame_scores;
    if(cfg.emit_frame_level) {
        frame_scores = score_modalities(raw_frame, f.modalities, cfg.radius, cfg.norm, weights);
        for(const auto& d : frame_scores->degenerate)
            t.flags.push_back("degenerate_range:frame:" + d);
        for(std::size_t k = 0; k < f.modalities.size(); ++k) {
            t.column_names.push_back("frame_ge:" + f.modalities[k]);
            t.columns.emplace_back(raw_frame[k].values().begin(), raw_frame[k].values().end());
        }
        t.column_names.push_back("frame_score");
        t.columns.emplace_back(frame_scores->scores.values().begin(), frame_scores->scores.values().end());
    }
    write_score_table(cfg.out_dir / "scores.tsv", t);

    if(cfg.plot) {
        PlotSpec p;
        p.title = "Block-level anomaly score (" + block_text(block) + ")";
        p.y_label = "score";
        p.series.push_back({"block-level", block_scores.scores});
        p.labels = f.labels;
        write_text_file(cfg.out_dir / "block_curve.svg", emit_curve_plot(p));
        if(frame_scores) {
            p.title = "Frame-level anomaly score";
            p.series = {{"frame-level", frame_scores->scores}};
            write_text_file(cfg.out_dir / "frame_curve.svg", emit_curve_plot(p));
        }
    }
    log.line("scores written");
    return t;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

EvalReport cmd_evaluate(const RunConfig& cfg, const fs::path& score_path) {
    SideLog log(cfg.out_dir, "evaluate");
    const ScoreTable t = read_score_table(score_path);
    const LabelSeries labels = t.label_series();
    EvalReport r;
    r.config = t.config;
    r.config.emplace_back("saliency_means", "dataset-global");
    r.config.emplace_back("normal_level_source", "raw-ge");
    r.flags = t.flags;

    if(t.column("score"))
        r.auc = guarded("auc", r.flags, [&] { return roc_auc(t.series("score"), labels); });
    if(t.column("frame_score"))
        r.auc_frame = guarded("auc_frame", r.flags, [&] { return roc_auc(t.series("frame_score"), labels); });

    std::optional<DatasetManifest> manifest;
    if(!cfg.manifest.empty())
        manifest = load_manifest(cfg.manifest);
    auto count_of = [&](const std::string& seg) -> std::optional<double> {
        if(!manifest)
            return std::nullopt;
        for(const auto& s : manifest->segments)
            if(s.id == seg)
                return s.target_count;
        return std::nullopt;
    };

    for(const auto& name : t.column_names) {
        GeLevel level;
        std::string modality;
        if(name.rfind("block_ge:", 0) == 0) {
            level = GeLevel::Block;
            modality = name.substr(9);
        } else if(name.rfind("frame_ge:", 0) == 0) {
            level = GeLevel::Frame;
            modality = name.substr(9);
        } else {
            continue;
        }
        const ScoreSeries ge = t.series(name);
        const std::string tag = std::string(to_string(level)) + ":" + modality;
        r.saliency.push_back(
            {modality, level, guarded("saliency:" + tag, r.flags, [&] { return anomaly_saliency(ge, labels); })});
        for(std::size_t s = 0; s < ge.segments().size(); ++s) {
            const auto& seg = ge.segments()[s];
            r.normal_levels.push_back({seg.id, modality, level, count_of(seg.id),
                                       guarded("normal_ge_level:" + tag + ":" + seg.id, r.flags, [&] {
                                           return normal_ge_level(ge.segment_values(s), labels.segment_values(s));
                                       })});
        }
    }
    write_both(r, cfg.out_dir, "report");
    return r;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

EvalReport cmd_sweep(const RunConfig& cfg) {
    SideLog log(cfg.out_dir, "sweep");
    if(cfg.sweep_grid.empty())
        throw Error(ErrorCode::InvalidArgument, "sweep grid is empty");
    const DatasetManifest m = load_manifest(cfg.manifest);
    const auto segments = select_population(m, cfg.population);
    const auto weights = effective_weights(cfg, m);
    std::vector<BlockSpec> blocks;
    for(std::size_t s : cfg.sweep_grid)
        blocks.push_back({s, s});
    const FrameFeatures f =
        extract_features(m, segments, blocks, exponent_from_int(effective_exponent(cfg, m)), cfg.threads);
    log.line("features extracted for " + std::to_string(blocks.size()) + " block sizes");

    EvalReport r;
    r.config = config_echo(cfg, m);
    std::string grid;
    for(std::size_t i = 0; i < cfg.sweep_grid.size(); ++i)
        grid += (i ? "," : "") + std::to_string(cfg.sweep_grid[i]);
    r.config.emplace_back("sweep_grid", grid);
    r.config.emplace_back("sweep_argmax_ties", "first");

    SweepPlotSpec plot;
    SweepCurve curve{m.name, {}};
    for(std::size_t b = 0; b < blocks.size(); ++b) {
        SweepEntry e{blocks[b].h, blocks[b].w, std::nullopt};
        const std::string metric = "sweep:" + block_text(blocks[b]);
        if(f.block_errors[b]) {
            r.flags.push_back("error:" + metric + ":BlockTooLarge:" + *f.block_errors[b]);
        } else {
            std::vector<ScoreSeries> raw;
            for(std::size_t k = 0; k < f.modalities.size(); ++k)
                raw.push_back(f.block_series(k, b));
            const auto scored = score_modalities(raw, f.modalities, cfg.radius, cfg.norm, weights);
            for(const auto& d : scored.degenerate)
                r.flags.push_back("degenerate_range:" + block_text(blocks[b]) + ":" + d);
            e.auc = guarded(metric, r.flags, [&] { return roc_auc(scored.scores, f.labels); });
        }
        if(e.auc) {
            if(!r.sweep_best || *e.auc > *r.sweep_best->auc)
                r.sweep_best = e;
            plot.block_sizes.push_back(static_cast<double>(blocks[b].h));
            curve.auc.push_back(*e.auc);
        }
        r.sweep.push_back(e);
    }
    plot.curves.push_back(std::move(curve));
    if(plot.block_sizes.size() >= 2)
        write_text_file(cfg.out_dir / "sweep.svg", emit_sweep_plot(plot));
    else
        r.flags.push_back("error:sweep_plot:TooFewPoints:a sweep plot needs at least 2 block sizes");
    write_both(r, cfg.out_dir, "sweep");
    return r;
}

// ---------------------------------------------------------------------------
// correlate
// ---------------------------------------------------------------------------

EvalReport cmd_correlate(const RunConfig& cfg) {
    SideLog log(cfg.out_dir, "correlate");
    const DatasetManifest m = load_manifest(cfg.manifest);
    const auto segments = select_population(m, cfg.population);
    if(segments.size() < 2)
        throw Error(ErrorCode::TooFewSegments, "correlation needs at least 2 segments");
    for(std::size_t si : segments)
        if(!m.segments[si].target_count)
            throw Error(ErrorCode::InvalidArgument, "segment has no target_count", "segment " + m.segments[si].id);
    const BlockSpec block = effective_block(cfg, m);
    const FrameFeatures f =
        extract_features(m, segments, {block}, exponent_from_int(effective_exponent(cfg, m)), cfg.threads);

    EvalReport r;
    r.config = config_echo(cfg, m);
    r.config.emplace_back("normal_level_source", "raw-ge");

    std::vector<double> counts;
    for(const auto& c : f.target_counts)
        counts.push_back(*c);

    for(std::size_t k = 0; k < f.modalities.size(); ++k) {
        const std::string& mod = f.modalities[k];
        for(GeLevel level : {GeLevel::Frame, GeLevel::Block}) {
            const ScoreSeries ge = level == GeLevel::Frame ? f.frame_series(k) : f.block_series(k, 0);
            const std::string tag = std::string(to_string(level)) + ":" + mod;
            std::vector<std::optional<double>> levels;
            for(std::size_t s = 0; s < f.layout.size(); ++s) {
                const auto v = guarded("normal_ge_level:" + tag + ":" + f.layout[s].id, r.flags, [&] {
                    return normal_ge_level(ge.segment_values(s), f.labels.segment_values(s));
                });
                levels.push_back(v);
                r.normal_levels.push_back({f.layout[s].id, mod, level, f.target_counts[s], v});
            }
            std::vector<double> xs, ys;
            for(std::size_t s = 0; s < levels.size(); ++s)
                if(levels[s]) {
                    xs.push_back(counts[s]);
                    ys.push_back(*levels[s]);
                }
            r.correlation.push_back(
                {mod, level, guarded("correlation:" + tag, r.flags, [&] { return pearson_correlation(xs, ys); })});
            for(std::size_t a = 0; a < levels.size(); ++a)
                for(std::size_t b = a + 1; b < levels.size(); ++b) {
                    std::optional<double> ratio;
                    if(levels[a] && levels[b])
                        ratio = guarded("ratio:" + tag + ":" + f.layout[a].id + "/" + f.layout[b].id, r.flags,
                                        [&] { return ge_level_ratio(*levels[a], *levels[b]); });
                    r.ratios.push_back({f.layout[a].id, f.layout[b].id, mod, level, ratio});
                }
        }
    }
    write_both(r, cfg.out_dir, "correlation");
    return r;
}

// ---------------------------------------------------------------------------
// norm-compare
// ---------------------------------------------------------------------------

EvalReport cmd_norm_compare(const RunConfig& cfg) {
    SideLog log(cfg.out_dir, "norm-compare");
    const DatasetManifest m = load_manifest(cfg.manifest);
    const BlockSpec block = effective_block(cfg, m);
    const auto weights = effective_weights(cfg, m);
    const auto exponent = exponent_from_int(effective_exponent(cfg, m));

    EvalReport r;
    r.config = config_echo(cfg, m);
    r.config.emplace_back("anomaly_only_rule",
                          std::any_of(m.segments.begin(), m.segments.end(), [](const auto& s) { return !s.split.empty(); })
                              ? "split=test"
                              : "segments-with-anomalies");

    struct Population {
        std::string name;
        std::vector<std::size_t> segments;
    };
    std::vector<Population> pops;
    pops.push_back({"anomaly-only", anomaly_only_population(m)});
    std::vector<std::size_t> all(m.segments.size());
    for(std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    pops.push_back({"mixed", all});

    std::optional<double> mixed_n0, mixed_n1;
    for(const auto& pop : pops) {
        const FrameFeatures f = extract_features(m, pop.segments, {block}, exponent, cfg.threads);
        std::vector<ScoreSeries> raw;
        for(std::size_t k = 0; k < f.modalities.size(); ++k)
            raw.push_back(f.block_series(k, 0));
        for(NormalizationMode mode : {NormalizationMode::Dataset, NormalizationMode::PerVideo}) {
            const auto scored = score_modalities(raw, f.modalities, cfg.radius, mode, weights);
            for(const auto& d : scored.degenerate)
                r.flags.push_back("degenerate_range:" + pop.name + ":" + std::string(to_string(mode)) + ":" + d);
            const auto auc = guarded("norm_auc:" + pop.name + ":" + std::string(to_string(mode)), r.flags,
                                     [&] { return roc_auc(scored.scores, f.labels); });
            r.norm_compare.push_back({pop.name, std::string(to_string(mode)), auc});
            if(pop.name == "mixed")
                (mode == NormalizationMode::Dataset ? mixed_n0 : mixed_n1) = auc;
            if(cfg.plot && pop.name == "mixed") {
                PlotSpec p;
                p.title = std::string("Anomaly scores, ") +
                          (mode == NormalizationMode::Dataset ? "normalized over the dataset" : "normalized per video");
                p.y_label = "score";
                p.series.push_back({std::string(to_string(mode)), scored.scores});
                p.labels = f.labels;
                write_text_file(cfg.out_dir / ("norm_" + std::string(to_string(mode)) + ".svg"), emit_curve_plot(p));
            }
        }
        // unnormalized (filtered, fused) scores as the rank reference
        std::vector<ScoreSeries> filtered;
        for(const auto& s : raw)
            filtered.push_back(median_filter(s, cfg.radius));
        std::vector<FusionWeight> w;
        for(std::size_t k = 0; k < f.modalities.size(); ++k)
            w.push_back({f.modalities[k], weights[k]});
        const ScoreSeries raw_fused = fuse(filtered, FusionWeights(std::move(w)));
        r.norm_compare.push_back({pop.name, "raw", guarded("norm_auc:" + pop.name + ":raw", r.flags, [&] {
                                      return roc_auc(raw_fused, f.labels);
                                  })});
    }
    if(mixed_n0 && mixed_n1 && *mixed_n1 < *mixed_n0)
        r.flags.push_back("norm1_degradation:mixed:" + format_double(*mixed_n0 - *mixed_n1));
    write_both(r, cfg.out_dir, "norm_compare");
    return r;
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

DatasetManifest cmd_synth(const fs::path& synth_config, const fs::path& out_dir) {
    const synth::Config cfg = synth::load_config(synth_config);
    SideLog log(out_dir, "synth");
    const synth::Dataset ds = synth::generate(cfg);
    log.line("generated " + std::to_string(ds.maps.size()) + " frames");
    write_text_file(out_dir / "synth_config.json", synth::config_to_string(cfg));
    return synth::write_dataset(ds, out_dir);
}

} // namespace blockge
