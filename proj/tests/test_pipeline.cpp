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

#include "blockge/report.hpp"
#include "blockge/synth.hpp"
#include "blockge/temporal.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace blockge;
namespace fs = std::filesystem;

namespace {

synth::Config planted_config(std::uint64_t seed, double noise = 0.02) {
    synth::Config c;
    c.name = "planted";
    c.seed = seed;
    c.noise = noise;
    for(std::size_t s = 0; s < 3; ++s)
        c.segments.push_back({"", 80, 5 + 10 * s, "test", {synth::AnomalyWindow{20 + 5 * s, 50 + 5 * s, 12, 1.0}}});
    return c;
}

fs::path make_dataset(const std::string& name, const synth::Config& c) {
    const auto dir = scratch_dir(name);
    synth::write_dataset(synth::generate(c), dir / "data");
    return dir;
}

RunConfig run_config(const fs::path& dir) {
    RunConfig cfg;
    cfg.manifest = dir / "data" / "manifest.json";
    cfg.out_dir = dir / "out";
    return cfg;
}

std::vector<std::string> flags_with(const std::vector<std::string>& flags, const std::string& prefix) {
    std::vector<std::string> out;
    for(const auto& f : flags)
        if(f.rfind(prefix, 0) == 0)
            out.push_back(f);
    return out;
}

} // namespace

TEST_CASE("score writes block scores and beats the frame-level baseline") {
    const auto dir = make_dataset("pipe_score", planted_config(1));
    auto cfg = run_config(dir);
    cfg.emit_frame_level = true;
    cfg.plot = true;
    const auto t = cmd_score(cfg);
    CHECK(t.column_names == std::vector<std::string>{"block_ge:ge", "score", "frame_ge:ge", "frame_score"});
    CHECK(fs::exists(cfg.out_dir / "scores.tsv"));
    CHECK(fs::exists(cfg.out_dir / "block_curve.svg"));
    CHECK(fs::exists(cfg.out_dir / "frame_curve.svg"));
    CHECK(fs::exists(cfg.out_dir / "blockge.log"));
    CHECK(read_score_table(cfg.out_dir / "scores.tsv") == t);

    const auto r = cmd_evaluate(cfg, cfg.out_dir / "scores.tsv");
    REQUIRE(r.auc);
    REQUIRE(r.auc_frame);
    CHECK(*r.auc > *r.auc_frame);
    CHECK(fs::exists(cfg.out_dir / "report.tsv"));
    CHECK(read_report(cfg.out_dir / "report.json") == r);

    // block saliency beats frame saliency on planted anomalies
    std::optional<double> sal_block, sal_frame;
    for(const auto& s : r.saliency)
        (s.level == GeLevel::Block ? sal_block : sal_frame) = s.value;
    REQUIRE(sal_block);
    REQUIRE(sal_frame);
    CHECK(*sal_block > *sal_frame);
    CHECK(r.normal_levels.size() == 6);
}

TEST_CASE("configuration is echoed in full") {
    const auto dir = make_dataset("pipe_echo", planted_config(2));
    auto cfg = run_config(dir);
    cfg.radius = 7;
    cfg.seed = 99;
    const auto t = cmd_score(cfg);
    auto has = [&](const std::string& k, const std::string& v) {
        return std::find(t.config.begin(), t.config.end(), std::pair<std::string, std::string>{k, v}) != t.config.end();
    };
    CHECK(has("exponent", "2"));
    CHECK(has("block", "30x30"));
    CHECK(has("radius", "7"));
    CHECK(has("norm", "dataset"));
    CHECK(has("weights", "1"));
    CHECK(has("seed", "99"));
    CHECK(has("population", "all"));
    CHECK(has("anchors", "valid,stride=1"));
    CHECK(has("generator", synth::kAlgorithm));
}

TEST_CASE("runs are deterministic across thread counts") {
    const auto dir = make_dataset("pipe_determinism", planted_config(3));
    auto a = run_config(dir);
    a.out_dir = dir / "a";
    a.threads = 1;
    a.plot = true;
    a.emit_frame_level = true;
    auto b = a;
    b.out_dir = dir / "b";
    b.threads = 3;
    cmd_score(a);
    cmd_score(b);
    cmd_evaluate(a, a.out_dir / "scores.tsv");
    cmd_evaluate(b, b.out_dir / "scores.tsv");
    for(const char* f : {"scores.tsv", "block_curve.svg", "frame_curve.svg", "report.tsv", "report.json"})
        CHECK_MESSAGE(read_text_file(a.out_dir / f) == read_text_file(b.out_dir / f), f);
}

TEST_CASE("single-frame dataset gives a degenerate range and zero scores") {
    synth::Config c;
    c.segments.push_back({"only", 1, 2, "", {}});
    const auto dir = make_dataset("pipe_single", c);
    const auto t = cmd_score(run_config(dir));
    CHECK(flags_with(t.flags, "degenerate_range:block:ge:dataset").size() == 1);
    CHECK(*t.column("score") == std::vector<double>{0.0});
}

TEST_CASE("full-frame block, radius 0, dataset mode reproduces normalized frame GE") {
    const auto dir = make_dataset("pipe_baseline", planted_config(4));
    auto cfg = run_config(dir);
    cfg.block = BlockSpec{64, 64};
    cfg.radius = 0;
    cfg.emit_frame_level = true;
    const auto t = cmd_score(cfg);
    const auto expected = oracle::minmax(*t.column("frame_ge:ge"));
    const auto& score = *t.column("score");
    for(std::size_t i = 0; i < score.size(); ++i)
        CHECK(score[i] == doctest::Approx(expected[i]).epsilon(1e-9));
}

TEST_CASE("fusing two modalities with unit weights sums their scores") {
    const auto dir = scratch_dir("pipe_fusion");
    auto c1 = planted_config(5);
    auto c2 = planted_config(6);
    const auto m1 = synth::write_dataset(synth::generate(c1), dir / "m1");
    const auto m2 = synth::write_dataset(synth::generate(c2), dir / "m2");

    DatasetManifest both = m1;
    both.modalities = {"pixel", "flow"};
    for(std::size_t s = 0; s < both.segments.size(); ++s)
        for(std::size_t f = 0; f < both.segments[s].frames.size(); ++f) {
            auto& frame = both.segments[s].frames[f];
            frame.sources[0].ge = "m1/" + frame.sources[0].ge;
            frame.sources.push_back({"m2/" + m2.segments[s].frames[f].sources[0].ge, "", ""});
        }
    save_manifest(both, dir / "both.json");

    RunConfig cfg;
    cfg.manifest = dir / "both.json";
    cfg.out_dir = dir / "out";
    const auto fused = cmd_score(cfg);
    REQUIRE(fused.column("block_ge:pixel"));
    REQUIRE(fused.column("block_ge:flow"));

    std::vector<double> expected(fused.labels.size(), 0.0);
    for(const char* mod : {"block_ge:pixel", "block_ge:flow"}) {
        const auto filtered = median_filter(fused.series(mod), cfg.radius);
        const auto norm = normalize(filtered).scores;
        for(std::size_t i = 0; i < expected.size(); ++i)
            expected[i] += norm.values()[i];
    }
    const auto& score = *fused.column("score");
    for(std::size_t i = 0; i < score.size(); ++i)
        CHECK(score[i] == expected[i]);

    cfg.weights = {1.0};
    CHECK_THROWS_CODE(cmd_score(cfg), ErrorCode::InvalidArgument);
}

TEST_CASE("frame-pair sources compute GE lazily and store it only on request") {
    const auto dir = scratch_dir("pipe_pairs");
    std::mt19937_64 rng(70);
    std::string frames;
    for(int i = 0; i < 6; ++i) {
        const auto p = oracle::random_frame(rng, 40, 40, 3);
        const auto g = oracle::random_frame(rng, 40, 40, 3);
        const auto name = std::to_string(i);
        write_frame(dir / ("pred" + name + ".ppm"), p);
        write_frame(dir / ("gt" + name + ".ppm"), g);
        frames += std::string(i ? "," : "") + "{\"label\": " + (i >= 3 ? "1" : "0") + ", \"sources\": [{\"pred\": \"pred" +
                  name + ".ppm\", \"gt\": \"gt" + name + ".ppm\"}]}";
    }
    write_text_file(dir / "manifest.json",
                    R"({"schema_version": 1, "name": "pairs", "settings": {"exponent": 1, "block": [8, 8]},
                        "segments": [{"id": "clip", "frames": [)" + frames + "]}]}");
    RunConfig cfg;
    cfg.manifest = dir / "manifest.json";
    cfg.out_dir = dir / "out";
    cfg.radius = 0;
    const auto t = cmd_score(cfg);
    CHECK_FALSE(fs::exists(cfg.out_dir / "ge"));

    const auto m = load_manifest(cfg.manifest);
    for(std::size_t i = 0; i < 6; ++i) {
        const auto& src = m.segments[0].frames[i].sources[0];
        const auto ge = compute_ge_map(read_frame(m.resolve(src.pred)), read_frame(m.resolve(src.gt)),
                                       ErrorExponent::Absolute);
        CHECK((*t.column("block_ge:ge"))[i] == block_level_ge(ge, {8, 8}));
    }

    cfg.save_ge = true;
    cfg.out_dir = dir / "out2";
    CHECK(cmd_score(cfg).columns == t.columns);
    CHECK(fs::exists(cfg.out_dir / "ge" / "clip" / "000005_ge.gem"));
}

TEST_CASE("evaluate records metric errors without aborting") {
    synth::Config c;
    c.segments.push_back({"a", 20, 3, "", {}});
    c.segments.push_back({"b", 20, 6, "", {}});
    const auto dir = make_dataset("pipe_eval_errors", c);
    auto cfg = run_config(dir);
    cmd_score(cfg);
    const auto r = cmd_evaluate(cfg, cfg.out_dir / "scores.tsv");
    CHECK_FALSE(r.auc);
    CHECK(flags_with(r.flags, "error:auc:SingleClass").size() == 1);
    CHECK(flags_with(r.flags, "error:saliency:block:ge:SingleClass").size() == 1);
    REQUIRE(r.normal_levels.size() == 2);
    CHECK(r.normal_levels[0].value);
    CHECK(r.normal_levels[0].target_count == 3.0);
    CHECK(read_text_file(cfg.out_dir / "report.tsv").find("auc\tblock\tNA") != std::string::npos);
}

TEST_CASE("sweep reports every size and keeps going past misfits") {
    const auto dir = make_dataset("pipe_sweep", planted_config(7));
    auto cfg = run_config(dir);
    cfg.sweep_grid = {4, 12, 64, 80};
    cfg.emit_frame_level = true;
    const auto r = cmd_sweep(cfg);
    REQUIRE(r.sweep.size() == 4);
    CHECK(r.sweep[0].auc);
    CHECK_FALSE(r.sweep[3].auc);
    CHECK(flags_with(r.flags, "error:sweep:80x80:BlockTooLarge").size() == 1);
    REQUIRE(r.sweep_best);
    for(const auto& e : r.sweep)
        if(e.auc)
            CHECK(*e.auc <= *r.sweep_best->auc);
    CHECK(fs::exists(cfg.out_dir / "sweep.svg"));
    CHECK(fs::exists(cfg.out_dir / "sweep.tsv"));

    // full-frame block equals the frame-level pipeline
    cfg.out_dir = dir / "score";
    const auto t = cmd_score(cfg);
    const auto frame_auc = roc_auc(t.series("frame_score"), t.label_series());
    CHECK(*r.sweep[2].auc == frame_auc);
}

TEST_CASE("single-size sweep gives one row and no plot") {
    const auto dir = make_dataset("pipe_sweep_one", planted_config(8));
    auto cfg = run_config(dir);
    cfg.sweep_grid = {30};
    const auto r = cmd_sweep(cfg);
    CHECK(r.sweep.size() == 1);
    CHECK(flags_with(r.flags, "error:sweep_plot:TooFewPoints").size() == 1);
    CHECK_FALSE(fs::exists(cfg.out_dir / "sweep.svg"));
    cfg.sweep_grid.clear();
    CHECK_THROWS_CODE(cmd_sweep(cfg), ErrorCode::InvalidArgument);
}

TEST_CASE("correlate: proportional frame levels, weaker block levels") {
    synth::Config c;
    c.seed = 9;
    c.height = c.width = 128;
    for(std::size_t k : {10, 20, 30, 40, 50})
        c.segments.push_back({"", 30, k, "", {}});
    const auto dir = make_dataset("pipe_correlate", c);
    auto cfg = run_config(dir);
    const auto r = cmd_correlate(cfg);
    std::optional<double> frame_r, block_r;
    for(const auto& e : r.correlation)
        (e.level == GeLevel::Frame ? frame_r : block_r) = e.r;
    REQUIRE(frame_r);
    REQUIRE(block_r);
    CHECK(*frame_r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*block_r < *frame_r);
    CHECK(r.ratios.size() == 2 * 10);
    CHECK(fs::exists(cfg.out_dir / "correlation.tsv"));

    // equal counts
    synth::Config same;
    for(int s = 0; s < 3; ++s)
        same.segments.push_back({"", 10, 4, "", {}});
    const auto dir2 = make_dataset("pipe_correlate_equal", same);
    const auto r2 = cmd_correlate(run_config(dir2));
    CHECK(flags_with(r2.flags, "error:correlation:frame:ge:ZeroVariance").size() == 1);

    synth::Config one;
    one.segments.push_back({"", 10, 4, "", {}});
    CHECK_THROWS_CODE(cmd_correlate(run_config(make_dataset("pipe_correlate_one", one))), ErrorCode::TooFewSegments);
}

TEST_CASE("norm-compare: per-video scaling hurts mixed populations") {
    auto c = planted_config(10);
    c.segments.push_back({"normal00", 80, 15, "train", {}});
    const auto dir = make_dataset("pipe_norm", c);
    auto cfg = run_config(dir);
    cfg.plot = true;
    const auto r = cmd_norm_compare(cfg);
    auto auc = [&](const std::string& pop, const std::string& mode) {
        for(const auto& e : r.norm_compare)
            if(e.population == pop && e.mode == mode)
                return e.auc;
        return std::optional<double>{};
    };
    REQUIRE(auc("mixed", "dataset"));
    REQUIRE(auc("mixed", "video"));
    CHECK(*auc("mixed", "video") < *auc("mixed", "dataset"));
    CHECK(*auc("mixed", "dataset") == *auc("mixed", "raw"));
    CHECK(auc("anomaly-only", "dataset"));
    CHECK(auc("anomaly-only", "video"));
    CHECK(flags_with(r.flags, "norm1_degradation:mixed").size() == 1);
    CHECK(fs::exists(cfg.out_dir / "norm_video.svg"));
}

TEST_CASE("populations") {
    auto c = planted_config(11);
    c.segments.push_back({"extra", 10, 3, "train", {}});
    const auto m = synth::write_dataset(synth::generate(c), scratch_dir("pipe_pop"));
    CHECK(select_population(m, "all").size() == 4);
    CHECK(select_population(m, "train") == std::vector<std::size_t>{3});
    CHECK(anomaly_only_population(m) == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_CODE(select_population(m, "val"), ErrorCode::InvalidArgument);

    auto untagged = m;
    for(auto& s : untagged.segments)
        s.split.clear();
    CHECK(anomaly_only_population(untagged) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("synth command writes a loadable dataset") {
    const auto dir = scratch_dir("pipe_synth");
    write_text_file(dir / "cfg.json", synth::config_to_string(planted_config(12)));
    const auto m = cmd_synth(dir / "cfg.json", dir / "data");
    CHECK(load_manifest(dir / "data" / "manifest.json") == m);
    CHECK(fs::exists(dir / "data" / "synth_config.json"));
    CHECK_THROWS_CODE(cmd_synth(dir / "missing.json", dir / "x"), ErrorCode::MissingFile);
}
