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

// blockge command line: scores GE maps and runs the evaluation experiments
// through the C API of libblockge.

#include "blockge/blockge.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Options {
    std::string manifest;
    std::vector<std::size_t> block;
    int exponent = 0;
    std::size_t radius = 15;
    std::string norm = "dataset";
    std::vector<double> weights;
    std::string population = "all";
    std::string out = "out";
    std::uint64_t seed = 0;
    bool emit_frame_level = false;
    bool plot = false;
    bool save_ge = false;
    std::size_t threads = 0;
    std::vector<std::size_t> grid;
    std::string scores;
    std::string config;
};

class RunHandle {
public:
    RunHandle() { check(blockge_run_create(&run_)); }
    ~RunHandle() { blockge_run_destroy(run_); }
    RunHandle(const RunHandle&) = delete;
    RunHandle& operator=(const RunHandle&) = delete;
    blockge_run* get() const { return run_; }

    static void check(blockge_status s) {
        if(s != BLOCKGE_OK)
            throw s;
    }

private:
    blockge_run* run_ = nullptr;
};

void apply(const Options& o, const RunHandle& h) {
    blockge_run* r = h.get();
    RunHandle::check(blockge_run_set_out_dir(r, o.out.c_str()));
    if(!o.manifest.empty())
        RunHandle::check(blockge_run_set_manifest(r, o.manifest.c_str()));
    if(o.block.size() == 2)
        RunHandle::check(blockge_run_set_block(r, o.block[0], o.block[1]));
    if(o.exponent != 0)
        RunHandle::check(blockge_run_set_exponent(r, o.exponent));
    RunHandle::check(blockge_run_set_radius(r, o.radius));
    RunHandle::check(blockge_run_set_norm(r, o.norm.c_str()));
    RunHandle::check(blockge_run_set_population(r, o.population.c_str()));
    if(!o.weights.empty())
        RunHandle::check(blockge_run_set_weights(r, o.weights.data(), o.weights.size()));
    if(!o.grid.empty())
        RunHandle::check(blockge_run_set_sweep_grid(r, o.grid.data(), o.grid.size()));
    RunHandle::check(blockge_run_set_seed(r, o.seed));
    RunHandle::check(blockge_run_set_threads(r, o.threads));
    RunHandle::check(blockge_run_set_emit_frame_level(r, o.emit_frame_level));
    RunHandle::check(blockge_run_set_plot(r, o.plot));
    RunHandle::check(blockge_run_set_save_ge(r, o.save_ge));
}

void add_common(CLI::App* app, Options& o, bool needs_manifest) {
    auto* m = app->add_option("--manifest", o.manifest, "Dataset manifest (JSON)");
    if(needs_manifest)
        m->required();
    app->add_option("--block", o.block, "Block height and width (default: manifest, else 30 30)")->expected(2);
    app->add_option("--exponent", o.exponent, "Error exponent (default: manifest, else 2)")
        ->check(CLI::IsMember({1, 2}));
    app->add_option("--radius", o.radius, "Median filter radius")->capture_default_str();
    app->add_option("--norm", o.norm, "Normalization scope")
        ->check(CLI::IsMember({"dataset", "video", "norm0", "norm1"}))
        ->capture_default_str();
    app->add_option("--weights", o.weights, "Fusion weights, one per modality")->delimiter(',');
    app->add_option("--population", o.population, "'all' or a split tag")->capture_default_str();
    app->add_option("--out", o.out, "Output directory")->capture_default_str();
    app->add_option("--seed", o.seed, "Run seed, echoed into outputs")->capture_default_str();
    app->add_option("--threads", o.threads, "Worker threads (0: BLOCKGE_THREADS or all cores)");
    app->add_flag("--plot", o.plot, "Also write SVG plots");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"blockge: block-level generation-error anomaly scoring"};
    app.require_subcommand(1);
    Options o;

    auto* score = app.add_subcommand("score", "Score every frame of a dataset");
    add_common(score, o, true);
    score->add_flag("--emit-frame-level", o.emit_frame_level, "Also score the whole-frame GE baseline");
    score->add_flag("--save-ge", o.save_ge, "Store GE maps computed from frame pairs under <out>/ge");

    auto* evaluate = app.add_subcommand("evaluate", "Compute AUC, saliency and normal GE levels from a score table");
    add_common(evaluate, o, false);
    evaluate->add_option("--scores", o.scores, "Score table (default: <out>/scores.tsv)");

    auto* sweep = app.add_subcommand("sweep", "AUC over a grid of square block sizes");
    add_common(sweep, o, true);
    sweep->add_option("--grid", o.grid, "Block sizes, e.g. 2,5,10,15,20,30,45,60")->delimiter(',');

    auto* correlate = app.add_subcommand("correlate", "Correlate normal GE levels with target counts");
    add_common(correlate, o, true);

    auto* norm_compare = app.add_subcommand("norm-compare", "Compare normalization scopes on two populations");
    add_common(norm_compare, o, true);

    auto* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
    synth->add_option("--config", o.config, "Generator config (JSON)")->required();
    synth->add_option("--out", o.out, "Output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if(synth->parsed()) {
            RunHandle::check(blockge_cmd_synth(o.config.c_str(), o.out.c_str()));
        } else {
            RunHandle h;
            apply(o, h);
            if(score->parsed()) {
                RunHandle::check(blockge_cmd_score(h.get()));
            } else if(evaluate->parsed()) {
                const std::string path = o.scores.empty() ? o.out + "/scores.tsv" : o.scores;
                RunHandle::check(blockge_cmd_evaluate(h.get(), path.c_str()));
            } else if(sweep->parsed()) {
                RunHandle::check(blockge_cmd_sweep(h.get()));
            } else if(correlate->parsed()) {
                RunHandle::check(blockge_cmd_correlate(h.get()));
            } else if(norm_compare->parsed()) {
                RunHandle::check(blockge_cmd_norm_compare(h.get()));
            }
        }
    } catch(blockge_status) {
        std::fprintf(stderr, "blockge: error %s\n", blockge_last_error());
        return 1;
    }
    std::printf("%s\n", blockge_last_summary());
    return 0;
}
