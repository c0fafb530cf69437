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

#include "blockge/report.hpp"

#include "blockge/dataset_io.hpp"
#include "blockge/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <set>

namespace blockge {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kLeft = 70.0;
constexpr double kRight = 940.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 320.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    // avoid "-0.00"
    if(std::string(buf) == "-0.00")
        return "0.00";
    return buf;
}

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for(char c : s) {
        switch(c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Axis {
    double lo;
    double hi;
};

Axis value_range(double lo, double hi, double pad_if_flat) {
    if(hi == lo)
        return {lo - pad_if_flat, hi + pad_if_flat};
    return {lo, hi};
}

std::string svg_open(const std::string& title, const std::string& mapping) {
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<!-- " + mapping + " -->\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"960\" height=\"360\" viewBox=\"0 0 960 360\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"360\" fill=\"white\"/>\n";
    s += "<text x=\"480\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
         escape(title) + "</text>\n";
    return s;
}

std::string axes(const std::string& x_label, const std::string& y_label, const Axis& y) {
    std::string s;
    s += "<line class=\"axis\" x1=\"70\" y1=\"320\" x2=\"940\" y2=\"320\" stroke=\"black\"/>\n";
    s += "<line class=\"axis\" x1=\"70\" y1=\"30\" x2=\"70\" y2=\"320\" stroke=\"black\"/>\n";
    s += "<text x=\"505\" y=\"350\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
         escape(x_label) + "</text>\n";
    s += "<text x=\"15\" y=\"175\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 15 175)\">" +
         escape(y_label) + "</text>\n";
    s += "<text x=\"65\" y=\"324\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" + fmt6(y.lo) +
         "</text>\n";
    s += "<text x=\"65\" y=\"34\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" + fmt6(y.hi) +
         "</text>\n";
    return s;
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> abnormal_runs(const LabelSeries& labels) {
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    const auto v = labels.values();
    for(std::size_t i = 0; i < v.size();) {
        if(v[i] == 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while(j + 1 < v.size() && v[j + 1] == 1)
            ++j;
        runs.emplace_back(i, j);
        i = j + 1;
    }
    return runs;
}

std::string emit_curve_plot(const PlotSpec& spec) {
    if(spec.series.empty() || spec.series.front().series.empty())
        throw Error(ErrorCode::EmptySeries, "nothing to plot");
    const auto& layout = spec.series.front().series.segments();
    for(const auto& s : spec.series)
        require_same_structure(layout, s.series.segments(), "emit_curve_plot");
    if(spec.labels)
        require_same_structure(layout, spec.labels->segments(), "emit_curve_plot labels");

    const std::size_t n = spec.series.front().series.size();
    double lo = spec.series.front().series.values()[0], hi = lo;
    for(const auto& s : spec.series)
        for(double v : s.series.values()) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    const Axis y = value_range(lo, hi, 0.5);
    const double step = (kRight - kLeft) / static_cast<double>(std::max<std::size_t>(1, n - 1));
    auto px = [&](double i) { return std::clamp(kLeft + i * step, kLeft, kRight); };
    auto py = [&](double v) { return kBottom - (v - y.lo) * (kBottom - kTop) / (y.hi - y.lo); };

    const std::string mapping = "blockge curve plot; viewport 960x360; frame i -> x = 70 + i * 870 / max(1, N - 1), N = " +
                                std::to_string(n) + "; value v -> y = 320 - (v - " + fmt6(y.lo) + ") * 290 / (" +
                                fmt6(y.hi) + " - " + fmt6(y.lo) + ")";
    std::string s = svg_open(spec.title, mapping);

    if(spec.labels) {
        for(const auto& [a, b] : abnormal_runs(*spec.labels)) {
            const double x0 = px(static_cast<double>(a) - 0.5);
            const double x1 = px(static_cast<double>(b) + 0.5);
            s += "<rect class=\"abnormal\" x=\"" + fmt2(x0) + "\" y=\"30\" width=\"" + fmt2(x1 - x0) +
                 "\" height=\"290\" fill=\"#ff0000\" fill-opacity=\"0.2\"/>\n";
        }
    }
    for(std::size_t k = 1; k < layout.size(); ++k) {
        const double x = px(static_cast<double>(layout[k].start) - 0.5);
        s += "<line class=\"separator\" x1=\"" + fmt2(x) + "\" y1=\"30\" x2=\"" + fmt2(x) +
             "\" y2=\"320\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
    }
    s += axes(spec.x_label, spec.y_label, y);
    for(std::size_t k = 0; k < spec.series.size(); ++k) {
        const auto v = spec.series[k].series.values();
        s += "<polyline class=\"series\" fill=\"none\" stroke=\"" + std::string(kPalette[k % std::size(kPalette)]) +
             "\" stroke-width=\"1\" points=\"";
        for(std::size_t i = 0; i < v.size(); ++i) {
            if(i)
                s += " ";
            s += fmt2(px(static_cast<double>(i))) + "," + fmt2(py(v[i]));
        }
        s += "\"><title>" + escape(spec.series[k].name) + "</title></polyline>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string emit_sweep_plot(const SweepPlotSpec& spec) {
    if(spec.block_sizes.size() < 2)
        throw Error(ErrorCode::TooFewPoints, "a sweep plot needs at least 2 block sizes");
    if(spec.curves.empty())
        throw Error(ErrorCode::EmptySeries, "no sweep curves");
    for(const auto& c : spec.curves)
        if(c.auc.size() != spec.block_sizes.size())
            throw Error(ErrorCode::ShapeMismatch, "curve '" + c.name + "' has the wrong number of points");
    const auto [xmin, xmax] = std::minmax_element(spec.block_sizes.begin(), spec.block_sizes.end());
    const Axis x = value_range(*xmin, *xmax, 0.5);
    double lo = spec.curves[0].auc[0], hi = lo;
    for(const auto& c : spec.curves)
        for(double v : c.auc) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    const Axis y = value_range(lo, hi, 0.05);
    auto px = [&](double b) { return kLeft + (b - x.lo) * (kRight - kLeft) / (x.hi - x.lo); };
    auto py = [&](double v) { return kBottom - (v - y.lo) * (kBottom - kTop) / (y.hi - y.lo); };

    const std::string mapping = "blockge sweep plot; viewport 960x360; block size b -> x = 70 + (b - " + fmt6(x.lo) +
                                ") * 870 / (" + fmt6(x.hi) + " - " + fmt6(x.lo) + "); AUC a -> y = 320 - (a - " +
                                fmt6(y.lo) + ") * 290 / (" + fmt6(y.hi) + " - " + fmt6(y.lo) + ")";
    std::string s = svg_open(spec.title, mapping);
    s += axes("block size", "AUC", y);
    for(double b : spec.block_sizes)
        s += "<text x=\"" + fmt2(px(b)) + "\" y=\"334\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"10\">" + fmt6(b) + "</text>\n";
    for(std::size_t k = 0; k < spec.curves.size(); ++k) {
        const auto& c = spec.curves[k];
        s += "<polyline class=\"series\" fill=\"none\" stroke=\"" + std::string(kPalette[k % std::size(kPalette)]) +
             "\" stroke-width=\"1.5\" points=\"";
        for(std::size_t i = 0; i < c.auc.size(); ++i) {
            if(i)
                s += " ";
            s += fmt2(px(spec.block_sizes[i])) + "," + fmt2(py(c.auc[i]));
        }
        s += "\"><title>" + escape(c.name) + "</title></polyline>\n";
    }
    s += "</svg>\n";
    return s;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

namespace {

std::string value_or_na(const std::optional<double>& v) {
    return v ? format_double(*v) : "NA";
}

std::string level_scope(GeLevel level, const std::string& modality) {
    return std::string(to_string(level)) + ":" + modality;
}

ojson opt(const std::optional<double>& v) {
    return v ? ojson(*v) : ojson(nullptr);
}

std::optional<double> get_opt(const ojson& obj, const char* key) {
    if(!obj.contains(key) || obj.at(key).is_null())
        return std::nullopt;
    return obj.at(key).get<double>();
}

GeLevel parse_level(const std::string& s) {
    if(s == "frame")
        return GeLevel::Frame;
    if(s == "block")
        return GeLevel::Block;
    throw Error(ErrorCode::ParseError, "unknown GE level '" + s + "'");
}

constexpr std::string_view kReportMagic = "# blockge-report 1";

} // namespace

std::string report_to_tabular(const EvalReport& r) {
    std::string out(kReportMagic);
    out += "\n";
    for(const auto& [k, v] : r.config)
        out += "# config " + k + "=" + v + "\n";
    for(const auto& f : r.flags)
        out += "# flag " + f + "\n";
    out += "metric\tscope\tvalue\n";
    auto row = [&](const std::string& metric, const std::string& scope, const std::optional<double>& v) {
        out += metric + "\t" + scope + "\t" + value_or_na(v) + "\n";
    };
    row("auc", "block", r.auc);
    row("auc", "frame", r.auc_frame);
    for(const auto& s : r.saliency)
        row("saliency", level_scope(s.level, s.modality), s.value);
    std::set<std::string> counted;
    for(const auto& l : r.normal_levels)
        if(counted.insert(l.segment).second)
            row("target_count", l.segment, l.target_count);
    for(const auto& l : r.normal_levels)
        row("normal_ge_level", level_scope(l.level, l.modality) + ":" + l.segment, l.value);
    for(const auto& c : r.correlation)
        row("correlation", level_scope(c.level, c.modality), c.r);
    for(const auto& q : r.ratios)
        row("ratio", level_scope(q.level, q.modality) + ":" + q.segment_a + "/" + q.segment_b, q.ratio);
    for(const auto& s : r.sweep)
        row("sweep_auc", std::to_string(s.block_h) + "x" + std::to_string(s.block_w), s.auc);
    if(r.sweep_best)
        row("sweep_best", std::to_string(r.sweep_best->block_h) + "x" + std::to_string(r.sweep_best->block_w),
            r.sweep_best->auc);
    for(const auto& n : r.norm_compare)
        row("norm_auc", n.population + ":" + n.mode, n.auc);
    return out;
}

std::string report_to_json(const EvalReport& r) {
    ojson root;
    root["format"] = "blockge-report";
    root["version"] = 1;
    ojson cfg = ojson::array();
    for(const auto& [k, v] : r.config)
        cfg.push_back({k, v});
    root["config"] = std::move(cfg);
    root["auc"] = opt(r.auc);
    root["auc_frame"] = opt(r.auc_frame);
    ojson sal = ojson::array();
    for(const auto& s : r.saliency)
        sal.push_back({{"modality", s.modality}, {"level", to_string(s.level)}, {"value", opt(s.value)}});
    root["saliency"] = std::move(sal);
    ojson levels = ojson::array();
    for(const auto& l : r.normal_levels)
        levels.push_back({{"segment", l.segment},
                          {"modality", l.modality},
                          {"level", to_string(l.level)},
                          {"target_count", opt(l.target_count)},
                          {"value", opt(l.value)}});
    root["normal_levels"] = std::move(levels);
    ojson corr = ojson::array();
    for(const auto& c : r.correlation)
        corr.push_back({{"modality", c.modality}, {"level", to_string(c.level)}, {"r", opt(c.r)}});
    root["correlation"] = std::move(corr);
    ojson ratios = ojson::array();
    for(const auto& q : r.ratios)
        ratios.push_back({{"segment_a", q.segment_a},
                          {"segment_b", q.segment_b},
                          {"modality", q.modality},
                          {"level", to_string(q.level)},
                          {"ratio", opt(q.ratio)}});
    root["ratios"] = std::move(ratios);
    ojson sweep = ojson::array();
    for(const auto& s : r.sweep)
        sweep.push_back({{"block", {s.block_h, s.block_w}}, {"auc", opt(s.auc)}});
    root["sweep"] = std::move(sweep);
    root["sweep_best"] = r.sweep_best ? ojson{{"block", {r.sweep_best->block_h, r.sweep_best->block_w}},
                                              {"auc", opt(r.sweep_best->auc)}}
                                      : ojson(nullptr);
    ojson norm = ojson::array();
    for(const auto& n : r.norm_compare)
        norm.push_back({{"population", n.population}, {"mode", n.mode}, {"auc", opt(n.auc)}});
    root["norm_compare"] = std::move(norm);
    root["flags"] = r.flags;
    return root.dump(2) + "\n";
}

EvalReport report_from_json(const std::string& text) {
    ojson root;
    try {
        root = ojson::parse(text);
    } catch(const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what(), "byte " + std::to_string(e.byte));
    }
    try {
        if(root.value("format", "") != "blockge-report")
            throw Error(ErrorCode::BadMagic, "not a blockge report");
        EvalReport r;
        for(const auto& kv : root.at("config"))
            r.config.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
        r.auc = get_opt(root, "auc");
        r.auc_frame = get_opt(root, "auc_frame");
        for(const auto& s : root.at("saliency"))
            r.saliency.push_back({s.at("modality").get<std::string>(), parse_level(s.at("level").get<std::string>()),
                                  get_opt(s, "value")});
        for(const auto& l : root.at("normal_levels"))
            r.normal_levels.push_back({l.at("segment").get<std::string>(), l.at("modality").get<std::string>(),
                                       parse_level(l.at("level").get<std::string>()), get_opt(l, "target_count"),
                                       get_opt(l, "value")});
        for(const auto& c : root.at("correlation"))
            r.correlation.push_back({c.at("modality").get<std::string>(), parse_level(c.at("level").get<std::string>()),
                                     get_opt(c, "r")});
        for(const auto& q : root.at("ratios"))
            r.ratios.push_back({q.at("segment_a").get<std::string>(), q.at("segment_b").get<std::string>(),
                                q.at("modality").get<std::string>(), parse_level(q.at("level").get<std::string>()),
                                get_opt(q, "ratio")});
        for(const auto& s : root.at("sweep"))
            r.sweep.push_back({s.at("block").at(0).get<std::size_t>(), s.at("block").at(1).get<std::size_t>(),
                               get_opt(s, "auc")});
        if(root.contains("sweep_best") && !root.at("sweep_best").is_null()) {
            const auto& b = root.at("sweep_best");
            r.sweep_best = SweepEntry{b.at("block").at(0).get<std::size_t>(), b.at("block").at(1).get<std::size_t>(),
                                      get_opt(b, "auc")};
        }
        for(const auto& n : root.at("norm_compare"))
            r.norm_compare.push_back(
                {n.at("population").get<std::string>(), n.at("mode").get<std::string>(), get_opt(n, "auc")});
        r.flags = root.at("flags").get<std::vector<std::string>>();
        r.validate();
        return r;
    } catch(const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

void write_report(const EvalReport& report, const std::filesystem::path& path, ReportFormat format) {
    report.validate();
    write_text_file(path, format == ReportFormat::Tabular ? report_to_tabular(report) : report_to_json(report));
}

EvalReport read_report(const std::filesystem::path& path) {
    return report_from_json(read_text_file(path));
}

} // namespace blockge
