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

#include "blockge/metrics.hpp"
#include "blockge/series.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace blockge {

struct NamedSeries {
    std::string name;
    ScoreSeries series;
};

/// GE or score curves over time. Abnormal frames are shaded, segment
/// boundaries drawn as dashed vertical lines.
struct PlotSpec {
    std::string title;
    std::string x_label = "frame";
    std::string y_label = "GE";
    std::vector<NamedSeries> series;
    std::optional<LabelSeries> labels;
};

/// Deterministic SVG 1.1 text. One <polyline> per series, one
/// <rect class="abnormal"> per maximal run of label 1, one
/// <line class="separator"> per boundary between consecutive segments.
/// Throws EmptySeries when there is nothing to draw and ShapeMismatch when
/// layouts disagree.
std::string emit_curve_plot(const PlotSpec& spec);

struct SweepCurve {
    std::string name;
    std::vector<double> auc;  // aligned with SweepPlotSpec::block_sizes
};

struct SweepPlotSpec {
    std::string title = "AUC vs block size";
    std::vector<double> block_sizes;
    std::vector<SweepCurve> curves;
};

/// One <polyline> per curve, x = block size, y = AUC. Throws TooFewPoints
/// for fewer than two sizes.
std::string emit_sweep_plot(const SweepPlotSpec& spec);

/// Maximal runs of label 1 as [first, last] frame pairs over the
/// concatenated series.
std::vector<std::pair<std::size_t, std::size_t>> abnormal_runs(const LabelSeries& labels);

enum class ReportFormat { Tabular, Structured };

/// Tabular: tab-separated "metric scope value" rows in a fixed order, with
/// config and flags as leading comment lines and NA for missing values.
std::string report_to_tabular(const EvalReport& report);
/// Structured: JSON that report_from_json reads back to an equal report.
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json(const std::string& text);

/// Validates, then writes. Throws IoError on filesystem failures.
void write_report(const EvalReport& report, const std::filesystem::path& path, ReportFormat format);
EvalReport read_report(const std::filesystem::path& path);

} // namespace blockge
