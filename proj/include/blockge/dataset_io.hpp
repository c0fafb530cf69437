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
#include "blockge/ge_map.hpp"
#include "blockge/series.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blockge {

// ---------------------------------------------------------------------------
// Rasters
//
// GEM1 layout (little-endian):
//   bytes 0..3   "GEM1"
//   bytes 4..7   height, uint32
//   bytes 8..11  width, uint32
//   then height*width IEEE-754 binary32 values, row-major
// ---------------------------------------------------------------------------

void write_gemap(const std::filesystem::path& path, const GEMap& map);

/// Reads GEM1 losslessly, or a binary graymap (P5, 8 or 16 bit) scaled to
/// [0, 1] by its max sample value. Throws BadMagic, TruncatedFile,
/// NonFiniteValue, NegativeValue, MissingFile.
GEMap read_gemap(const std::filesystem::path& path);

/// Binary graymap (P5, one channel) or pixmap (P6, three channels), 8 or
/// 16 bit, as channel-interleaved floats in [0, 1].
FrameImage read_frame(const std::filesystem::path& path);

/// Writes P5 for one channel, P6 for three. Values are clamped to [0, 1]
/// and rounded to the nearest of `max_sample` levels.
void write_frame(const std::filesystem::path& path, const FrameImage& frame, std::uint16_t max_sample = 255);

/// 8-bit grayscale export of a GE map, scaled by its maximum (all-zero maps
/// export black).
void export_gemap_pgm(const std::filesystem::path& path, const GEMap& map);

// ---------------------------------------------------------------------------
// Manifest (JSON, schema_version 1; see docs/manifest.md)
// ---------------------------------------------------------------------------

/// One modality's source for one frame: either a GE map file, or a
/// prediction / ground-truth frame pair to difference on the fly.
struct FrameSource {
    std::string ge;
    std::string pred;
    std::string gt;

    bool is_pair() const noexcept { return ge.empty(); }
    bool operator==(const FrameSource&) const = default;
};

struct FrameEntry {
    std::uint8_t label = 0;
    std::vector<FrameSource> sources;  // aligned with DatasetManifest::modalities

    bool operator==(const FrameEntry&) const = default;
};

struct SegmentEntry {
    std::string id;
    std::string split;  // free-form population tag, e.g. "train" / "test"; may be empty
    std::optional<double> target_count;
    std::vector<FrameEntry> frames;

    bool operator==(const SegmentEntry&) const = default;
};

struct ManifestSettings {
    int exponent = 2;
    BlockSpec block{30, 30};

    bool operator==(const ManifestSettings&) const = default;
};

/// Records how a dataset was generated.
struct Provenance {
    std::string algorithm;
    std::uint64_t seed = 0;

    bool operator==(const Provenance&) const = default;
};

struct DatasetManifest {
    static constexpr int kSchemaVersion = 1;

    std::string name;
    std::vector<std::string> modalities{"ge"};
    ManifestSettings settings;
    std::optional<Provenance> provenance;
    std::vector<SegmentEntry> segments;
    /// Directory relative paths resolve against. Not serialized.
    std::filesystem::path base_dir;

    std::filesystem::path resolve(const std::string& relative) const { return base_dir / relative; }

    std::vector<Segment> layout() const;
    LabelSeries labels() const;

    /// Structural equality; ignores base_dir.
    bool operator==(const DatasetManifest& other) const;
};

/// Parses and validates eagerly: ParseError (with line or field pointer),
/// LabelOutOfRange, DuplicateSegmentId, and MissingFile when `check_files`.
DatasetManifest parse_manifest(const std::string& text, const std::filesystem::path& base_dir,
                               bool check_files = true);
DatasetManifest load_manifest(const std::filesystem::path& path);
/// Canonical serialization; load(save(m)) == m and save is byte-stable.
std::string manifest_to_string(const DatasetManifest& manifest);
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Score tables (tab-separated, see docs/formats.md)
// ---------------------------------------------------------------------------

struct ScoreTable {
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> flags;
    std::vector<Segment> layout;
    std::vector<std::uint8_t> labels;
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> columns;

    /// nullptr when absent.
    const std::vector<double>* column(const std::string& name) const;
    ScoreSeries series(const std::string& name) const;
    LabelSeries label_series() const { return LabelSeries(layout, labels); }

    bool operator==(const ScoreTable&) const = default;
};

std::string score_table_to_string(const ScoreTable& table);
ScoreTable parse_score_table(const std::string& text);
void write_score_table(const std::filesystem::path& path, const ScoreTable& table);
ScoreTable read_score_table(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Helpers shared by writers
// ---------------------------------------------------------------------------

/// Shortest round-trippable decimal form of a double.
std::string format_double(double v);
std::string read_text_file(const std::filesystem::path& path);
/// Creates parent directories as needed. Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);
/// create_directories that throws IoError instead of filesystem_error.
void ensure_directory(const std::filesystem::path& dir);

} // namespace blockge
