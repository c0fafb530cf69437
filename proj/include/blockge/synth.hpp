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

#include "blockge/dataset_io.hpp"
#include "blockge/ge_map.hpp"
#include "blockge/series.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace blockge {

/// Synthetic GE-map datasets with planted anomalies.
///
/// Every frame is a background of uniform noise in [0, noise) plus
/// `target_count` axis-aligned normal blobs (side `normal_blob`, added
/// intensity `normal_intensity`). Frames inside an anomaly window also get
/// one blob of side `size` and added intensity `intensity`. Blobs never
/// overlap; positions come from rejection sampling.
///
/// Random stream (recorded as kSynthAlgorithm in the manifest): segment s
/// draws from mt19937_64 seeded with splitmix64(seed + s + 1). Integers in
/// [0, n) take the first draw x with x < 2^64 - (2^64 mod n), reduced mod n.
/// Reals take (x >> 11) * 2^-53. Per frame the draw order is: noise for
/// each pixel in row-major order (skipped when noise == 0), then the
/// anomaly blobs, then the normal blobs; each placement attempt draws the
/// row before the column.
namespace synth {

inline constexpr const char* kAlgorithm = "mt19937_64/splitmix64-v1";

struct AnomalyWindow {
    std::size_t start = 0;  // first frame, inclusive
    std::size_t end = 0;    // one past the last frame
    std::size_t size = 12;
    double intensity = 1.0;

    bool operator==(const AnomalyWindow&) const = default;
};

struct SegmentConfig {
    std::string id;  // empty: "segNN"
    std::size_t length = 0;
    std::size_t target_count = 0;
    std::string split;
    std::vector<AnomalyWindow> anomalies;

    bool operator==(const SegmentConfig&) const = default;
};

struct Config {
    std::string name = "synth";
    std::size_t height = 64;
    std::size_t width = 64;
    std::size_t normal_blob = 8;
    double normal_intensity = 0.2;
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::size_t max_retries = 1000;
    std::vector<SegmentConfig> segments;

    bool operator==(const Config&) const = default;

    /// Throws InvalidArgument when sizes do not fit the frame, windows leave
    /// their segment, intensities are negative or an anomaly is not
    /// brighter than the normal blobs.
    void validate() const;
    std::string segment_id(std::size_t index) const;
};

Config parse_config(const std::string& json_text);
Config load_config(const std::filesystem::path& path);
std::string config_to_string(const Config& config);

struct Dataset {
    Config config;
    std::vector<Segment> layout;
    std::vector<GEMap> maps;  // one per frame, in layout order
    LabelSeries labels;
    std::vector<double> target_counts;  // one per segment
};

/// Deterministic: identical configs give bit-identical datasets. Throws
/// PlacementFailure when a blob cannot be placed within max_retries.
Dataset generate(const Config& config);

/// Writes one GEM1 file per frame under dir/ge/<segment>/ and dir/manifest.json.
/// Returns the manifest as written.
DatasetManifest write_dataset(const Dataset& dataset, const std::filesystem::path& dir);

std::uint64_t splitmix64(std::uint64_t x) noexcept;

} // namespace synth
} // namespace blockge
