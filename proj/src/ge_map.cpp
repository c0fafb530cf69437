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

#include "blockge/ge_map.hpp"

#include "blockge/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace blockge {

namespace {

void check_shape(std::size_t h, std::size_t w, std::size_t c, std::size_t n) {
    if(h == 0 || w == 0 || c == 0)
        throw Error(ErrorCode::InvalidArgument, "raster dimensions must be >= 1");
    if(n != h * w * c)
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(h * w * c) + " values, got " + std::to_string(n));
}

void check_finite(std::span<const float> v) {
    auto it = std::find_if(v.begin(), v.end(), [](float x) { return !std::isfinite(x); });
    if(it != v.end())
        throw Error(ErrorCode::NonFiniteInput, "non-finite value at index " + std::to_string(it - v.begin()));
}

} // namespace

FrameImage::FrameImage(std::size_t height, std::size_t width, std::size_t channels)
    : FrameImage(height, width, channels, std::vector<float>(height * width * channels, 0.0f)) {}

FrameImage::FrameImage(std::size_t height, std::size_t width, std::size_t channels, std::vector<float> values)
    : height_(height), width_(width), channels_(channels), values_(std::move(values)) {
    check_shape(height_, width_, channels_, values_.size());
    check_finite(values_);
}

GEMap::GEMap(std::size_t height, std::size_t width)
    : GEMap(height, width, std::vector<float>(height * width, 0.0f)) {}

GEMap::GEMap(std::size_t height, std::size_t width, std::vector<float> values)
    : height_(height), width_(width), values_(std::move(values)) {
    check_shape(height_, width_, 1, values_.size());
    check_finite(values_);
    auto neg = std::find_if(values_.begin(), values_.end(), [](float x) { return x < 0.0f; });
    if(neg != values_.end())
        throw Error(ErrorCode::NegativeValue, "negative GE at index " + std::to_string(neg - values_.begin()));
}

ErrorExponent exponent_from_int(int p) {
    if(p == 1)
        return ErrorExponent::Absolute;
    if(p == 2)
        return ErrorExponent::Squared;
    throw Error(ErrorCode::InvalidArgument, "error exponent must be 1 or 2, got " + std::to_string(p));
}

GEMap compute_ge_map(const FrameImage& pred, const FrameImage& gt, ErrorExponent exponent) {
    if(pred.height() != gt.height() || pred.width() != gt.width() || pred.channels() != gt.channels())
        throw Error(ErrorCode::DimensionMismatch,
                    "prediction is " + std::to_string(pred.height()) + "x" + std::to_string(pred.width()) + "x" +
                        std::to_string(pred.channels()) + ", ground truth is " + std::to_string(gt.height()) + "x" +
                        std::to_string(gt.width()) + "x" + std::to_string(gt.channels()));
    if(pred.values().empty())
        throw Error(ErrorCode::InvalidArgument, "empty frame");

    const std::size_t pixels = pred.height() * pred.width();
    const std::size_t channels = pred.channels();
    const auto a = pred.values();
    const auto b = gt.values();
    std::vector<float> out(pixels);
    for(std::size_t px = 0; px < pixels; ++px) {
        double acc = 0.0;
        for(std::size_t c = 0; c < channels; ++c) {
            // |a-b| is computed in double so that swapping the operands is exact.
            const double d = std::fabs(static_cast<double>(a[px * channels + c]) - static_cast<double>(b[px * channels + c]));
            acc += exponent == ErrorExponent::Squared ? d * d : d;
        }
        out[px] = static_cast<float>(acc);
        // keep "zero iff equal" when a tiny squared difference underflows float
        if(acc > 0.0 && out[px] == 0.0f)
            out[px] = std::numeric_limits<float>::denorm_min();
    }
    return GEMap(pred.height(), pred.width(), std::move(out));
}

} // namespace blockge
