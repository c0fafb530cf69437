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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace blockge {

/// H x W x C raster of finite intensities, row-major and channel-interleaved.
/// Holds a predicted frame, its ground truth, or a flow field.
class FrameImage {
public:
    FrameImage() = default;
    /// Zero-filled frame.
    FrameImage(std::size_t height, std::size_t width, std::size_t channels);
    /// Throws InvalidArgument on bad shape and NonFiniteInput on NaN/Inf.
    FrameImage(std::size_t height, std::size_t width, std::size_t channels, std::vector<float> values);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t channels() const noexcept { return channels_; }
    std::span<const float> values() const noexcept { return values_; }
    std::span<float> values() noexcept { return values_; }

    float at(std::size_t row, std::size_t col, std::size_t ch) const noexcept {
        return values_[(row * width_ + col) * channels_ + ch];
    }
    float& at(std::size_t row, std::size_t col, std::size_t ch) noexcept {
        return values_[(row * width_ + col) * channels_ + ch];
    }

    bool operator==(const FrameImage&) const = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::size_t channels_ = 0;
    std::vector<float> values_;
};

/// H x W raster of non-negative per-pixel generation errors.
class GEMap {
public:
    GEMap() = default;
    GEMap(std::size_t height, std::size_t width);
    /// Throws InvalidArgument on bad shape, NonFiniteInput on NaN/Inf and
    /// NegativeValue on values below zero.
    GEMap(std::size_t height, std::size_t width, std::vector<float> values);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const float> values() const noexcept { return values_; }
    /// Mutable access; callers must keep values finite and non-negative.
    std::span<float> values() noexcept { return values_; }

    float at(std::size_t row, std::size_t col) const noexcept { return values_[row * width_ + col]; }
    float& at(std::size_t row, std::size_t col) noexcept { return values_[row * width_ + col]; }

    bool operator==(const GEMap&) const = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<float> values_;
};

/// Exponent applied to |pred - gt| before summing over channels.
enum class ErrorExponent : int { Absolute = 1, Squared = 2 };

ErrorExponent exponent_from_int(int p);

/// E[i,j] = sum_c |pred[i,j,c] - gt[i,j,c]|^p, accumulated in double.
/// Throws DimensionMismatch when shapes differ.
GEMap compute_ge_map(const FrameImage& pred, const FrameImage& gt, ErrorExponent exponent = ErrorExponent::Squared);

} // namespace blockge
