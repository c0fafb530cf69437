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

#include "blockge/ge_map.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace blockge {

/// Height and width of the sliding block, in pixels.
struct BlockSpec {
    std::size_t h = 30;
    std::size_t w = 30;

    bool operator==(const BlockSpec&) const = default;
};

/// Summed-area table over a GE map: (H+1) x (W+1) prefix sums in double,
/// entry (i, j) holding the sum over rows [0, i) and cols [0, j).
class IntegralTable {
public:
    IntegralTable() = default;
    explicit IntegralTable(const GEMap& map);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double at(std::size_t i, std::size_t j) const noexcept { return sums_[i * cols_ + j]; }
    std::span<const double> data() const noexcept { return sums_; }

    /// Sum over rows [r0, r1) x cols [c0, c1); bounds are not checked.
    double rect_sum(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) const noexcept {
        return at(r1, c1) - at(r0, c1) - at(r1, c0) + at(r0, c0);
    }

    /// Source map height / width.
    std::size_t map_height() const noexcept { return rows_ == 0 ? 0 : rows_ - 1; }
    std::size_t map_width() const noexcept { return cols_ == 0 ? 0 : cols_ - 1; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> sums_;
};

/// Block means at every fully-contained, stride-1 anchor.
struct BlockMeanGrid {
    std::size_t anchors_h = 0;
    std::size_t anchors_w = 0;
    std::vector<double> values;

    double at(std::size_t r, std::size_t c) const noexcept { return values[r * anchors_w + c]; }
};

IntegralTable integral_image(const GEMap& map);

/// Mean of each h x w window whose top-left corner is (r, c), for
/// r in [0, H-h] and c in [0, W-w]. Throws BlockTooLarge if the block
/// does not fit, InvalidArgument for a zero-sized block.
BlockMeanGrid block_means(const GEMap& map, BlockSpec block);
BlockMeanGrid block_means(const IntegralTable& table, BlockSpec block);

/// Maximum block mean over the frame. O(H*W) regardless of block size.
double block_level_ge(const GEMap& map, BlockSpec block);
double block_level_ge(const IntegralTable& table, BlockSpec block);

/// Arithmetic mean over all pixels.
double frame_level_ge(const GEMap& map);
double frame_level_ge(const IntegralTable& table);

/// Throws BlockTooLarge / InvalidArgument when `block` cannot slide over a
/// height x width frame.
void check_block_fits(BlockSpec block, std::size_t height, std::size_t width);

} // namespace blockge
