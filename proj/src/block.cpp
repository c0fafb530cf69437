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

#include "blockge/block.hpp"

#include "blockge/error.hpp"

#include <algorithm>
#include <string>

namespace blockge {

IntegralTable::IntegralTable(const GEMap& map)
    : rows_(map.height() + 1), cols_(map.width() + 1), sums_(rows_ * cols_, 0.0) {
    if(map.empty())
        throw Error(ErrorCode::InvalidArgument, "cannot integrate an empty GE map");
    const auto src = map.values();
    const std::size_t w = map.width();
    for(std::size_t i = 0; i < map.height(); ++i) {
        double row_acc = 0.0;
        const double* above = &sums_[i * cols_];
        double* out = &sums_[(i + 1) * cols_];
        const float* in = &src[i * w];
        for(std::size_t j = 0; j < w; ++j) {
            row_acc += static_cast<double>(in[j]);
            out[j + 1] = above[j + 1] + row_acc;
        }
    }
}

IntegralTable integral_image(const GEMap& map) {
    return IntegralTable(map);
}

void check_block_fits(BlockSpec block, std::size_t height, std::size_t width) {
    if(block.h == 0 || block.w == 0)
        throw Error(ErrorCode::InvalidArgument, "block dimensions must be >= 1");
    if(block.h > height || block.w > width)
        throw Error(ErrorCode::BlockTooLarge, "block " + std::to_string(block.h) + "x" + std::to_string(block.w) +
                                                  " does not fit a " + std::to_string(height) + "x" +
                                                  std::to_string(width) + " frame");
}

BlockMeanGrid block_means(const IntegralTable& table, BlockSpec block) {
    check_block_fits(block, table.map_height(), table.map_width());
    BlockMeanGrid grid;
    grid.anchors_h = table.map_height() - block.h + 1;
    grid.anchors_w = table.map_width() - block.w + 1;
    grid.values.resize(grid.anchors_h * grid.anchors_w);
    const double inv_area = 1.0 / static_cast<double>(block.h * block.w);
    for(std::size_t r = 0; r < grid.anchors_h; ++r) {
        for(std::size_t c = 0; c < grid.anchors_w; ++c) {
            // rounding in the table subtraction can dip a hair below zero
            const double s = table.rect_sum(r, c, r + block.h, c + block.w);
            grid.values[r * grid.anchors_w + c] = std::max(0.0, s) * inv_area;
        }
    }
    return grid;
}

BlockMeanGrid block_means(const GEMap& map, BlockSpec block) {
    check_block_fits(block, map.height(), map.width());
    return block_means(IntegralTable(map), block);
}

double block_level_ge(const IntegralTable& table, BlockSpec block) {
    check_block_fits(block, table.map_height(), table.map_width());
    const std::size_t ah = table.map_height() - block.h + 1;
    const std::size_t aw = table.map_width() - block.w + 1;
    const std::size_t cols = table.cols();
    const auto sums = table.data();
    double best = 0.0;
    for(std::size_t r = 0; r < ah; ++r) {
        const double* top = &sums[r * cols];
        const double* bottom = &sums[(r + block.h) * cols];
        for(std::size_t c = 0; c < aw; ++c) {
            const double s = bottom[c + block.w] - top[c + block.w] - bottom[c] + top[c];
            best = std::max(best, s);
        }
    }
    return best / static_cast<double>(block.h * block.w);
}

double block_level_ge(const GEMap& map, BlockSpec block) {
    check_block_fits(block, map.height(), map.width());
    return block_level_ge(IntegralTable(map), block);
}

double frame_level_ge(const IntegralTable& table) {
    const double total = table.at(table.rows() - 1, table.cols() - 1);
    return total / static_cast<double>(table.map_height() * table.map_width());
}

double frame_level_ge(const GEMap& map) {
    if(map.empty())
        throw Error(ErrorCode::InvalidArgument, "empty GE map");
    double acc = 0.0;
    for(float v : map.values())
        acc += static_cast<double>(v);
    return acc / static_cast<double>(map.size());
}

} // namespace blockge
