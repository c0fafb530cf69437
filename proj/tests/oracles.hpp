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

// Brute-force reference implementations. Deliberately naive: each one is
// the textbook definition with no incremental state, so the production
// code can be checked against it.

#pragma once

#include "blockge/ge_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace oracle {

/// Per-pixel triple loop: sum over channels of |pred - gt|^p.
inline std::vector<double> ge_map(const blockge::FrameImage& pred, const blockge::FrameImage& gt, int p) {
    std::vector<double> out(pred.height() * pred.width(), 0.0);
    for(std::size_t r = 0; r < pred.height(); ++r)
        for(std::size_t c = 0; c < pred.width(); ++c)
            for(std::size_t ch = 0; ch < pred.channels(); ++ch) {
                const double d = std::abs(double(pred.at(r, c, ch)) - double(gt.at(r, c, ch)));
                out[r * pred.width() + c] += p == 1 ? d : d * d;
            }
    return out;
}

/// Double loop over a rectangle [r0, r1) x [c0, c1).
inline double rect_sum(const blockge::GEMap& m, std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) {
    double s = 0.0;
    for(std::size_t r = r0; r < r1; ++r)
        for(std::size_t c = c0; c < c1; ++c)
            s += m.at(r, c);
    return s;
}

/// Quadruple loop: mean of every fully contained h x w window, row-major anchors.
inline std::vector<double> block_means(const blockge::GEMap& m, std::size_t h, std::size_t w) {
    std::vector<double> out;
    for(std::size_t r = 0; r + h <= m.height(); ++r)
        for(std::size_t c = 0; c + w <= m.width(); ++c)
            out.push_back(rect_sum(m, r, c, r + h, c + w) / double(h * w));
    return out;
}

inline double block_max(const blockge::GEMap& m, std::size_t h, std::size_t w) {
    const auto v = block_means(m, h, w);
    return *std::max_element(v.begin(), v.end());
}

inline double pixel_mean(const blockge::GEMap& m) {
    return rect_sum(m, 0, 0, m.height(), m.width()) / double(m.size());
}

inline double pixel_max(const blockge::GEMap& m) {
    return *std::max_element(m.values().begin(), m.values().end());
}

/// Sort every window independently; window shrinks at the ends.
inline std::vector<double> median(std::span<const double> x, std::size_t radius) {
    const std::size_t n = x.size();
    std::vector<double> out(n);
    for(std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= radius ? i - radius : 0;
        const std::size_t hi = std::min(n - 1, i + radius);
        std::vector<double> win(x.begin() + lo, x.begin() + hi + 1);
        std::sort(win.begin(), win.end());
        const std::size_t k = win.size();
        out[i] = k % 2 ? win[k / 2] : (win[k / 2 - 1] + win[k / 2]) / 2.0;
    }
    return out;
}

/// O(n^2) pairwise definition: P(pos > neg) + 0.5 P(pos == neg).
inline double pairwise_auc(std::span<const double> s, std::span<const std::uint8_t> y) {
    double wins = 0.0, pairs = 0.0;
    for(std::size_t i = 0; i < s.size(); ++i) {
        if(y[i] != 1)
            continue;
        for(std::size_t j = 0; j < s.size(); ++j) {
            if(y[j] != 0)
                continue;
            pairs += 1.0;
            wins += s[i] > s[j] ? 1.0 : s[i] == s[j] ? 0.5 : 0.0;
        }
    }
    return wins / pairs;
}

/// Mean of the entries whose label equals `label`.
inline double masked_mean(std::span<const double> x, std::span<const std::uint8_t> y, std::uint8_t label) {
    double s = 0.0;
    std::size_t n = 0;
    for(std::size_t i = 0; i < x.size(); ++i)
        if(y[i] == label) {
            s += x[i];
            ++n;
        }
    return s / double(n);
}

/// Textbook two-pass Pearson r.
inline double pearson(std::span<const double> x, std::span<const double> y) {
    const double n = double(x.size());
    double mx = 0, my = 0;
    for(std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for(std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

/// Min-max map over a span; constant input maps to zeros.
inline std::vector<double> minmax(std::span<const double> x) {
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    std::vector<double> out(x.size(), 0.0);
    if(*hi > *lo)
        for(std::size_t i = 0; i < x.size(); ++i)
            out[i] = (x[i] - *lo) / (*hi - *lo);
    return out;
}

// ---- random inputs --------------------------------------------------------

inline blockge::GEMap random_map(std::mt19937_64& rng, std::size_t h, std::size_t w, float scale = 1.0f) {
    std::uniform_real_distribution<float> u(0.0f, scale);
    std::vector<float> v(h * w);
    for(auto& x : v)
        x = u(rng);
    return blockge::GEMap(h, w, std::move(v));
}

inline blockge::FrameImage random_frame(std::mt19937_64& rng, std::size_t h, std::size_t w, std::size_t c) {
    std::uniform_real_distribution<float> u(0.0f, 1.0f);
    std::vector<float> v(h * w * c);
    for(auto& x : v)
        x = u(rng);
    return blockge::FrameImage(h, w, c, std::move(v));
}

} // namespace oracle
