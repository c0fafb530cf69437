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

#include "blockge/temporal.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace blockge {

namespace {

// Sorted sliding window; insert/erase by binary search.
class SortedWindow {
public:
    void insert(double v) { items_.insert(std::upper_bound(items_.begin(), items_.end(), v), v); }
    void erase(double v) { items_.erase(std::lower_bound(items_.begin(), items_.end(), v)); }

    double median() const {
        const std::size_t n = items_.size();
        if(n % 2 == 1)
            return items_[n / 2];
        return (items_[n / 2 - 1] + items_[n / 2]) / 2.0;
    }

private:
    std::vector<double> items_;
};

void filter_segment(std::span<const double> in, std::span<double> out, std::size_t radius) {
    const std::size_t n = in.size();
    if(n == 0)
        return;
    SortedWindow window;
    // window for t = 0 is [0, min(n-1, radius)]
    const std::size_t first_hi = std::min(n - 1, radius);
    for(std::size_t i = 0; i <= first_hi; ++i)
        window.insert(in[i]);
    for(std::size_t t = 0; t < n; ++t) {
        out[t] = window.median();
        // slide to t + 1: add t+1+radius, drop t-radius
        if(t + 1 + radius < n)
            window.insert(in[t + 1 + radius]);
        if(t >= radius)
            window.erase(in[t - radius]);
    }
}

} // namespace

ScoreSeries median_filter(const ScoreSeries& series, std::size_t radius) {
    if(radius == 0)
        return series;
    std::vector<double> out(series.size());
    for(std::size_t s = 0; s < series.segments().size(); ++s) {
        const auto& seg = series.segments()[s];
        filter_segment(series.segment_values(s), std::span<double>(out).subspan(seg.start, seg.length), radius);
    }
    return series.with_values(std::move(out));
}

} // namespace blockge
