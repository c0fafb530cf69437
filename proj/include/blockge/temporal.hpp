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

#include "blockge/series.hpp"

#include <cstddef>

namespace blockge {

inline constexpr std::size_t kDefaultMedianRadius = 15;

/// Running median over [t - radius, t + radius], clipped to the frame's own
/// segment. Windows shrink at segment edges; an even-sized window yields the
/// mean of its two central order statistics.
ScoreSeries median_filter(const ScoreSeries& series, std::size_t radius = kDefaultMedianRadius);

} // namespace blockge
