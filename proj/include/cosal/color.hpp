// This file is part of the rgbd-cosal project.
//
// Copyright 2026 The rgbd-cosal Authors
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

#include <array>
#include <cstdint>

#include <opencv2/core.hpp>

namespace cosal {

    using Lab = std::array<double,3>;

    /// sRGB (8-bit, D65 white) to CIE L*a*b*; L in [0,100]
    Lab srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b);

    /// per-pixel conversion of an RGB-ordered raster to a 3-channel double L*a*b* raster
    cv::Mat3d rgb_image_to_lab(const cv::Mat3b& rgb);

    /// L*a*b* values are rescaled by this factor wherever a color distance is mixed with
    /// normalized depth differences or divided by sigma^2 in an exponential affinity
    inline constexpr double kLabDistanceScale = 0.01;

    /// scaled Euclidean distance between two L*a*b* colors
    double color_distance(const Lab& a, const Lab& b);

} // namespace cosal
