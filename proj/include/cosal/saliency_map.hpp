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

#include <span>
#include <string_view>
#include <vector>

#include <opencv2/core.hpp>

namespace cosal {

    enum class MapOrigin { intra, inter, intra_opt, inter_opt, fused };

    std::string_view to_string(MapOrigin origin);

    /// per-superpixel scores in [0,1] plus the per-pixel rendering over a label raster
    struct SaliencyMap {
        std::vector<double> scores;
        cv::Mat1d raster;
        MapOrigin origin = MapOrigin::intra;
    };

    /// (x-min)/(max-min); all zeros when max == min (including the empty case)
    std::vector<double> min_max_normalize(std::span<const double> values);

    /// builds a map whose raster pixel equals the score of the pixel's label
    SaliencyMap make_saliency_map(std::vector<double> scores, const cv::Mat1i& labels, MapOrigin origin);

    /// 8-bit rendering, value = round(score*255) with halves rounded up
    cv::Mat1b quantize(const cv::Mat1d& raster);

} // namespace cosal
