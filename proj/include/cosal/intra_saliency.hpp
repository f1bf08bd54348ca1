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

#include <opencv2/core.hpp>

#include "cosal/dataset_io.hpp"
#include "cosal/depth_analysis.hpp"
#include "cosal/saliency_map.hpp"
#include "cosal/superpixel.hpp"

namespace cosal {

    /// superpixel means of an external 8-bit saliency raster, divided by 255 and min-max normalized
    SaliencyMap intra_from_file(const SuperpixelMap& map, const cv::Mat1b& raster);

    /// raw (pre-normalization) contrast of every superpixel against all others:
    /// sum_n count_n * (color_distance + lambda_d*|d_m - d_n|) * exp(-|p_m - p_n|^2 / (2*(0.25*diag)^2))
    std::vector<double> global_contrast(const SuperpixelMap& map, const DepthConfidence& conf, cv::Size image_size);

    /// built-in depth-aware global contrast baseline, normalized, weighted by a center prior, renormalized
    SaliencyMap intra_baseline(const RgbdImage& image, const SuperpixelMap& map, const DepthConfidence& conf);

} // namespace cosal
