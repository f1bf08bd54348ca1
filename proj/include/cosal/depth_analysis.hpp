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

#include "cosal/config.hpp"

namespace cosal {

    /// reliability of a depth map: lambda_d = exp((1 - m_d) * cv * H) - 1, with lambda_d = 0 when sigma_d = 0
    struct DepthConfidence {
        double lambda_d = 0.0;
        double m_d = 0.0;
        double sigma_d = 0.0;
        double cv = 0.0;
        double entropy_h = 0.0;
        int levels = 256;
    };

    /// moments use the population standard deviation; entropy uses the natural log over an
    /// L-level uniform histogram of [0,1] (value v falls in level min(floor(v*L), L-1))
    DepthConfidence depth_confidence(const cv::Mat1d& depth, int levels = 256, CvMode mode = CvMode::mean_over_std);

    /// confidence with every field zeroed except levels; what --no-depth substitutes
    DepthConfidence disabled_depth_confidence(int levels = 256);

} // namespace cosal
