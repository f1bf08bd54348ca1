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

#include "cosal/depth_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cosal/error.hpp"

namespace cosal {

DepthConfidence depth_confidence(const cv::Mat1d& depth, int levels, CvMode mode) {
    if(depth.empty())
        throw Error("depth confidence of an empty raster");
    if(levels<2)
        throw Error("depth confidence needs at least 2 histogram levels");
    DepthConfidence conf;
    conf.levels = levels;
    const double n = (double)depth.total();
    std::vector<double> hist((size_t)levels,0.0);
    double sum = 0.0;
    for(int y=0; y<depth.rows; ++y)
        for(int x=0; x<depth.cols; ++x) {
            const double v = depth(y,x);
            sum += v;
            const int bin = std::clamp((int)std::floor(v*levels),0,levels-1);
            hist[bin] += 1.0;
        }
    conf.m_d = sum/n;
    double var = 0.0;
    for(int y=0; y<depth.rows; ++y)
        for(int x=0; x<depth.cols; ++x) {
            const double d = depth(y,x)-conf.m_d;
            var += d*d;
        }
    conf.sigma_d = std::sqrt(var/n);
    for(double c : hist)
        if(c>0.0) {
            const double p = c/n;
            conf.entropy_h -= p*std::log(p);
        }
    if(!(conf.sigma_d>0.0)) {
        conf.cv = 0.0;
        conf.lambda_d = 0.0;
        return conf;
    }
    if(mode==CvMode::mean_over_std)
        conf.cv = conf.m_d/conf.sigma_d;
    else
        conf.cv = (conf.m_d>0.0)?conf.sigma_d/conf.m_d:0.0;
    conf.lambda_d = std::exp((1.0-conf.m_d)*conf.cv*conf.entropy_h)-1.0;
    return conf;
}

DepthConfidence disabled_depth_confidence(int levels) {
    DepthConfidence conf;
    conf.levels = levels;
    return conf;
}

} // namespace cosal
