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

#include "cosal/saliency_map.hpp"

#include <algorithm>
#include <cmath>

#include "cosal/error.hpp"

namespace cosal {

std::string_view to_string(MapOrigin origin) {
    switch(origin) {
        case MapOrigin::intra: return "intra";
        case MapOrigin::inter: return "inter";
        case MapOrigin::intra_opt: return "intra_opt";
        case MapOrigin::inter_opt: return "inter_opt";
        case MapOrigin::fused: return "cosal";
    }
    return "unknown";
}

std::vector<double> min_max_normalize(std::span<const double> values) {
    std::vector<double> out(values.size(),0.0);
    if(values.empty())
        return out;
    const auto [lo,hi] = std::minmax_element(values.begin(),values.end());
    const double range = *hi-*lo;
    if(!(range>0.0))
        return out;
    for(size_t i=0; i<values.size(); ++i)
        out[i] = (values[i]-*lo)/range;
    return out;
}

SaliencyMap make_saliency_map(std::vector<double> scores, const cv::Mat1i& labels, MapOrigin origin) {
    SaliencyMap map;
    map.raster.create(labels.size());
    for(int y=0; y<labels.rows; ++y) {
        const int* lbl = labels.ptr<int>(y);
        double* dst = map.raster.ptr<double>(y);
        for(int x=0; x<labels.cols; ++x) {
            if(lbl[x]<0 || lbl[x]>=(int)scores.size())
                throw Error("label raster references superpixel "+std::to_string(lbl[x])+" outside the score vector");
            dst[x] = scores[lbl[x]];
        }
    }
    map.scores = std::move(scores);
    map.origin = origin;
    return map;
}

cv::Mat1b quantize(const cv::Mat1d& raster) {
    cv::Mat1b out(raster.size());
    for(int y=0; y<raster.rows; ++y)
        for(int x=0; x<raster.cols; ++x) {
            const double v = std::clamp(raster(y,x),0.0,1.0);
            out(y,x) = (uchar)std::floor(v*255.0+0.5);
        }
    return out;
}

} // namespace cosal
