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

#include "cosal/intra_saliency.hpp"

#include <cmath>

#include "cosal/error.hpp"

namespace cosal {

SaliencyMap intra_from_file(const SuperpixelMap& map, const cv::Mat1b& raster) {
    if(raster.size()!=map.labels.size())
        throw Error("intra raster is "+std::to_string(raster.cols)+"x"+std::to_string(raster.rows)+
                    ", image is "+std::to_string(map.labels.cols)+"x"+std::to_string(map.labels.rows));
    std::vector<double> sums((size_t)map.size(),0.0);
    for(int y=0; y<raster.rows; ++y)
        for(int x=0; x<raster.cols; ++x)
            sums[map.labels(y,x)] += raster(y,x);
    for(int m=0; m<map.size(); ++m)
        sums[m] /= 255.0*map.stats[m].pixel_count;
    return make_saliency_map(min_max_normalize(sums),map.labels,MapOrigin::intra);
}

std::vector<double> global_contrast(const SuperpixelMap& map, const DepthConfidence& conf, cv::Size image_size) {
    const double diag = std::hypot((double)image_size.width,(double)image_size.height);
    const double spatial_sigma = 0.25*diag;
    const double denom = 2.0*spatial_sigma*spatial_sigma;
    const int n = map.size();
    std::vector<double> contrast((size_t)n,0.0);
    for(int m=0; m<n; ++m) {
        const SuperpixelStats& sm = map.stats[m];
        double acc = 0.0;
        for(int k=0; k<n; ++k) {
            if(k==m)
                continue;
            const SuperpixelStats& sk = map.stats[k];
            const double feature = color_distance(sm.mean_lab,sk.mean_lab)+conf.lambda_d*std::abs(sm.mean_depth-sk.mean_depth);
            const cv::Point2d dp = sm.centroid-sk.centroid;
            acc += sk.pixel_count*feature*std::exp(-dp.dot(dp)/denom);
        }
        contrast[m] = acc;
    }
    return contrast;
}

SaliencyMap intra_baseline(const RgbdImage& image, const SuperpixelMap& map, const DepthConfidence& conf) {
    const cv::Size size = image.rgb.size();
    std::vector<double> scores = min_max_normalize(global_contrast(map,conf,size));
    const double diag = std::hypot((double)size.width,(double)size.height);
    const double prior_sigma = 0.5*diag;
    const cv::Point2d center((size.width-1)/2.0,(size.height-1)/2.0);
    for(int m=0; m<map.size(); ++m) {
        const cv::Point2d dp = map.stats[m].centroid-center;
        scores[m] *= std::exp(-dp.dot(dp)/(2.0*prior_sigma*prior_sigma));
    }
    return make_saliency_map(min_max_normalize(scores),map.labels,MapOrigin::intra);
}

} // namespace cosal
