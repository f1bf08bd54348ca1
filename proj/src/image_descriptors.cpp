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

#include "cosal/image_descriptors.hpp"

#include <algorithm>
#include <cmath>

#include "cosal/error.hpp"

namespace cosal {

std::vector<double> rgb_histogram(const cv::Mat3b& rgb) {
    std::vector<double> hist(kColorHistBins,0.0);
    for(int y=0; y<rgb.rows; ++y)
        for(int x=0; x<rgb.cols; ++x) {
            const cv::Vec3b p = rgb(y,x);
            hist[(p[0]>>5)*64+(p[1]>>5)*8+(p[2]>>5)] += 1.0;
        }
    const double n = (double)rgb.total();
    if(n>0)
        for(double& h : hist)
            h /= n;
    return hist;
}

std::vector<double> value_histogram(const cv::Mat1d& raster, int bins) {
    std::vector<double> hist((size_t)bins,0.0);
    for(int y=0; y<raster.rows; ++y)
        for(int x=0; x<raster.cols; ++x)
            hist[std::clamp((int)std::floor(raster(y,x)*bins),0,bins-1)] += 1.0;
    const double n = (double)raster.total();
    if(n>0)
        for(double& h : hist)
            h /= n;
    return hist;
}

ImageDescriptor describe_image(const RgbdImage& image, const SaliencyMap& intra, const DepthConfidence& conf,
                               const TextonCodebook& codebook, const std::optional<std::vector<float>>& semantic) {
    if(intra.raster.size()!=image.rgb.size())
        throw Error("intra map raster does not match the image size");
    ImageDescriptor d;
    d.h_c = rgb_histogram(image.rgb);
    d.t = texton_histogram(image.rgb,codebook);
    if(semantic)
        d.s_vec = std::vector<double>(semantic->begin(),semantic->end());
    d.g = gist_descriptor(image.rgb);
    d.h_d = value_histogram(image.depth);
    d.h_s = value_histogram(intra.raster);
    d.conf = conf;
    return d;
}

double chi_square(std::span<const double> h1, std::span<const double> h2) {
    if(h1.size()!=h2.size())
        throw Error("chi-square distance of histograms with different lengths ("+
                    std::to_string(h1.size())+" vs "+std::to_string(h2.size())+")");
    double acc = 0.0;
    for(size_t k=0; k<h1.size(); ++k) {
        const double diff = h1[k]-h2[k];
        acc += diff*diff/(h1[k]+h2[k]+1e-12);
    }
    return 0.5*acc;
}

double cosine_distance(std::span<const double> v1, std::span<const double> v2) {
    if(v1.size()!=v2.size())
        throw Error("cosine distance of vectors with different lengths ("+
                    std::to_string(v1.size())+" vs "+std::to_string(v2.size())+")");
    double dot = 0.0, n1 = 0.0, n2 = 0.0;
    for(size_t k=0; k<v1.size(); ++k) {
        dot += v1[k]*v2[k];
        n1 += v1[k]*v1[k];
        n2 += v2[k]*v2[k];
    }
    if(!(n1>0.0) || !(n2>0.0))
        return 1.0;
    return 1.0-dot/(std::sqrt(n1)*std::sqrt(n2));
}

PairSimilarity pair_similarity(const ImageDescriptor& a, const ImageDescriptor& b, double t2) {
    PairSimilarity p;
    p.d_c1 = chi_square(a.h_c,b.h_c);
    p.d_c2 = chi_square(a.t,b.t);
    p.d_c4 = cosine_distance(a.g,b.g);
    p.has_semantic = a.s_vec && b.s_vec;
    double color = p.d_c1+p.d_c2+p.d_c4;
    int ncolor = 3;
    if(p.has_semantic) {
        p.d_c3 = cosine_distance(*a.s_vec,*b.s_vec);
        color += p.d_c3;
        ncolor = 4;
    }
    p.d_d = chi_square(a.h_d,b.h_d);
    p.d_s = chi_square(a.h_s,b.h_s);
    const double lambda_min = std::min(a.conf.lambda_d,b.conf.lambda_d);
    p.alpha_d = (lambda_min<=t2)?lambda_min:1.0/3.0;
    p.alpha_c = p.alpha_s = 0.5*(1.0-p.alpha_d);
    p.phi = 1.0-(p.alpha_c*color/ncolor+p.alpha_d*p.d_d+p.alpha_s*p.d_s);
    return p;
}

} // namespace cosal
