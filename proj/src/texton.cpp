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

#include <array>
#include <cmath>

#include <opencv2/imgproc.hpp>

#include "cosal/error.hpp"
#include "cosal/kmeans.hpp"

namespace cosal {

namespace {

    struct GaussianKernels {
        cv::Mat1d g, dg, ddg;
    };

    GaussianKernels make_kernels(double sigma) {
        const int r = (int)std::ceil(3.0*sigma);
        GaussianKernels k{cv::Mat1d(2*r+1,1),cv::Mat1d(2*r+1,1),cv::Mat1d(2*r+1,1)};
        double sum = 0.0;
        for(int i=-r; i<=r; ++i)
            sum += std::exp(-i*i/(2*sigma*sigma));
        for(int i=-r; i<=r; ++i) {
            const double g = std::exp(-i*i/(2*sigma*sigma))/sum;
            k.g(i+r) = g;
            k.dg(i+r) = -i/(sigma*sigma)*g;
            k.ddg(i+r) = (i*i/(sigma*sigma)-1.0)/(sigma*sigma)*g;
        }
        return k;
    }

    cv::Mat1d luminance(const cv::Mat3b& rgb) {
        cv::Mat1d out(rgb.size());
        for(int y=0; y<rgb.rows; ++y)
            for(int x=0; x<rgb.cols; ++x) {
                const cv::Vec3b p = rgb(y,x);
                out(y,x) = (0.299*p[0]+0.587*p[1]+0.114*p[2])/255.0;
            }
        return out;
    }

} // namespace

cv::Mat1d texton_responses(const cv::Mat3b& rgb) {
    const cv::Mat1d gray = luminance(rgb);
    std::vector<cv::Mat1d> bank;
    bank.reserve(kTextonFilters);
    const std::array<double,2> scales{1.0,2.0};
    for(double s : scales) {
        const GaussianKernels k = make_kernels(s);
        cv::Mat1d r;
        cv::sepFilter2D(gray,r,CV_64F,k.g,k.g,cv::Point(-1,-1),0,cv::BORDER_REFLECT101);
        bank.push_back(r);
    }
    for(double s : scales) {
        const GaussianKernels k = make_kernels(s);
        cv::Mat1d gx, gy;
        cv::sepFilter2D(gray,gx,CV_64F,k.dg,k.g,cv::Point(-1,-1),0,cv::BORDER_REFLECT101);
        cv::sepFilter2D(gray,gy,CV_64F,k.g,k.dg,cv::Point(-1,-1),0,cv::BORDER_REFLECT101);
        for(int o=0; o<4; ++o) {
            const double theta = o*CV_PI/4.0;
            bank.push_back(cv::Mat1d(std::cos(theta)*gx+std::sin(theta)*gy));
        }
    }
    {
        const GaussianKernels k = make_kernels(2.0);
        cv::Mat1d lxx, lyy;
        cv::sepFilter2D(gray,lxx,CV_64F,k.ddg,k.g,cv::Point(-1,-1),0,cv::BORDER_REFLECT101);
        cv::sepFilter2D(gray,lyy,CV_64F,k.g,k.ddg,cv::Point(-1,-1),0,cv::BORDER_REFLECT101);
        bank.push_back(cv::Mat1d(lxx+lyy));
    }
    cv::Mat1d out((int)gray.total(),kTextonFilters);
    for(int f=0; f<kTextonFilters; ++f) {
        const cv::Mat1d flat = bank[f].reshape(1,(int)gray.total());
        flat.copyTo(out.col(f));
    }
    return out;
}

TextonCodebook fit_texton_codebook(std::span<const RgbdImage> images, std::uint64_t seed, int samples_per_image) {
    if(images.empty())
        throw Error("texton codebook needs at least one image");
    std::vector<cv::Mat1d> samples;
    for(const RgbdImage& img : images) {
        const cv::Mat1d resp = texton_responses(img.rgb);
        const int W = img.rgb.cols, H = img.rgb.rows;
        const int stride = std::max(1,(int)std::floor(std::sqrt((double)W*H/std::max(1,samples_per_image))));
        for(int y=stride/2; y<H; y+=stride)
            for(int x=stride/2; x<W; x+=stride)
                samples.push_back(resp.row(y*W+x));
    }
    cv::Mat1d pooled;
    cv::vconcat(samples,pooled);
    if(pooled.rows<kTextonCount)
        throw Error("too few filter-response samples for the texton codebook");
    TextonCodebook cb;
    cb.centers = kmeans_pp(pooled,kTextonCount,seed).centers;
    return cb;
}

std::vector<double> texton_histogram(const cv::Mat3b& rgb, const TextonCodebook& codebook) {
    const cv::Mat1d resp = texton_responses(rgb);
    std::vector<double> hist((size_t)codebook.centers.rows,0.0);
    for(int i=0; i<resp.rows; ++i)
        hist[nearest_center(codebook.centers,resp.ptr<double>(i))] += 1.0;
    for(double& h : hist)
        h /= resp.rows;
    return hist;
}

} // namespace cosal
