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

#include <cmath>

#include <opencv2/imgproc.hpp>

namespace cosal {

namespace {

    constexpr int kGistSide = 128;
    constexpr int kBoundary = 32;
    constexpr int kBlocks = 4;
    constexpr int kScales = 4;
    constexpr int kOrientations = 8;
    constexpr double kPrefilterFc = 4.0;

    /// multiplies the spectrum of a real image by a real transfer function and returns the complex result
    cv::Mat2d filter_spectrum(const cv::Mat2d& spectrum, const cv::Mat1d& transfer) {
        cv::Mat2d out(spectrum.size());
        for(int y=0; y<spectrum.rows; ++y)
            for(int x=0; x<spectrum.cols; ++x)
                out(y,x) = spectrum(y,x)*transfer(y,x);
        return out;
    }

    cv::Mat2d forward(const cv::Mat1d& img) {
        cv::Mat2d spec;
        cv::dft(img,spec,cv::DFT_COMPLEX_OUTPUT);
        return spec;
    }

    cv::Mat2d inverse(const cv::Mat2d& spec) {
        cv::Mat2d out;
        cv::dft(spec,out,cv::DFT_INVERSE|cv::DFT_SCALE|cv::DFT_COMPLEX_OUTPUT);
        return out;
    }

    /// signed frequency of index u on an n-point grid (unshifted layout)
    double freq(int u, int n) {
        return (u<(n+1)/2)?u:u-n;
    }

    /// log-domain whitening and local contrast normalization
    cv::Mat1d prefilter(const cv::Mat1d& img) {
        constexpr int pad = 5;
        cv::Mat1d logimg;
        cv::log(img+1.0,logimg);
        cv::Mat1d padded;
        cv::copyMakeBorder(logimg,padded,pad,pad,pad,pad,cv::BORDER_REFLECT);
        const int n = padded.rows, m = padded.cols;
        const double s1 = kPrefilterFc/std::sqrt(std::log(2.0));
        cv::Mat1d gf(n,m);
        for(int y=0; y<n; ++y)
            for(int x=0; x<m; ++x) {
                const double fx = freq(x,m), fy = freq(y,n);
                gf(y,x) = std::exp(-(fx*fx+fy*fy)/(s1*s1));
            }
        cv::Mat2d low = inverse(filter_spectrum(forward(padded),gf));
        cv::Mat1d whitened(n,m);
        for(int y=0; y<n; ++y)
            for(int x=0; x<m; ++x)
                whitened(y,x) = padded(y,x)-low(y,x)[0];
        cv::Mat1d sq = whitened.mul(whitened);
        cv::Mat2d local = inverse(filter_spectrum(forward(sq),gf));
        cv::Mat1d out(n,m);
        for(int y=0; y<n; ++y)
            for(int x=0; x<m; ++x) {
                const cv::Vec2d c = local(y,x);
                out(y,x) = whitened(y,x)/(0.2+std::sqrt(std::sqrt(c[0]*c[0]+c[1]*c[1])));
            }
        return out(cv::Rect(pad,pad,m-2*pad,n-2*pad)).clone();
    }

    cv::Mat1d gabor_transfer(int n, int scale, int orientation) {
        const double a = 0.35;
        const double b = 0.3/std::pow(1.85,scale);
        const double c = 16.0*kOrientations*kOrientations/(32.0*32.0);
        const double theta = CV_PI/kOrientations*orientation;
        cv::Mat1d g(n,n);
        for(int y=0; y<n; ++y)
            for(int x=0; x<n; ++x) {
                const double fx = freq(x,n), fy = freq(y,n);
                const double fr = std::sqrt(fx*fx+fy*fy);
                double t = std::atan2(fy,fx)+theta;
                if(t<-CV_PI) t += 2*CV_PI;
                else if(t>CV_PI) t -= 2*CV_PI;
                const double r = fr/n/b-1.0;
                g(y,x) = std::exp(-10.0*a*r*r-2.0*c*CV_PI*t*t);
            }
        return g;
    }

} // namespace

std::vector<double> gist_descriptor(const cv::Mat3b& rgb) {
    cv::Mat1d gray(rgb.size());
    for(int y=0; y<rgb.rows; ++y)
        for(int x=0; x<rgb.cols; ++x) {
            const cv::Vec3b p = rgb(y,x);
            gray(y,x) = 0.299*p[0]+0.587*p[1]+0.114*p[2];
        }
    cv::Mat1d resized;
    cv::resize(gray,resized,cv::Size(kGistSide,kGistSide),0,0,cv::INTER_LINEAR);
    const cv::Mat1d pre = prefilter(resized);
    cv::Mat1d padded;
    cv::copyMakeBorder(pre,padded,kBoundary,kBoundary,kBoundary,kBoundary,cv::BORDER_REFLECT);
    const int n = padded.rows;
    const cv::Mat2d spectrum = forward(padded);

    std::vector<double> out;
    out.reserve(kGistDim);
    const int bs = kGistSide/kBlocks;
    for(int s=0; s<kScales; ++s)
        for(int o=0; o<kOrientations; ++o) {
            const cv::Mat2d resp = inverse(filter_spectrum(spectrum,gabor_transfer(n,s,o)));
            for(int by=0; by<kBlocks; ++by)
                for(int bx=0; bx<kBlocks; ++bx) {
                    double acc = 0.0;
                    for(int y=0; y<bs; ++y)
                        for(int x=0; x<bs; ++x) {
                            const cv::Vec2d c = resp(kBoundary+by*bs+y,kBoundary+bx*bs+x);
                            acc += std::sqrt(c[0]*c[0]+c[1]*c[1]);
                        }
                    out.push_back(acc/(bs*bs));
                }
        }
    return out;
}

} // namespace cosal
