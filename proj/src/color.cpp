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

#include "cosal/color.hpp"

#include <cmath>

namespace cosal {

namespace {

    double srgb_to_linear(double c) {
        return (c<=0.04045)?c/12.92:std::pow((c+0.055)/1.055,2.4);
    }

    double lab_f(double t) {
        constexpr double eps = 216.0/24389.0;
        constexpr double kappa = 24389.0/27.0;
        return (t>eps)?std::cbrt(t):(kappa*t+16.0)/116.0;
    }

    // D65 reference white
    constexpr double kXn = 0.95047;
    constexpr double kYn = 1.00000;
    constexpr double kZn = 1.08883;

} // namespace

Lab srgb_to_lab(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
    const double r = srgb_to_linear(r8/255.0);
    const double g = srgb_to_linear(g8/255.0);
    const double b = srgb_to_linear(b8/255.0);
    const double x = 0.4124564*r + 0.3575761*g + 0.1804375*b;
    const double y = 0.2126729*r + 0.7151522*g + 0.0721750*b;
    const double z = 0.0193339*r + 0.1191920*g + 0.9503041*b;
    const double fx = lab_f(x/kXn), fy = lab_f(y/kYn), fz = lab_f(z/kZn);
    return {116.0*fy-16.0, 500.0*(fx-fy), 200.0*(fy-fz)};
}

cv::Mat3d rgb_image_to_lab(const cv::Mat3b& rgb) {
    std::array<double,256> linear{};
    for(int i=0; i<256; ++i)
        linear[i] = srgb_to_linear(i/255.0);
    cv::Mat3d lab(rgb.size());
    for(int y=0; y<rgb.rows; ++y) {
        const cv::Vec3b* src = rgb.ptr<cv::Vec3b>(y);
        cv::Vec3d* dst = lab.ptr<cv::Vec3d>(y);
        for(int x=0; x<rgb.cols; ++x) {
            const double r = linear[src[x][0]], g = linear[src[x][1]], b = linear[src[x][2]];
            const double X = 0.4124564*r + 0.3575761*g + 0.1804375*b;
            const double Y = 0.2126729*r + 0.7151522*g + 0.0721750*b;
            const double Z = 0.0193339*r + 0.1191920*g + 0.9503041*b;
            const double fx = lab_f(X/kXn), fy = lab_f(Y/kYn), fz = lab_f(Z/kZn);
            dst[x] = cv::Vec3d(116.0*fy-16.0, 500.0*(fx-fy), 200.0*(fy-fz));
        }
    }
    return lab;
}

double color_distance(const Lab& a, const Lab& b) {
    const double dl = a[0]-b[0], da = a[1]-b[1], db = a[2]-b[2];
    return kLabDistanceScale*std::sqrt(dl*dl+da*da+db*db);
}

} // namespace cosal
