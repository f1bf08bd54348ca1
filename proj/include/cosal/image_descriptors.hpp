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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <opencv2/core.hpp>

#include "cosal/dataset_io.hpp"
#include "cosal/depth_analysis.hpp"
#include "cosal/saliency_map.hpp"

namespace cosal {

    inline constexpr int kColorHistBins = 512;   ///< 8x8x8 joint RGB
    inline constexpr int kValueHistBins = 512;   ///< depth and saliency value histograms
    inline constexpr int kTextonCount = 15;
    inline constexpr int kTextonFilters = 11;
    inline constexpr int kGistDim = 512;         ///< 4 scales x 8 orientations x 4x4 blocks

    // texton.cpp

    /// responses of the 11-filter bank (2 Gaussians, 4 first-derivative orientations at 2 scales,
    /// 1 Laplacian of Gaussian) on the luminance channel; one row per pixel, row-major pixel order
    cv::Mat1d texton_responses(const cv::Mat3b& rgb);

    struct TextonCodebook {
        cv::Mat1d centers; ///< kTextonCount x kTextonFilters
    };

    /// one k-means++ pass over filter responses sampled on a regular grid from every image of a group
    TextonCodebook fit_texton_codebook(std::span<const RgbdImage> images, std::uint64_t seed, int samples_per_image = 2048);

    /// L1-normalized histogram of nearest-texton assignments over all pixels
    std::vector<double> texton_histogram(const cv::Mat3b& rgb, const TextonCodebook& codebook);

    // gist.cpp

    /// Gabor-energy scene descriptor: luminance resized to 128x128, whitened and contrast-normalized,
    /// filtered by 32 frequency-domain Gabor filters, magnitudes averaged over a 4x4 grid
    std::vector<double> gist_descriptor(const cv::Mat3b& rgb);

    // image_descriptors.cpp

    struct ImageDescriptor {
        std::vector<double> h_c;
        std::vector<double> t;
        std::optional<std::vector<double>> s_vec;
        std::vector<double> g;
        std::vector<double> h_d;
        std::vector<double> h_s;
        DepthConfidence conf;
    };

    std::vector<double> rgb_histogram(const cv::Mat3b& rgb);
    /// L1-normalized histogram of a [0,1] raster; value v falls in bin min(floor(v*bins), bins-1)
    std::vector<double> value_histogram(const cv::Mat1d& raster, int bins = kValueHistBins);

    ImageDescriptor describe_image(const RgbdImage& image, const SaliencyMap& intra, const DepthConfidence& conf,
                                   const TextonCodebook& codebook, const std::optional<std::vector<float>>& semantic);

    /// 0.5 * sum (a-b)^2 / (a+b+1e-12)
    double chi_square(std::span<const double> h1, std::span<const double> h2);

    /// 1 - cos(v1, v2); 1 when either vector is all zeros
    double cosine_distance(std::span<const double> v1, std::span<const double> v2);

    struct PairSimilarity {
        double phi = 0.0;
        double d_c1 = 0.0, d_c2 = 0.0, d_c3 = 0.0, d_c4 = 0.0;
        bool has_semantic = false; ///< d_c3 is meaningful only when both images carry a semantic vector
        double d_d = 0.0, d_s = 0.0;
        double alpha_c = 0.0, alpha_d = 0.0, alpha_s = 0.0;
    };

    /// self-adaptive fusion of the six feature distances; the mean color distance is over the
    /// available color distances (3 when a semantic vector is missing)
    PairSimilarity pair_similarity(const ImageDescriptor& desc_i, const ImageDescriptor& desc_j, double t2);

} // namespace cosal
