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
#include <span>
#include <vector>

#include <opencv2/core.hpp>

#include "cosal/depth_analysis.hpp"
#include "cosal/saliency_map.hpp"
#include "cosal/superpixel.hpp"

namespace cosal {

    /// s(m,n) = exp(-(color_distance + min(lambda_i, lambda_j)*|d_m - d_n|) / sigma^2), rows index image i
    struct SimilarityMatrix {
        cv::Mat1d s;
        int source_i = 0;
        int source_j = 0;
    };

    struct ClusterModel {
        std::vector<int> assignments;
        /// member means in the unstandardized matching space [L*, a*, b*]*kLabDistanceScale + [lambda_d*d]
        cv::Mat1d centers;
    };

    /// binary correspondence between the superpixels of image i (rows) and image j (columns)
    struct MatchMatrix {
        cv::Mat1b ml;
        int source_i = 0;
        int source_j = 0;

        int row_sum(int m) const {return cv::countNonZero(ml.row(m));}
    };

    /// one sorted candidate list per row superpixel
    using CandidateSets = std::vector<std::vector<int>>;

    SimilarityMatrix similarity_matrix(const SuperpixelMap& sp_i, const SuperpixelMap& sp_j,
                                       const DepthConfidence& conf_i, const DepthConfidence& conf_j, double sigma_sq);

    /// the max_matches largest entries of every row, ties to the lower column; all columns when N_j <= max_matches
    CandidateSets phi1_knn(const SimilarityMatrix& sim, int max_matches);

    /// {n : |S_i(m) - S_j(n)| <= t1}
    CandidateSets phi2_saliency_consistent(std::span<const double> intra_i, std::span<const double> intra_j, double t1);

    /// k-means++ over standardized [L*, a*, b*, lambda_d*d] superpixel features
    ClusterModel cluster_superpixels(const SuperpixelMap& sp, const DepthConfidence& conf, int k, std::uint64_t seed);

    /// index of the center of model_j nearest to each center of model_i (lowest index on ties)
    std::vector<int> nearest_clusters(const ClusterModel& model_i, const ClusterModel& model_j);

    /// all superpixels of j in the cluster whose center is nearest to the center of m's cluster
    CandidateSets phi3_cluster_match(const ClusterModel& model_i, const ClusterModel& model_j);

    /// ml(m,n) = 1 iff n belongs to all three candidate sets of m
    MatchMatrix match_matrix(const CandidateSets& phi1, const CandidateSets& phi2, const CandidateSets& phi3, int cols);

} // namespace cosal
