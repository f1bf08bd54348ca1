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

#include <array>
#include <span>
#include <utility>
#include <vector>

#include <opencv2/core.hpp>

#include "cosal/config.hpp"
#include "cosal/depth_analysis.hpp"
#include "cosal/saliency_map.hpp"
#include "cosal/superpixel.hpp"

namespace cosal {

    /// sparse symmetric affinity over superpixel adjacency, self-loops included with weight 1
    class AffinityGraph {
    public:
        using Row = std::vector<std::pair<int,double>>;

        AffinityGraph() = default;
        explicit AffinityGraph(std::vector<Row> rows);
        /// keeps the nonzero entries of a square matrix
        static AffinityGraph from_dense(const cv::Mat1d& w);

        int size() const {return (int)rows_.size();}
        const Row& row(int u) const {return rows_[u];}
        double weight(int u, int v) const;
        cv::Mat1d dense() const;

    private:
        std::vector<Row> rows_; ///< sorted by column
    };

    /// w_uv = exp(-(color_distance + lambda_d*|d_u - d_v|)/sigma^2) for adjacent u,v; w_uu = 1
    AffinityGraph affinity(const SuperpixelMap& sp, const DepthConfidence& conf, double sigma_sq);

    struct SeedSet {
        std::vector<int> foreground;
        std::vector<int> background;
        double tf = 0.0;
        double tb = 0.0;
    };

    /// tf = max(2*mean|S|, t_min), tb = min(mean|S|, t_max); F = {S >= tf}, B = {S <= tb} minus F
    SeedSet select_seeds(std::span<const double> scores, double t_min, double t_max);

    /// 1 on foreground seeds, 0 on background seeds, fill elsewhere
    std::vector<double> initial_labels(const SeedSet& seeds, std::span<const double> fill);

    /// one pass V = W * V0, not normalized
    std::vector<double> propagate_raw(const AffinityGraph& graph, std::span<const double> v0);

    /// min-max normalized single-pass propagation of the seeded initialization
    std::vector<double> propagate(const AffinityGraph& graph, const SeedSet& seeds, std::span<const double> fill);

    struct OptimizeResult {
        SaliencyMap intra_opt;
        SaliencyMap inter_opt;
        SeedSet intra_seeds;  ///< seeds used to propagate the intra map
        SeedSet inter_seeds;  ///< seeds used to propagate the inter map
    };

    struct OptimizeParams {
        double t_min = 0.6;
        double t_max = 0.2;
        /// CLP: seed the intra update from the optimized inter map (true) or the raw inter map (false)
        bool use_optimized_inter_seeds = true;
    };

    /// LP: each map seeded by itself. SLP: both seeded by the intersection of the two own seed sets.
    /// CLP: inter seeded by intra first, then intra seeded by (optimized) inter.
    OptimizeResult optimize(const SaliencyMap& intra, const SaliencyMap& inter, const AffinityGraph& graph,
                            Regime regime, const OptimizeParams& params, const cv::Mat1i& labels);

    /// convex combination gamma . (intra, inter, intra_opt, inter_opt); throws unless sum(gamma) = 1
    SaliencyMap fuse(const SaliencyMap& intra, const SaliencyMap& inter, const SaliencyMap& intra_opt,
                     const SaliencyMap& inter_opt, const std::array<double,4>& gamma);

} // namespace cosal
