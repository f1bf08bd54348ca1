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

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <opencv2/core.hpp>

#include "cosal/clp.hpp"
#include "cosal/config.hpp"
#include "cosal/correspondence.hpp"
#include "cosal/dataset_io.hpp"
#include "cosal/depth_analysis.hpp"
#include "cosal/image_descriptors.hpp"
#include "cosal/inter_saliency.hpp"
#include "cosal/saliency_map.hpp"
#include "cosal/superpixel.hpp"

namespace cosal {

    /// everything one group run consumes
    struct GroupInputs {
        GroupManifest manifest;
        std::vector<RgbdImage> images;
        std::vector<std::optional<cv::Mat1b>> intra_rasters;
        std::vector<std::optional<std::vector<float>>> semantic;
    };

    /// loads rasters plus the intra/ and semantic/ sidecars; with IntraProvider::file every entry needs an intra map
    GroupInputs load_group_inputs(const fs::path& group_dir, const RunConfig& config);

    struct ImageResult {
        SuperpixelMap superpixels;
        DepthConfidence measured_conf;  ///< as computed from the depth raster
        DepthConfidence conf;           ///< what the pipeline used (zeroed under no_depth)
        ClusterModel clusters;
        ImageDescriptor descriptor;
        SaliencyMap intra, inter, intra_opt, inter_opt, cosal;
        SeedSet intra_seeds, inter_seeds;
    };

    struct StageTimings {
        double segmentation_s = 0.0;
        double intra_s = 0.0;
        double inter_s = 0.0;
        double optimization_s = 0.0;
    };

    struct GroupResult {
        std::vector<ImageResult> images;
        PairwiseMatches matches;
        std::vector<std::vector<PairSimilarity>> pairs; ///< pairs[i][j], diagonal unused
        cv::Mat1d phi;                                  ///< clamped to [0,1]; diagonal 1
        StageTimings timings;
    };

    /// segment -> depth confidence -> intra -> descriptors -> pairwise matching and similarity
    /// -> inter -> optimization -> fusion
    GroupResult run_pipeline(const std::vector<RgbdImage>& images,
                             const std::vector<std::optional<cv::Mat1b>>& intra_rasters,
                             const std::vector<std::optional<std::vector<float>>>& semantic,
                             const RunConfig& config);

    inline GroupResult run_pipeline(const GroupInputs& in, const RunConfig& config) {
        return run_pipeline(in.images,in.intra_rasters,in.semantic,config);
    }

    /// output families and their folder names
    inline const std::vector<std::string>& map_families() {
        static const std::vector<std::string> f = {"intra","inter","intra_opt","inter_opt","cosal"};
        return f;
    }

    /// writes <out_dir>/<group>/<family>/<stem>.png for all five families plus <out_dir>/<group>/manifest.json
    void persist_group(const GroupResult& result, const GroupManifest& manifest, const fs::path& out_dir);

    /// derives an independent per-purpose seed from the run seed
    std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

    /// runs body(i) for i in [0,n) on worker threads; rethrows the first exception
    void parallel_for(int n, const std::function<void(int)>& body);

} // namespace cosal
