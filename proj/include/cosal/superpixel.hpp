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
#include <vector>

#include <opencv2/core.hpp>

#include "cosal/color.hpp"
#include "cosal/dataset_io.hpp"

namespace cosal {

    struct SuperpixelStats {
        Lab mean_lab{};
        double mean_depth = 0.0;
        cv::Point2d centroid;
        int pixel_count = 0;
    };

    /// sorted neighbor id lists, one per superpixel; symmetric, no self entries
    using NeighborSets = std::vector<std::vector<int>>;

    struct SuperpixelMap {
        cv::Mat1i labels;
        std::vector<SuperpixelStats> stats;
        NeighborSets adjacency;

        int size() const {return (int)stats.size();}
    };

    struct SlicParams {
        double compactness = 20.0;
        int iterations = 10;
    };

    /// SLIC over L*a*b* + (x,y) on a regular grid seeding, followed by 4-connectivity enforcement.
    /// Grid seeding is deterministic, so rng_seed does not influence the result.
    SuperpixelMap segment(const RgbdImage& image, int target_count, std::uint64_t rng_seed, const SlicParams& params = {});

    /// builds stats and adjacency for an arbitrary dense label raster (ids must cover [0,n) with no gaps)
    SuperpixelMap superpixels_from_labels(const cv::Mat1i& labels, const RgbdImage& image);

    /// u and v are neighbors iff a pixel of u and a pixel of v share a 4-connected border
    NeighborSets adjacency_of(const cv::Mat1i& labels, int count);
    inline NeighborSets adjacency_of(const SuperpixelMap& map) {return adjacency_of(map.labels,map.size());}

} // namespace cosal
