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

namespace cosal {

    struct KMeansResult {
        std::vector<int> assignments;
        cv::Mat1d centers; ///< k x dim
        double cost = 0.0; ///< sum of squared distances to assigned centers
        int iterations = 0;
    };

    /// k-means++ seeding then Lloyd iterations until the assignment is a fixpoint or max_iterations;
    /// ties go to the lowest center index; an emptied cluster is re-seeded at the point farthest
    /// from its own center. Deterministic for a fixed seed.
    KMeansResult kmeans_pp(const cv::Mat1d& points, int k, std::uint64_t seed, int max_iterations = 100);

    /// index of the nearest row of centers (lowest index on ties)
    int nearest_center(const cv::Mat1d& centers, const double* point);

} // namespace cosal
