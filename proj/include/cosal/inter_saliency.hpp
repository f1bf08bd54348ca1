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

#include <vector>

#include <opencv2/core.hpp>

#include "cosal/correspondence.hpp"
#include "cosal/saliency_map.hpp"
#include "cosal/superpixel.hpp"

namespace cosal {

    /// matches[i][j] maps superpixels of image i (rows) to image j (columns); the diagonal is unused
    using PairwiseMatches = std::vector<std::vector<MatchMatrix>>;

    /// S(m) = 1/(N-1) * sum_{j != i} phi_ij/N_j * sum_n S_intra_j(n) * ml_ij(m,n), with phi_ij clamped to [0,1]
    std::vector<double> inter_scores_raw(const std::vector<SaliencyMap>& intra, const PairwiseMatches& matches,
                                         const cv::Mat1d& phi, int target);

    /// min-max normalized raw scores rendered over the target's labels
    SaliencyMap inter_map(const std::vector<SuperpixelMap>& superpixels, const std::vector<SaliencyMap>& intra,
                          const PairwiseMatches& matches, const cv::Mat1d& phi, int target);

} // namespace cosal
