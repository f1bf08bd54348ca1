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

#include "cosal/inter_saliency.hpp"

#include <algorithm>

#include "cosal/error.hpp"

namespace cosal {

std::vector<double> inter_scores_raw(const std::vector<SaliencyMap>& intra, const PairwiseMatches& matches,
                                     const cv::Mat1d& phi, int target) {
    const int N = (int)intra.size();
    if(N<2)
        throw Error("inter saliency needs a group of at least 2 images");
    if(target<0 || target>=N || (int)matches.size()!=N || phi.rows!=N || phi.cols!=N)
        throw Error("inter saliency inputs disagree on the group size");
    const int rows = (int)intra[target].scores.size();
    std::vector<double> raw((size_t)rows,0.0);
    for(int j=0; j<N; ++j) {
        if(j==target)
            continue;
        const MatchMatrix& mm = matches[target][j];
        const std::vector<double>& sj = intra[j].scores;
        if(mm.ml.rows!=rows || mm.ml.cols!=(int)sj.size())
            throw Error("match matrix "+std::to_string(target)+"->"+std::to_string(j)+" has the wrong shape");
        const double weight = std::clamp(phi(target,j),0.0,1.0)/(double)sj.size();
        for(int m=0; m<rows; ++m) {
            const uchar* row = mm.ml.ptr<uchar>(m);
            double acc = 0.0;
            for(int n=0; n<mm.ml.cols; ++n)
                if(row[n])
                    acc += sj[n];
            raw[m] += weight*acc;
        }
    }
    for(double& r : raw)
        r /= (N-1);
    return raw;
}

SaliencyMap inter_map(const std::vector<SuperpixelMap>& superpixels, const std::vector<SaliencyMap>& intra,
                      const PairwiseMatches& matches, const cv::Mat1d& phi, int target) {
    const std::vector<double> raw = inter_scores_raw(intra,matches,phi,target);
    return make_saliency_map(min_max_normalize(raw),superpixels.at(target).labels,MapOrigin::inter);
}

} // namespace cosal
