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

#include "cosal/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cosal/error.hpp"
#include "cosal/kmeans.hpp"

namespace cosal {

SimilarityMatrix similarity_matrix(const SuperpixelMap& sp_i, const SuperpixelMap& sp_j,
                                   const DepthConfidence& conf_i, const DepthConfidence& conf_j, double sigma_sq) {
    if(sp_i.size()==0 || sp_j.size()==0)
        throw Error("similarity matrix of an empty superpixel map");
    if(!(sigma_sq>0.0))
        throw Error("sigma_sq must be positive");
    const double gate = std::min(conf_i.lambda_d,conf_j.lambda_d);
    SimilarityMatrix sim;
    sim.s.create(sp_i.size(),sp_j.size());
    for(int m=0; m<sp_i.size(); ++m) {
        const SuperpixelStats& a = sp_i.stats[m];
        double* row = sim.s.ptr<double>(m);
        for(int n=0; n<sp_j.size(); ++n) {
            const SuperpixelStats& b = sp_j.stats[n];
            row[n] = std::exp(-(color_distance(a.mean_lab,b.mean_lab)+gate*std::abs(a.mean_depth-b.mean_depth))/sigma_sq);
        }
    }
    return sim;
}

CandidateSets phi1_knn(const SimilarityMatrix& sim, int max_matches) {
    if(max_matches<1)
        throw Error("max_matches must be >= 1");
    const int rows = sim.s.rows, cols = sim.s.cols;
    const int keep = std::min(max_matches,cols);
    CandidateSets out((size_t)rows);
    std::vector<int> idx((size_t)cols);
    for(int m=0; m<rows; ++m) {
        const double* row = sim.s.ptr<double>(m);
        std::iota(idx.begin(),idx.end(),0);
        std::partial_sort(idx.begin(),idx.begin()+keep,idx.end(),[row](int a, int b) {
            return row[a]>row[b] || (row[a]==row[b] && a<b);
        });
        out[m].assign(idx.begin(),idx.begin()+keep);
        std::sort(out[m].begin(),out[m].end());
    }
    return out;
}

CandidateSets phi2_saliency_consistent(std::span<const double> intra_i, std::span<const double> intra_j, double t1) {
    CandidateSets out(intra_i.size());
    for(size_t m=0; m<intra_i.size(); ++m)
        for(size_t n=0; n<intra_j.size(); ++n)
            if(std::abs(intra_i[m]-intra_j[n])<=t1)
                out[m].push_back((int)n);
    return out;
}

ClusterModel cluster_superpixels(const SuperpixelMap& sp, const DepthConfidence& conf, int k, std::uint64_t seed) {
    const int n = sp.size();
    if(n<k)
        throw Error("cannot form "+std::to_string(k)+" clusters from "+std::to_string(n)+" superpixels");
    cv::Mat1d raw(n,4), metric(n,4);
    for(int m=0; m<n; ++m) {
        const SuperpixelStats& s = sp.stats[m];
        const double gated = conf.lambda_d*s.mean_depth;
        raw(m,0) = s.mean_lab[0];
        raw(m,1) = s.mean_lab[1];
        raw(m,2) = s.mean_lab[2];
        raw(m,3) = gated;
        metric(m,0) = kLabDistanceScale*s.mean_lab[0];
        metric(m,1) = kLabDistanceScale*s.mean_lab[1];
        metric(m,2) = kLabDistanceScale*s.mean_lab[2];
        metric(m,3) = gated;
    }
    cv::Mat1d standardized(n,4);
    for(int c=0; c<4; ++c) {
        double mean = 0.0, var = 0.0;
        for(int m=0; m<n; ++m)
            mean += raw(m,c);
        mean /= n;
        for(int m=0; m<n; ++m)
            var += (raw(m,c)-mean)*(raw(m,c)-mean);
        const double sd = std::sqrt(var/n);
        for(int m=0; m<n; ++m)
            standardized(m,c) = (sd>0.0)?(raw(m,c)-mean)/sd:0.0;
    }
    const KMeansResult km = kmeans_pp(standardized,k,seed);
    ClusterModel model;
    model.assignments = km.assignments;
    model.centers = cv::Mat1d::zeros(k,4);
    std::vector<int> counts((size_t)k,0);
    for(int m=0; m<n; ++m) {
        model.centers.row(km.assignments[m]) += metric.row(m);
        ++counts[km.assignments[m]];
    }
    for(int c=0; c<k; ++c)
        if(counts[c]>0)
            model.centers.row(c) /= counts[c];
    return model;
}

std::vector<int> nearest_clusters(const ClusterModel& model_i, const ClusterModel& model_j) {
    std::vector<int> out((size_t)model_i.centers.rows);
    for(int p=0; p<model_i.centers.rows; ++p)
        out[p] = nearest_center(model_j.centers,model_i.centers.ptr<double>(p));
    return out;
}

CandidateSets phi3_cluster_match(const ClusterModel& model_i, const ClusterModel& model_j) {
    const std::vector<int> nearest = nearest_clusters(model_i,model_j);
    std::vector<std::vector<int>> members((size_t)model_j.centers.rows);
    for(size_t n=0; n<model_j.assignments.size(); ++n)
        members[model_j.assignments[n]].push_back((int)n);
    CandidateSets out(model_i.assignments.size());
    for(size_t m=0; m<model_i.assignments.size(); ++m)
        out[m] = members[nearest[model_i.assignments[m]]];
    return out;
}

MatchMatrix match_matrix(const CandidateSets& phi1, const CandidateSets& phi2, const CandidateSets& phi3, int cols) {
    if(phi1.size()!=phi2.size() || phi1.size()!=phi3.size())
        throw Error("candidate sets disagree on the number of rows");
    MatchMatrix mm;
    mm.ml = cv::Mat1b::zeros((int)phi1.size(),cols);
    std::vector<unsigned char> votes((size_t)cols);
    for(size_t m=0; m<phi1.size(); ++m) {
        std::fill(votes.begin(),votes.end(),0);
        for(const CandidateSets* sets : {&phi1,&phi2,&phi3})
            for(int n : (*sets)[m]) {
                if(n<0 || n>=cols)
                    throw Error("candidate index "+std::to_string(n)+" out of range");
                votes[n] |= (unsigned char)(sets==&phi1?1:sets==&phi2?2:4);
            }
        for(int n=0; n<cols; ++n)
            if(votes[n]==7)
                mm.ml((int)m,n) = 1;
    }
    return mm;
}

} // namespace cosal
