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

#include "cosal/kmeans.hpp"

#include <limits>
#include <random>

#include "cosal/error.hpp"

namespace cosal {

namespace {

    double sq_dist(const double* a, const double* b, int dim) {
        double s = 0.0;
        for(int d=0; d<dim; ++d) {
            const double t = a[d]-b[d];
            s += t*t;
        }
        return s;
    }

    std::vector<int> assign_all(const cv::Mat1d& points, const cv::Mat1d& centers) {
        std::vector<int> out((size_t)points.rows);
        for(int i=0; i<points.rows; ++i)
            out[i] = nearest_center(centers,points.ptr<double>(i));
        return out;
    }

    /// per-cluster means; clusters without members keep their previous center
    void update_means(const cv::Mat1d& points, const std::vector<int>& labels, cv::Mat1d& centers, std::vector<int>& counts) {
        const int k = centers.rows, dim = points.cols;
        cv::Mat1d sums = cv::Mat1d::zeros(k,dim);
        counts.assign((size_t)k,0);
        for(int i=0; i<points.rows; ++i) {
            const double* p = points.ptr<double>(i);
            double* s = sums.ptr<double>(labels[i]);
            for(int d=0; d<dim; ++d)
                s[d] += p[d];
            ++counts[labels[i]];
        }
        for(int c=0; c<k; ++c)
            if(counts[c]>0)
                for(int d=0; d<dim; ++d)
                    centers(c,d) = sums(c,d)/counts[c];
    }

} // namespace

int nearest_center(const cv::Mat1d& centers, const double* point) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for(int c=0; c<centers.rows; ++c) {
        const double d = sq_dist(point,centers.ptr<double>(c),centers.cols);
        if(d<best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

KMeansResult kmeans_pp(const cv::Mat1d& points, int k, std::uint64_t seed, int max_iterations) {
    const int n = points.rows, dim = points.cols;
    if(k<1 || n<k)
        throw Error("k-means needs 1 <= k <= number of points (k="+std::to_string(k)+", n="+std::to_string(n)+")");
    std::mt19937_64 rng(seed);
    KMeansResult res;
    res.centers.create(k,dim);

    std::vector<char> chosen((size_t)n,0);
    std::vector<double> d2((size_t)n,std::numeric_limits<double>::infinity());
    int first = (int)std::uniform_int_distribution<int>(0,n-1)(rng);
    points.row(first).copyTo(res.centers.row(0));
    chosen[first] = 1;
    for(int c=1; c<k; ++c) {
        double total = 0.0;
        const double* last = res.centers.ptr<double>(c-1);
        for(int i=0; i<n; ++i) {
            d2[i] = std::min(d2[i],sq_dist(points.ptr<double>(i),last,dim));
            total += d2[i];
        }
        int pick = -1;
        if(total>0.0) {
            const double u = std::uniform_real_distribution<double>(0.0,total)(rng);
            double acc = 0.0;
            for(int i=0; i<n; ++i) {
                acc += d2[i];
                if(d2[i]>0.0 && acc>u) {
                    pick = i;
                    break;
                }
            }
            if(pick<0) // u landed on the rounding tail
                for(int i=n-1; i>=0 && pick<0; --i)
                    if(d2[i]>0.0)
                        pick = i;
        }
        else {
            for(int i=0; i<n && pick<0; ++i)
                if(!chosen[i])
                    pick = i;
        }
        points.row(pick).copyTo(res.centers.row(c));
        chosen[pick] = 1;
    }

    std::vector<int> labels = assign_all(points,res.centers);
    std::vector<int> counts;
    int it = 0;
    for(; it<max_iterations; ++it) {
        update_means(points,labels,res.centers,counts);
        for(int c=0; c<k; ++c) {
            if(counts[c]>0)
                continue;
            int far = -1;
            double far_d = -1.0;
            for(int i=0; i<n; ++i) {
                if(counts[labels[i]]<2)
                    continue;
                const double d = sq_dist(points.ptr<double>(i),res.centers.ptr<double>(labels[i]),dim);
                if(d>far_d) {
                    far_d = d;
                    far = i;
                }
            }
            if(far<0)
                break;
            --counts[labels[far]];
            labels[far] = c;
            counts[c] = 1;
            points.row(far).copyTo(res.centers.row(c));
        }
        std::vector<int> next = assign_all(points,res.centers);
        if(next==labels)
            break;
        labels = std::move(next);
    }
    update_means(points,labels,res.centers,counts);
    res.assignments = std::move(labels);
    res.iterations = it;
    res.cost = 0.0;
    for(int i=0; i<n; ++i)
        res.cost += sq_dist(points.ptr<double>(i),res.centers.ptr<double>(res.assignments[i]),dim);
    return res;
}

} // namespace cosal
