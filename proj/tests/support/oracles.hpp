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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <opencv2/core.hpp>

#include "cosal/inter_saliency.hpp"

// Slow, direct reimplementations used to cross-check the library.
namespace cosal::oracle {

    inline double lambda_d(const std::vector<double>& v, int levels) {
        const double n = (double)v.size();
        double mean = 0.0;
        for(double x : v)
            mean += x;
        mean /= n;
        double var = 0.0;
        for(double x : v)
            var += (x-mean)*(x-mean);
        const double sigma = std::sqrt(var/n);
        if(sigma==0.0)
            return 0.0;
        std::vector<double> hist(levels,0.0);
        for(double x : v)
            hist[std::min((int)std::floor(x*levels),levels-1)] += 1.0;
        double h = 0.0;
        for(double c : hist)
            if(c>0.0)
                h -= (c/n)*std::log(c/n);
        return std::exp((1.0-mean)*(mean/sigma)*h)-1.0;
    }

    /// V = W * V0 followed by min-max normalization, on a dense matrix
    inline std::vector<double> dense_propagation(const cv::Mat1d& w, const std::vector<double>& scores,
                                                 const std::vector<double>& fill, double t_min, double t_max) {
        const int n = (int)scores.size();
        double mean = 0.0;
        for(double s : scores)
            mean += std::abs(s);
        mean /= n;
        const double tf = std::max(2.0*mean,t_min), tb = std::min(mean,t_max);
        std::vector<double> v0(n);
        for(int i=0; i<n; ++i)
            v0[i] = scores[i]>=tf?1.0:(scores[i]<=tb?0.0:fill[i]);
        std::vector<double> v(n,0.0);
        for(int i=0; i<n; ++i)
            for(int j=0; j<n; ++j)
                v[i] += w(i,j)*v0[j];
        const double lo = *std::min_element(v.begin(),v.end()), hi = *std::max_element(v.begin(),v.end());
        for(double& x : v)
            x = hi>lo?(x-lo)/(hi-lo):0.0;
        return v;
    }

    inline std::vector<double> inter_raw(const std::vector<std::vector<double>>& intra, const PairwiseMatches& ml,
                                         const cv::Mat1d& phi, int i) {
        const int groups = (int)intra.size();
        const int ni = (int)intra[i].size();
        std::vector<double> out(ni,0.0);
        for(int m=0; m<ni; ++m) {
            double total = 0.0;
            for(int j=0; j<groups; ++j) {
                if(j==i)
                    continue;
                const int nj = (int)intra[j].size();
                double inner = 0.0;
                for(int n=0; n<nj; ++n)
                    if(ml[i][j].ml(m,n))
                        inner += intra[j][n];
                const double p = std::clamp(phi(i,j),0.0,1.0);
                total += p*inner/nj;
            }
            out[m] = total/(groups-1);
        }
        return out;
    }

    struct Counts {
        long long tp = 0, fp = 0, fn = 0;
    };

    inline Counts counts_at(const cv::Mat1b& map, const cv::Mat1b& gt, int t) {
        Counts c;
        for(int y=0; y<map.rows; ++y)
            for(int x=0; x<map.cols; ++x) {
                const bool p = map(y,x)>=t, g = gt(y,x)!=0;
                c.tp += p&&g;
                c.fp += p&&!g;
                c.fn += !p&&g;
            }
        return c;
    }

    inline double mae(const cv::Mat1b& map, const cv::Mat1b& gt) {
        double s = 0.0;
        for(int y=0; y<map.rows; ++y)
            for(int x=0; x<map.cols; ++x)
                s += std::abs(map(y,x)/255.0-(gt(y,x)?1.0:0.0));
        return s/(map.rows*map.cols);
    }

    inline double chi_square(const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for(size_t k=0; k<a.size(); ++k)
            s += (a[k]-b[k])*(a[k]-b[k])/(a[k]+b[k]+1e-12);
        return 0.5*s;
    }

    inline double cosine_distance(const std::vector<double>& a, const std::vector<double>& b) {
        double ab = 0.0, aa = 0.0, bb = 0.0;
        for(size_t k=0; k<a.size(); ++k) {
            ab += a[k]*b[k];
            aa += a[k]*a[k];
            bb += b[k]*b[k];
        }
        if(aa==0.0||bb==0.0)
            return 1.0;
        return 1.0-ab/std::sqrt(aa*bb);
    }

    inline double f_measure(double p, double r, double beta_sq) {
        return (p==0.0&&r==0.0)?0.0:(1.0+beta_sq)*p*r/(beta_sq*p+r);
    }

} // namespace cosal::oracle
