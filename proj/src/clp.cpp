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

#include "cosal/clp.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "cosal/error.hpp"

namespace cosal {

AffinityGraph::AffinityGraph(std::vector<Row> rows) : rows_(std::move(rows)) {
    for(Row& r : rows_)
        std::sort(r.begin(),r.end());
}

AffinityGraph AffinityGraph::from_dense(const cv::Mat1d& w) {
    if(w.rows!=w.cols)
        throw Error("affinity matrix must be square");
    std::vector<Row> rows((size_t)w.rows);
    for(int u=0; u<w.rows; ++u)
        for(int v=0; v<w.cols; ++v)
            if(w(u,v)!=0.0)
                rows[u].emplace_back(v,w(u,v));
    return AffinityGraph(std::move(rows));
}

double AffinityGraph::weight(int u, int v) const {
    const Row& r = rows_.at(u);
    const auto it = std::lower_bound(r.begin(),r.end(),std::make_pair(v,-std::numeric_limits<double>::infinity()));
    return (it!=r.end() && it->first==v)?it->second:0.0;
}

cv::Mat1d AffinityGraph::dense() const {
    cv::Mat1d w = cv::Mat1d::zeros(size(),size());
    for(int u=0; u<size(); ++u)
        for(const auto& [v,val] : rows_[u])
            w(u,v) = val;
    return w;
}

AffinityGraph affinity(const SuperpixelMap& sp, const DepthConfidence& conf, double sigma_sq) {
    if(!(sigma_sq>0.0))
        throw Error("sigma_sq must be positive");
    if((int)sp.adjacency.size()!=sp.size())
        throw Error("superpixel adjacency has not been computed");
    std::vector<AffinityGraph::Row> rows((size_t)sp.size());
    for(int u=0; u<sp.size(); ++u) {
        rows[u].emplace_back(u,1.0);
        const SuperpixelStats& a = sp.stats[u];
        for(int v : sp.adjacency[u]) {
            const SuperpixelStats& b = sp.stats[v];
            const double dist = color_distance(a.mean_lab,b.mean_lab)+conf.lambda_d*std::abs(a.mean_depth-b.mean_depth);
            rows[u].emplace_back(v,std::exp(-dist/sigma_sq));
        }
    }
    return AffinityGraph(std::move(rows));
}

SeedSet select_seeds(std::span<const double> scores, double t_min, double t_max) {
    SeedSet seeds;
    if(scores.empty())
        return seeds;
    double mean_abs = 0.0;
    for(double s : scores)
        mean_abs += std::abs(s);
    mean_abs /= (double)scores.size();
    seeds.tf = std::max(2.0*mean_abs,t_min);
    seeds.tb = std::min(mean_abs,t_max);
    for(int m=0; m<(int)scores.size(); ++m) {
        if(scores[m]>=seeds.tf)
            seeds.foreground.push_back(m);
        else if(scores[m]<=seeds.tb)
            seeds.background.push_back(m);
    }
    return seeds;
}

std::vector<double> initial_labels(const SeedSet& seeds, std::span<const double> fill) {
    std::vector<double> v0(fill.begin(),fill.end());
    for(int b : seeds.background)
        v0.at(b) = 0.0;
    for(int f : seeds.foreground)
        v0.at(f) = 1.0;
    return v0;
}

std::vector<double> propagate_raw(const AffinityGraph& graph, std::span<const double> v0) {
    if((int)v0.size()!=graph.size())
        throw Error("propagation input has "+std::to_string(v0.size())+" entries for a graph of "+std::to_string(graph.size()));
    std::vector<double> v((size_t)graph.size(),0.0);
    for(int u=0; u<graph.size(); ++u) {
        double acc = 0.0;
        for(const auto& [n,w] : graph.row(u))
            acc += w*v0[n];
        v[u] = acc;
    }
    return v;
}

std::vector<double> propagate(const AffinityGraph& graph, const SeedSet& seeds, std::span<const double> fill) {
    return min_max_normalize(propagate_raw(graph,initial_labels(seeds,fill)));
}

namespace {

    std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(),a.end(),b.begin(),b.end(),std::back_inserter(out));
        return out;
    }

} // namespace

OptimizeResult optimize(const SaliencyMap& intra, const SaliencyMap& inter, const AffinityGraph& graph,
                        Regime regime, const OptimizeParams& params, const cv::Mat1i& labels) {
    if(intra.scores.size()!=inter.scores.size() || (int)intra.scores.size()!=graph.size())
        throw Error("intra map, inter map and affinity graph disagree on the number of superpixels");
    OptimizeResult res;
    const SeedSet own_intra = select_seeds(intra.scores,params.t_min,params.t_max);
    const SeedSet own_inter = select_seeds(inter.scores,params.t_min,params.t_max);
    switch(regime) {
        case Regime::LP: {
            res.inter_seeds = own_inter;
            res.intra_seeds = own_intra;
            res.inter_opt = make_saliency_map(propagate(graph,own_inter,inter.scores),labels,MapOrigin::inter_opt);
            res.intra_opt = make_saliency_map(propagate(graph,own_intra,intra.scores),labels,MapOrigin::intra_opt);
            break;
        }
        case Regime::SLP: {
            SeedSet shared;
            shared.foreground = intersect(own_intra.foreground,own_inter.foreground);
            shared.background = intersect(own_intra.background,own_inter.background);
            shared.tf = std::max(own_intra.tf,own_inter.tf);
            shared.tb = std::min(own_intra.tb,own_inter.tb);
            res.inter_seeds = res.intra_seeds = shared;
            res.inter_opt = make_saliency_map(propagate(graph,shared,inter.scores),labels,MapOrigin::inter_opt);
            res.intra_opt = make_saliency_map(propagate(graph,shared,intra.scores),labels,MapOrigin::intra_opt);
            break;
        }
        case Regime::CLP: {
            res.inter_seeds = own_intra;
            res.inter_opt = make_saliency_map(propagate(graph,own_intra,inter.scores),labels,MapOrigin::inter_opt);
            res.intra_seeds = params.use_optimized_inter_seeds
                ? select_seeds(res.inter_opt.scores,params.t_min,params.t_max)
                : own_inter;
            res.intra_opt = make_saliency_map(propagate(graph,res.intra_seeds,intra.scores),labels,MapOrigin::intra_opt);
            break;
        }
    }
    return res;
}

SaliencyMap fuse(const SaliencyMap& intra, const SaliencyMap& inter, const SaliencyMap& intra_opt,
                 const SaliencyMap& inter_opt, const std::array<double,4>& gamma) {
    if(std::abs(gamma[0]+gamma[1]+gamma[2]+gamma[3]-1.0)>1e-9)
        throw Error("fusion weights must sum to 1");
    const size_t n = intra.scores.size();
    if(inter.scores.size()!=n || intra_opt.scores.size()!=n || inter_opt.scores.size()!=n)
        throw Error("fusion inputs disagree on the number of superpixels");
    SaliencyMap out;
    out.origin = MapOrigin::fused;
    out.scores.resize(n);
    for(size_t m=0; m<n; ++m)
        out.scores[m] = gamma[0]*intra.scores[m]+gamma[1]*inter.scores[m]+gamma[2]*intra_opt.scores[m]+gamma[3]*inter_opt.scores[m];
    out.raster.create(intra.raster.size());
    for(int y=0; y<out.raster.rows; ++y)
        for(int x=0; x<out.raster.cols; ++x)
            out.raster(y,x) = gamma[0]*intra.raster(y,x)+gamma[1]*inter.raster(y,x)+gamma[2]*intra_opt.raster(y,x)+gamma[3]*inter_opt.raster(y,x);
    return out;
}

} // namespace cosal
