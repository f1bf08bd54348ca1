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

#include "cosal/superpixel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "cosal/error.hpp"

namespace cosal {

namespace {

    struct Center {
        double l,a,b,x,y;
    };

    double gradient_at(const cv::Mat3d& lab, int x, int y) {
        const int x0 = std::max(x-1,0), x1 = std::min(x+1,lab.cols-1);
        const int y0 = std::max(y-1,0), y1 = std::min(y+1,lab.rows-1);
        const cv::Vec3d dx = lab(y,x1)-lab(y,x0), dy = lab(y1,x)-lab(y0,x);
        return dx.dot(dx)+dy.dot(dy);
    }

    /// relabels 4-connected components; components no larger than min_size are absorbed by the
    /// label of an already visited 4-neighbor of their first pixel; returns the final label count
    int enforce_connectivity(cv::Mat1i& labels, int min_size) {
        const int W = labels.cols, H = labels.rows;
        cv::Mat1i out(labels.size(),-1);
        std::vector<cv::Point> component;
        component.reserve((size_t)W*H);
        const int dx4[4] = {-1,0,1,0}, dy4[4] = {0,-1,0,1};
        int next = 0;
        for(int y=0; y<H; ++y) {
            for(int x=0; x<W; ++x) {
                if(out(y,x)>=0)
                    continue;
                int adjacent = -1;
                for(int k=0; k<4; ++k) {
                    const int nx = x+dx4[k], ny = y+dy4[k];
                    if(nx>=0 && nx<W && ny>=0 && ny<H && out(ny,nx)>=0) {
                        adjacent = out(ny,nx);
                        break;
                    }
                }
                const int old = labels(y,x);
                component.clear();
                component.emplace_back(x,y);
                out(y,x) = next;
                for(size_t c=0; c<component.size(); ++c) {
                    const cv::Point p = component[c];
                    for(int k=0; k<4; ++k) {
                        const int nx = p.x+dx4[k], ny = p.y+dy4[k];
                        if(nx>=0 && nx<W && ny>=0 && ny<H && out(ny,nx)<0 && labels(ny,nx)==old) {
                            out(ny,nx) = next;
                            component.emplace_back(nx,ny);
                        }
                    }
                }
                if((int)component.size()<=min_size && adjacent>=0) {
                    for(const cv::Point& p : component)
                        out(p.y,p.x) = adjacent;
                }
                else
                    ++next;
            }
        }
        labels = out;
        return next;
    }

} // namespace

NeighborSets adjacency_of(const cv::Mat1i& labels, int count) {
    std::vector<std::set<int>> sets((size_t)count);
    auto link = [&](int a, int b) {
        if(a!=b) {
            sets[a].insert(b);
            sets[b].insert(a);
        }
    };
    for(int y=0; y<labels.rows; ++y)
        for(int x=0; x<labels.cols; ++x) {
            const int l = labels(y,x);
            if(l<0 || l>=count)
                throw Error("label "+std::to_string(l)+" out of range [0,"+std::to_string(count)+")");
            if(x+1<labels.cols)
                link(l,labels(y,x+1));
            if(y+1<labels.rows)
                link(l,labels(y+1,x));
        }
    NeighborSets out((size_t)count);
    for(int i=0; i<count; ++i)
        out[i].assign(sets[i].begin(),sets[i].end());
    return out;
}

SuperpixelMap superpixels_from_labels(const cv::Mat1i& labels, const RgbdImage& image) {
    if(labels.size()!=image.rgb.size() || labels.size()!=image.depth.size())
        throw Error("label raster size does not match the image");
    double max_label = -1;
    cv::minMaxLoc(labels,nullptr,&max_label);
    const int count = (int)max_label+1;
    SuperpixelMap map;
    map.labels = labels.clone();
    map.stats.assign((size_t)count,SuperpixelStats{});
    std::vector<cv::Vec3d> lab_sum((size_t)count,cv::Vec3d(0,0,0));
    std::vector<double> depth_sum((size_t)count,0.0), xs((size_t)count,0.0), ys((size_t)count,0.0);
    const cv::Mat3d lab = rgb_image_to_lab(image.rgb);
    for(int y=0; y<labels.rows; ++y)
        for(int x=0; x<labels.cols; ++x) {
            const int l = labels(y,x);
            if(l<0)
                throw Error("negative superpixel label");
            lab_sum[l] += lab(y,x);
            depth_sum[l] += image.depth(y,x);
            xs[l] += x;
            ys[l] += y;
            ++map.stats[l].pixel_count;
        }
    for(int l=0; l<count; ++l) {
        SuperpixelStats& s = map.stats[l];
        if(s.pixel_count==0)
            throw Error("superpixel "+std::to_string(l)+" is empty");
        const double n = s.pixel_count;
        s.mean_lab = {lab_sum[l][0]/n,lab_sum[l][1]/n,lab_sum[l][2]/n};
        s.mean_depth = depth_sum[l]/n;
        s.centroid = cv::Point2d(xs[l]/n,ys[l]/n);
    }
    map.adjacency = adjacency_of(map.labels,count);
    return map;
}

SuperpixelMap segment(const RgbdImage& image, int target_count, std::uint64_t /*rng_seed*/, const SlicParams& params) {
    if(image.rgb.empty())
        throw Error("cannot segment an empty image");
    if(target_count<4)
        throw Error("superpixel target count must be >= 4");
    const int W = image.rgb.cols, H = image.rgb.rows;
    const double step = std::sqrt((double)W*H/target_count);
    if(step>std::min(W,H))
        throw Error("image ("+std::to_string(W)+"x"+std::to_string(H)+") is smaller than the initial superpixel grid step");
    const int nx = std::max(1,(int)std::lround(W/step)), ny = std::max(1,(int)std::lround(H/step));
    const double sx = (double)W/nx, sy = (double)H/ny;
    const double S = std::sqrt(sx*sy);
    const cv::Mat3d lab = rgb_image_to_lab(image.rgb);

    std::vector<Center> centers;
    centers.reserve((size_t)nx*ny);
    for(int j=0; j<ny; ++j)
        for(int i=0; i<nx; ++i) {
            int cx = std::min(W-1,(int)((i+0.5)*sx)), cy = std::min(H-1,(int)((j+0.5)*sy));
            int bx = cx, by = cy;
            double best = gradient_at(lab,cx,cy);
            for(int dy=-1; dy<=1; ++dy)
                for(int dx=-1; dx<=1; ++dx) {
                    const int px = cx+dx, py = cy+dy;
                    if(px<0 || px>=W || py<0 || py>=H)
                        continue;
                    const double g = gradient_at(lab,px,py);
                    if(g<best) {
                        best = g;
                        bx = px;
                        by = py;
                    }
                }
            const cv::Vec3d c = lab(by,bx);
            centers.push_back({c[0],c[1],c[2],(double)bx,(double)by});
        }

    const double spatial_weight = (params.compactness/S)*(params.compactness/S);
    cv::Mat1i labels(H,W,-1);
    cv::Mat1d dist(H,W);
    const int radius = (int)std::ceil(S);
    for(int it=0; it<params.iterations; ++it) {
        dist.setTo(std::numeric_limits<double>::infinity());
        labels.setTo(-1);
        for(int k=0; k<(int)centers.size(); ++k) {
            const Center& c = centers[k];
            const int x0 = std::max(0,(int)std::floor(c.x)-radius), x1 = std::min(W-1,(int)std::ceil(c.x)+radius);
            const int y0 = std::max(0,(int)std::floor(c.y)-radius), y1 = std::min(H-1,(int)std::ceil(c.y)+radius);
            for(int y=y0; y<=y1; ++y) {
                const cv::Vec3d* row = lab.ptr<cv::Vec3d>(y);
                for(int x=x0; x<=x1; ++x) {
                    const double dl = row[x][0]-c.l, da = row[x][1]-c.a, db = row[x][2]-c.b;
                    const double ddx = x-c.x, ddy = y-c.y;
                    const double d = dl*dl+da*da+db*db + (ddx*ddx+ddy*ddy)*spatial_weight;
                    if(d<dist(y,x)) {
                        dist(y,x) = d;
                        labels(y,x) = k;
                    }
                }
            }
        }
        // pixels outside every search window fall back to the spatially nearest center
        for(int y=0; y<H; ++y)
            for(int x=0; x<W; ++x) {
                if(labels(y,x)>=0)
                    continue;
                double best = std::numeric_limits<double>::infinity();
                for(int k=0; k<(int)centers.size(); ++k) {
                    const double d = (x-centers[k].x)*(x-centers[k].x)+(y-centers[k].y)*(y-centers[k].y);
                    if(d<best) {
                        best = d;
                        labels(y,x) = k;
                    }
                }
            }
        std::vector<Center> sums(centers.size(),Center{0,0,0,0,0});
        std::vector<int> counts(centers.size(),0);
        for(int y=0; y<H; ++y)
            for(int x=0; x<W; ++x) {
                const int k = labels(y,x);
                const cv::Vec3d v = lab(y,x);
                sums[k].l += v[0];
                sums[k].a += v[1];
                sums[k].b += v[2];
                sums[k].x += x;
                sums[k].y += y;
                ++counts[k];
            }
        for(size_t k=0; k<centers.size(); ++k) {
            if(counts[k]==0)
                continue;
            const double n = counts[k];
            centers[k] = {sums[k].l/n,sums[k].a/n,sums[k].b/n,sums[k].x/n,sums[k].y/n};
        }
    }
    const int min_size = std::max(1,(int)((double)W*H/centers.size()/4.0));
    enforce_connectivity(labels,min_size);
    return superpixels_from_labels(labels,image);
}

} // namespace cosal
