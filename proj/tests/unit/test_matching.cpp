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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cosal/correspondence.hpp"
#include "cosal/error.hpp"
#include "cosal/kmeans.hpp"
#include "synthetic.hpp"

using namespace cosal;

namespace {

    SuperpixelMap random_superpixels(int n, std::mt19937_64& rng) {
        std::uniform_real_distribution<double> u(0.0,1.0);
        SuperpixelMap sp;
        sp.stats.resize(n);
        for(auto& s : sp.stats) {
            s.mean_lab = {100*u(rng),200*u(rng)-100,200*u(rng)-100};
            s.mean_depth = u(rng);
            s.pixel_count = 1;
        }
        sp.adjacency.resize(n);
        return sp;
    }

    DepthConfidence conf_of(double lambda) {
        DepthConfidence c;
        c.lambda_d = lambda;
        return c;
    }

} // namespace

TEST_CASE("similarity of a pair at unit scaled distance is exp(-1)") {
    SuperpixelMap a, b;
    a.stats.resize(1);
    b.stats.resize(1);
    a.stats[0].mean_lab = {50,0,0};
    b.stats[0].mean_lab = {50+6.0,8.0,0};       // scaled color distance 0.1
    a.stats[0].mean_depth = 0.2;
    b.stats[0].mean_depth = 0.5;
    // min(lambda) = 0 gates depth off
    const SimilarityMatrix s0 = similarity_matrix(a,b,conf_of(0.0),conf_of(5.0),0.1);
    CHECK(s0.s(0,0)==doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    const SimilarityMatrix s1 = similarity_matrix(a,b,conf_of(2.0),conf_of(1.0),0.1);
    CHECK(s1.s(0,0)==doctest::Approx(std::exp(-(0.1+1.0*0.3)/0.1)).epsilon(1e-12));
}

TEST_CASE("similarity entries lie in (0,1]") {
    std::mt19937_64 rng(1);
    const SuperpixelMap a = random_superpixels(20,rng), b = random_superpixels(25,rng);
    const SimilarityMatrix s = similarity_matrix(a,b,conf_of(0.7),conf_of(3.0),0.1);
    CHECK(s.s.rows==20);
    CHECK(s.s.cols==25);
    for(double v : s.s) {
        CHECK(v>0.0);
        CHECK(v<=1.0);
    }
    const SimilarityMatrix self = similarity_matrix(a,a,conf_of(0.7),conf_of(0.7),0.1);
    for(int m=0; m<20; ++m)
        CHECK(self.s(m,m)==1.0);
}

TEST_CASE("phi1 keeps the top entries of each row") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> level(0,5);
    for(int trial=0; trial<10; ++trial) {
        SimilarityMatrix sim;
        sim.s.create(6,15);
        for(double& v : sim.s)
            v = level(rng)/5.0;   // many ties
        const CandidateSets c = phi1_knn(sim,4);
        for(int m=0; m<6; ++m) {
            // brute force: stable order by value desc then index asc
            std::vector<int> idx(15);
            for(int n=0; n<15; ++n)
                idx[n] = n;
            std::stable_sort(idx.begin(),idx.end(),[&](int a, int b){return sim.s(m,a)>sim.s(m,b);});
            std::vector<int> expect(idx.begin(),idx.begin()+4);
            std::sort(expect.begin(),expect.end());
            CHECK(c[m]==expect);
        }
    }
    SimilarityMatrix small;
    small.s = cv::Mat1d(2,3,0.5);
    for(const auto& row : phi1_knn(small,40))
        CHECK(row==std::vector<int>{0,1,2});
    CHECK_THROWS_AS(phi1_knn(small,0),Error);
}

TEST_CASE("phi2 selects saliency-consistent candidates inclusively") {
    const std::vector<double> si{0.5}, sj{0.1,0.3,0.9,0.85};
    const CandidateSets c = phi2_saliency_consistent(si,sj,0.3);
    CHECK(c[0]==std::vector<int>{1});
    const std::vector<double> exact{0.25}, edge{0.0,0.5,0.75};
    CHECK(phi2_saliency_consistent(exact,edge,0.25)[0]==std::vector<int>{0,1});
}

TEST_CASE("kmeans with k equal to the point count isolates every point") {
    cv::Mat1d pts = (cv::Mat1d(5,2) << 0,0, 1,0, 0,1, 5,5, 9,9);
    const KMeansResult r = kmeans_pp(pts,5,3);
    std::set<int> used(r.assignments.begin(),r.assignments.end());
    CHECK(used.size()==5);
    CHECK(r.cost==doctest::Approx(0.0));
}

TEST_CASE("kmeans separates two distant blobs and is deterministic") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> nd(0.0,0.1);
    cv::Mat1d pts(40,2);
    for(int i=0; i<40; ++i) {
        pts(i,0) = (i<20?0.0:10.0)+nd(rng);
        pts(i,1) = (i<20?0.0:-10.0)+nd(rng);
    }
    const KMeansResult a = kmeans_pp(pts,2,11), b = kmeans_pp(pts,2,11);
    CHECK(a.assignments==b.assignments);
    for(int i=1; i<20; ++i)
        CHECK(a.assignments[i]==a.assignments[0]);
    for(int i=21; i<40; ++i)
        CHECK(a.assignments[i]==a.assignments[20]);
    CHECK(a.assignments[0]!=a.assignments[20]);
    // every point is assigned to its nearest center
    for(int i=0; i<40; ++i)
        CHECK(nearest_center(a.centers,pts.ptr<double>(i))==a.assignments[i]);
    CHECK_THROWS_AS(kmeans_pp(pts,41,0),Error);
}

TEST_CASE("nearest_center breaks ties toward the lower index") {
    cv::Mat1d centers = (cv::Mat1d(3,1) << 2.0,0.0,2.0);
    const double p = 1.0;
    CHECK(nearest_center(centers,&p)==0);
}

TEST_CASE("clustering ignores depth when the confidence is zero") {
    const auto g = testing::make_square_group(testing::DepthMode::scrambled);
    const SuperpixelMap sp = segment(g.images[0],100,0);
    SuperpixelMap flat = sp;
    for(auto& s : flat.stats)
        s.mean_depth = 0.0;
    const ClusterModel a = cluster_superpixels(sp,conf_of(0.0),10,5);
    const ClusterModel b = cluster_superpixels(flat,conf_of(0.0),10,5);
    CHECK(a.assignments==b.assignments);
    CHECK_THROWS_AS(cluster_superpixels(sp,conf_of(0.0),sp.size()+1,5),Error);
}

TEST_CASE("phi3 matches brute-force nearest-cluster membership") {
    std::mt19937_64 rng(6);
    const SuperpixelMap a = random_superpixels(30,rng), b = random_superpixels(24,rng);
    const ClusterModel ma = cluster_superpixels(a,conf_of(1.0),5,1);
    const ClusterModel mb = cluster_superpixels(b,conf_of(1.0),5,2);
    const CandidateSets c = phi3_cluster_match(ma,mb);
    for(int m=0; m<30; ++m) {
        const int ca = ma.assignments[m];
        int best = 0;
        double best_d = 1e300;
        for(int q=0; q<5; ++q) {
            double d = 0.0;
            for(int k=0; k<4; ++k)
                d += (ma.centers(ca,k)-mb.centers(q,k))*(ma.centers(ca,k)-mb.centers(q,k));
            if(d<best_d) {
                best_d = d;
                best = q;
            }
        }
        std::vector<int> expect;
        for(int n=0; n<24; ++n)
            if(mb.assignments[n]==best)
                expect.push_back(n);
        CHECK(c[m]==expect);
    }
}

TEST_CASE("cluster centers live in the scaled matching space") {
    std::mt19937_64 rng(8);
    const SuperpixelMap a = random_superpixels(12,rng);
    const ClusterModel m = cluster_superpixels(a,conf_of(2.0),3,0);
    for(int c=0; c<3; ++c) {
        double l = 0.0, d = 0.0;
        int count = 0;
        for(int i=0; i<12; ++i)
            if(m.assignments[i]==c) {
                l += a.stats[i].mean_lab[0]*kLabDistanceScale;
                d += 2.0*a.stats[i].mean_depth;
                ++count;
            }
        REQUIRE(count>0);
        CHECK(m.centers(c,0)==doctest::Approx(l/count));
        CHECK(m.centers(c,3)==doctest::Approx(d/count));
    }
}

TEST_CASE("match matrix is the intersection of the three candidate sets") {
    const CandidateSets p1{{0,1,2},{3}}, p2{{1,2,3},{3}}, p3{{2,1},{0}};
    const MatchMatrix mm = match_matrix(p1,p2,p3,4);
    CHECK(mm.ml(0,1)==1);
    CHECK(mm.ml(0,2)==1);
    CHECK(mm.ml(0,0)==0);
    CHECK(mm.ml(0,3)==0);
    CHECK(mm.row_sum(1)==0);
    CHECK_THROWS_AS(match_matrix(p1,p2,{{0}},4),Error);
    CHECK_THROWS_AS(match_matrix({{9},{}},{{9},{}},{{9},{}},4),Error);
}
