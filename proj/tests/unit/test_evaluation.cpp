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

#include <random>

#include "cosal/error.hpp"
#include "cosal/evaluation.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cosal;

namespace {

    cv::Mat1b random_map(int w, int h, std::mt19937_64& rng) {
        std::uniform_int_distribution<int> u(0,255);
        cv::Mat1b m(h,w);
        for(auto& v : m)
            v = (uchar)u(rng);
        return m;
    }

    cv::Mat1b random_mask(int w, int h, std::mt19937_64& rng) {
        std::bernoulli_distribution b(0.3);
        cv::Mat1b m(h,w);
        for(auto& v : m)
            v = b(rng);
        m(0,0) = 1;
        return m;
    }

} // namespace

TEST_CASE("threshold counts and PR match brute force") {
    std::mt19937_64 rng(31);
    for(int trial=0; trial<20; ++trial) {
        const int w = 4+trial%13, h = 16-trial%9;
        const cv::Mat1b map = random_map(w,h,rng), gt = random_mask(w,h,rng);
        const auto counts = threshold_counts(map,gt);
        const PrCurve pr = pr_curve(map,gt);
        for(int t=0; t<kThresholds; ++t) {
            const auto c = oracle::counts_at(map,gt,t);
            CHECK(counts[t].tp==c.tp);
            CHECK(counts[t].fp==c.fp);
            CHECK(counts[t].fn==c.fn);
            const double p = (c.tp+c.fp)?(double)c.tp/(c.tp+c.fp):1.0;
            CHECK(pr[t].precision==p);
            CHECK(pr[t].recall==(double)c.tp/(c.tp+c.fn));
            if(t>0)
                CHECK(pr[t].recall<=pr[t-1].recall);
        }
        CHECK(std::abs(mae(map,gt)-oracle::mae(map,gt))<1e-12);
    }
}

TEST_CASE("PR reference cases") {
    cv::Mat1b gt = cv::Mat1b::zeros(8,8);
    gt(cv::Rect(2,2,3,3)).setTo(1);
    const PrCurve perfect = pr_curve(cv::Mat1b(gt*255),gt);
    for(int t=1; t<kThresholds; ++t) {
        CHECK(perfect[t].precision==1.0);
        CHECK(perfect[t].recall==1.0);
    }
    const PrCurve full = pr_curve(cv::Mat1b(8,8,(uchar)255),gt);
    for(int t=0; t<kThresholds; ++t) {
        CHECK(full[t].recall==1.0);
        CHECK(full[t].precision==doctest::Approx(9.0/64.0));
    }
    CHECK_THROWS_AS(pr_curve(gt,cv::Mat1b::zeros(8,8)),Error);
}

TEST_CASE("F-measure identities") {
    for(int k=0; k<=10; ++k) {
        const double p = k/10.0;
        CHECK(f_measure(p,p,0.3)==doctest::Approx(p).epsilon(1e-12));
    }
    CHECK(f_measure(1.0,0.0,0.3)==0.0);
    CHECK(f_measure(0.0,0.0,0.3)==0.0);
    CHECK(f_measure(0.8,0.5,0.3)==doctest::Approx(1.3*0.4/0.74).epsilon(1e-12));
}

TEST_CASE("MAE reference cases") {
    cv::Mat1b gt = cv::Mat1b::zeros(4,4);
    gt(cv::Rect(0,0,2,4)).setTo(1);
    cv::Mat1d as_map;
    gt.convertTo(as_map,CV_64F);
    CHECK(mae(as_map,gt)==0.0);
    CHECK(mae(cv::Mat1d(1.0-as_map),gt)==1.0);
    CHECK(mae(cv::Mat1d(4,4,0.5),gt)==0.5);
}

TEST_CASE("adaptive F reference cases and bound by max F") {
    cv::Mat1b gt = cv::Mat1b::zeros(8,8);
    gt(cv::Rect(1,1,3,3)).setTo(1);
    CHECK(adaptive_f(cv::Mat1b(gt*255),gt,0.3)==doctest::Approx(1.0));
    CHECK(adaptive_f(cv::Mat1b(8,8,(uchar)100),gt,0.3)==0.0);
    std::mt19937_64 rng(32);
    for(int trial=0; trial<50; ++trial) {
        const cv::Mat1b map = random_map(12,10,rng), mask = random_mask(12,10,rng);
        CHECK(adaptive_f(map,mask,0.3)<=max_f(pr_curve(map,mask),0.3)+1e-15);
    }
}

TEST_CASE("aggregate takes unweighted means and write_report emits the tables") {
    std::vector<ImageScores> s(3);
    s[0] = {"g","a","cosal",0.2,0.4,0.1,{}};
    s[1] = {"g","b","cosal",0.4,0.8,0.3,{}};
    s[2] = {"g","a","inter",1.0,1.0,0.0,{}};
    for(auto& x : s)
        for(auto& p : x.pr)
            p = {0.5,0.25};
    const auto groups = aggregate(s);
    REQUIRE(groups.size()==2);
    const GroupScores& cosal = groups[0].method=="cosal"?groups[0]:groups[1];
    CHECK(cosal.images==2);
    CHECK(cosal.f_adaptive==doctest::Approx(0.3));
    CHECK(cosal.f_max==doctest::Approx(0.6));
    CHECK(cosal.mae==doctest::Approx(0.2));
    CHECK(cosal.pr[7].recall==doctest::Approx(0.25));

    testing::TempDir dir("report");
    write_report(EvalReport{s,groups},dir.path());
    const std::string scores = testing::read_file(dir.path()/"eval_scores.csv");
    CHECK(scores.rfind("group,image,method,f_adaptive,f_max,mae\n",0)==0);
    CHECK(std::count(scores.begin(),scores.end(),'\n')==4);
    const std::string pr = testing::read_file(dir.path()/"eval_pr.csv");
    CHECK(std::count(pr.begin(),pr.end(),'\n')==1+3*kThresholds);
    CHECK(std::filesystem::exists(dir.path()/"eval_groups.csv"));

    const cv::Mat3b plot = render_pr_plot("g",{{"cosal",cosal.pr}});
    CHECK(!plot.empty());
}
