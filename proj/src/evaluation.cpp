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

#include "cosal/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>

#include <opencv2/imgproc.hpp>

#include "cosal/error.hpp"

namespace cosal {

namespace {

    void check_sizes(const cv::Mat& a, const cv::Mat& b) {
        if(a.size()!=b.size())
            throw Error("saliency map is "+std::to_string(a.cols)+"x"+std::to_string(a.rows)+
                        " but ground truth is "+std::to_string(b.cols)+"x"+std::to_string(b.rows));
    }

} // namespace

std::array<ConfusionCounts,kThresholds> threshold_counts(const cv::Mat1b& map, const cv::Mat1b& gt) {
    check_sizes(map,gt);
    std::array<long long,kThresholds> pos{}, neg{};
    for(int y=0; y<map.rows; ++y)
        for(int x=0; x<map.cols; ++x)
            (gt(y,x)?pos:neg)[map(y,x)]++;
    long long total_pos = 0;
    for(long long p : pos)
        total_pos += p;
    std::array<ConfusionCounts,kThresholds> out{};
    long long tp = 0, fp = 0;
    for(int t=kThresholds-1; t>=0; --t) {
        tp += pos[t];
        fp += neg[t];
        out[t] = {tp,fp,total_pos-tp};
    }
    return out;
}

PrCurve pr_curve(const cv::Mat1b& map, const cv::Mat1b& gt) {
    const auto counts = threshold_counts(map,gt);
    if(counts[0].tp+counts[0].fn==0)
        throw Error("ground truth has no positive pixel");
    PrCurve curve{};
    for(int t=0; t<kThresholds; ++t) {
        const ConfusionCounts& c = counts[t];
        curve[t].precision = (c.tp+c.fp==0)?1.0:(double)c.tp/(double)(c.tp+c.fp);
        curve[t].recall = (double)c.tp/(double)(c.tp+c.fn);
    }
    return curve;
}

double f_measure(double precision, double recall, double beta_sq) {
    const double denom = beta_sq*precision+recall;
    if(!(denom>0.0))
        return 0.0;
    return (1.0+beta_sq)*precision*recall/denom;
}

double max_f(const PrCurve& curve, double beta_sq) {
    double best = 0.0;
    for(const PrPoint& p : curve)
        best = std::max(best,f_measure(p.precision,p.recall,beta_sq));
    return best;
}

double mae(const cv::Mat1d& map, const cv::Mat1b& gt) {
    check_sizes(map,gt);
    if(map.empty())
        throw Error("MAE of an empty map");
    double acc = 0.0;
    for(int y=0; y<map.rows; ++y)
        for(int x=0; x<map.cols; ++x)
            acc += std::abs(map(y,x)-(gt(y,x)?1.0:0.0));
    return acc/(double)map.total();
}

double mae(const cv::Mat1b& map, const cv::Mat1b& gt) {
    cv::Mat1d m;
    map.convertTo(m,CV_64F,1.0/255.0);
    return mae(m,gt);
}

double adaptive_f(const cv::Mat1b& map, const cv::Mat1b& gt, double beta_sq) {
    check_sizes(map,gt);
    const double threshold = 2.0*cv::mean(map)[0]/255.0;
    long long tp = 0, fp = 0, positives = 0;
    for(int y=0; y<map.rows; ++y)
        for(int x=0; x<map.cols; ++x) {
            const bool truth = gt(y,x)!=0;
            positives += truth;
            if(map(y,x)/255.0>threshold)
                (truth?tp:fp)++;
        }
    if(positives==0)
        throw Error("ground truth has no positive pixel");
    const double precision = (tp+fp==0)?1.0:(double)tp/(double)(tp+fp);
    const double recall = (double)tp/(double)positives;
    return f_measure(precision,recall,beta_sq);
}

ImageScores evaluate_image(const cv::Mat1b& map, const cv::Mat1b& gt, double beta_sq) {
    ImageScores s;
    s.pr = pr_curve(map,gt);
    s.f_max = max_f(s.pr,beta_sq);
    s.f_adaptive = adaptive_f(map,gt,beta_sq);
    s.mae = mae(map,gt);
    return s;
}

std::vector<GroupScores> aggregate(const std::vector<ImageScores>& per_image) {
    std::map<std::pair<std::string,std::string>,GroupScores> acc;
    for(const ImageScores& s : per_image) {
        GroupScores& g = acc[{s.group,s.method}];
        if(g.images==0) {
            g.group = s.group;
            g.method = s.method;
            for(PrPoint& p : g.pr)
                p = {0.0,0.0};
        }
        ++g.images;
        g.f_adaptive += s.f_adaptive;
        g.f_max += s.f_max;
        g.mae += s.mae;
        for(int t=0; t<kThresholds; ++t) {
            g.pr[t].precision += s.pr[t].precision;
            g.pr[t].recall += s.pr[t].recall;
        }
    }
    std::vector<GroupScores> out;
    for(auto& [key,g] : acc) {
        g.f_adaptive /= g.images;
        g.f_max /= g.images;
        g.mae /= g.images;
        for(PrPoint& p : g.pr) {
            p.precision /= g.images;
            p.recall /= g.images;
        }
        out.push_back(g);
    }
    return out;
}

void write_report(const EvalReport& report, const std::filesystem::path& dir, const std::string& prefix) {
    std::filesystem::create_directories(dir);
    auto open = [&](const std::string& name) {
        std::ofstream out(dir/(prefix+name));
        if(!out)
            throw Error("cannot write "+(dir/(prefix+name)).string());
        out << std::setprecision(10);
        return out;
    };
    {
        std::ofstream out = open("_scores.csv");
        out << "group,image,method,f_adaptive,f_max,mae\n";
        for(const ImageScores& s : report.per_image)
            out << s.group << ',' << s.image << ',' << s.method << ',' << s.f_adaptive << ',' << s.f_max << ',' << s.mae << '\n';
    }
    {
        std::ofstream out = open("_pr.csv");
        out << "group,image,method,threshold,precision,recall\n";
        for(const ImageScores& s : report.per_image)
            for(int t=0; t<kThresholds; ++t)
                out << s.group << ',' << s.image << ',' << s.method << ',' << t << ',' << s.pr[t].precision << ',' << s.pr[t].recall << '\n';
    }
    {
        std::ofstream out = open("_groups.csv");
        out << "group,method,images,f_adaptive,f_max,mae\n";
        for(const GroupScores& g : report.per_group)
            out << g.group << ',' << g.method << ',' << g.images << ',' << g.f_adaptive << ',' << g.f_max << ',' << g.mae << '\n';
    }
}

cv::Mat3b render_pr_plot(const std::string& title, const std::vector<std::pair<std::string,PrCurve>>& curves) {
    constexpr int W = 640, H = 520, left = 70, right = 20, top = 40, bottom = 60;
    const int pw = W-left-right, ph = H-top-bottom;
    cv::Mat3b img(H,W,cv::Vec3b(255,255,255));
    const cv::Scalar black(0,0,0), grid(220,220,220);
    auto to_px = [&](double recall, double precision) {
        return cv::Point(left+(int)std::lround(recall*pw),top+ph-(int)std::lround(precision*ph));
    };
    for(int k=0; k<=10; ++k) {
        const double v = k/10.0;
        cv::line(img,to_px(v,0),to_px(v,1),grid,1);
        cv::line(img,to_px(0,v),to_px(1,v),grid,1);
        char buf[8];
        std::snprintf(buf,sizeof(buf),"%.1f",v);
        cv::putText(img,buf,to_px(v,0)+cv::Point(-10,18),cv::FONT_HERSHEY_SIMPLEX,0.4,black,1,cv::LINE_AA);
        cv::putText(img,buf,to_px(0,v)+cv::Point(-32,4),cv::FONT_HERSHEY_SIMPLEX,0.4,black,1,cv::LINE_AA);
    }
    cv::rectangle(img,to_px(0,1),to_px(1,0),black,1);
    cv::putText(img,"Recall",cv::Point(left+pw/2-25,H-15),cv::FONT_HERSHEY_SIMPLEX,0.5,black,1,cv::LINE_AA);
    cv::putText(img,"Precision",cv::Point(5,top-10),cv::FONT_HERSHEY_SIMPLEX,0.5,black,1,cv::LINE_AA);
    cv::putText(img,title,cv::Point(left+pw/2-4*(int)title.size(),22),cv::FONT_HERSHEY_SIMPLEX,0.55,black,1,cv::LINE_AA);
    static const cv::Scalar palette[] = {{0,0,230},{0,150,0},{230,0,0},{0,160,230},{160,0,160},{120,120,0},{40,40,40}};
    for(size_t c=0; c<curves.size(); ++c) {
        const cv::Scalar color = palette[c%std::size(palette)];
        const PrCurve& curve = curves[c].second;
        for(int t=1; t<kThresholds; ++t)
            cv::line(img,to_px(curve[t-1].recall,curve[t-1].precision),to_px(curve[t].recall,curve[t].precision),color,2,cv::LINE_AA);
        const cv::Point legend(left+pw-150,top+15+18*(int)c);
        cv::line(img,legend,legend+cv::Point(25,0),color,2,cv::LINE_AA);
        cv::putText(img,curves[c].first,legend+cv::Point(32,5),cv::FONT_HERSHEY_SIMPLEX,0.45,black,1,cv::LINE_AA);
    }
    return img;
}

} // namespace cosal
