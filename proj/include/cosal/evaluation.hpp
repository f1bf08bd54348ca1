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

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <opencv2/core.hpp>

namespace cosal {

    inline constexpr int kThresholds = 256;

    struct ConfusionCounts {
        long long tp = 0, fp = 0, fn = 0;
    };

    struct PrPoint {
        double precision = 1.0;
        double recall = 0.0;
    };

    using PrCurve = std::array<PrPoint,kThresholds>;

    /// counts of the binarization (map >= t) against gt (nonzero = positive) for t = 0..255
    std::array<ConfusionCounts,kThresholds> threshold_counts(const cv::Mat1b& map, const cv::Mat1b& gt);

    /// precision (empty prediction -> 1) and recall per threshold; throws when gt has no positive pixel
    PrCurve pr_curve(const cv::Mat1b& map, const cv::Mat1b& gt);

    /// (1+b2)PR/(b2 P + R), 0 when P = R = 0
    double f_measure(double precision, double recall, double beta_sq);

    double max_f(const PrCurve& curve, double beta_sq);

    /// mean |S - G| with S in [0,1] and G in {0,1} (nonzero gt pixels count as 1)
    double mae(const cv::Mat1d& map, const cv::Mat1b& gt);
    double mae(const cv::Mat1b& map, const cv::Mat1b& gt);

    /// F at the binarization map/255 > 2*mean(map/255)
    double adaptive_f(const cv::Mat1b& map, const cv::Mat1b& gt, double beta_sq);

    struct ImageScores {
        std::string group;
        std::string image;
        std::string method;
        double f_adaptive = 0.0;
        double f_max = 0.0;
        double mae = 0.0;
        PrCurve pr{};
    };

    ImageScores evaluate_image(const cv::Mat1b& map, const cv::Mat1b& gt, double beta_sq);

    struct GroupScores {
        std::string group;
        std::string method;
        int images = 0;
        double f_adaptive = 0.0;
        double f_max = 0.0;
        double mae = 0.0;
        PrCurve pr{}; ///< per-threshold mean precision and recall
    };

    struct EvalReport {
        std::vector<ImageScores> per_image;
        std::vector<GroupScores> per_group;
    };

    /// unweighted means of per-image scores for every (group, method)
    std::vector<GroupScores> aggregate(const std::vector<ImageScores>& per_image);

    /// writes <prefix>_scores.csv (group,image,method,f_adaptive,f_max,mae),
    /// <prefix>_pr.csv (group,image,method,threshold,precision,recall) and <prefix>_groups.csv
    void write_report(const EvalReport& report, const std::filesystem::path& dir, const std::string& prefix = "eval");

    /// PR curves of several methods drawn into one raster with axes and a legend
    cv::Mat3b render_pr_plot(const std::string& title, const std::vector<std::pair<std::string,PrCurve>>& curves);

} // namespace cosal
