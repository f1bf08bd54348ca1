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
#include <cstdint>
#include <filesystem>
#include <string>

namespace cosal {

    enum class Regime { LP, SLP, CLP };
    enum class DepthPolarity { near_is_high, near_is_low };
    /// how the depth-confidence ratio is formed: literal mean/stddev, or the conventional stddev/mean
    enum class CvMode { mean_over_std, std_over_mean };
    enum class IntraProvider { baseline, file };

    /// every tunable of one pipeline run
    struct RunConfig {
        int superpixel_count = 200;
        int cluster_count = 10;
        int max_matches = 40;
        double sigma_sq = 0.1;
        double t1 = 0.3;
        double t2 = 0.2;
        double t_min = 0.6;
        double t_max = 0.2;
        std::array<double,4> gamma{0.25,0.25,0.25,0.25};
        double beta_sq = 0.3;
        Regime optimizer = Regime::CLP;
        DepthPolarity depth_polarity = DepthPolarity::near_is_high;
        std::uint64_t rng_seed = 0;

        int depth_levels = 256;
        CvMode cv_mode = CvMode::mean_over_std;
        bool use_optimized_inter_seeds = true;
        /// forces lambda_d = 0 everywhere and alpha_d = 0 in image similarity
        bool no_depth = false;
        IntraProvider intra = IntraProvider::baseline;
        double slic_compactness = 20.0;
        int slic_iterations = 10;

        /// throws cosal::Error naming the first violated constraint
        void validate() const;
    };

    /// parses "key = value" lines ('#' starts a comment) on top of the defaults
    RunConfig parse_config(const std::string& text);
    RunConfig parse_config(const std::string& text, RunConfig base);
    RunConfig load_config(const std::filesystem::path& path);
    /// applies one key/value pair; throws on unknown keys or malformed values
    void set_config_value(RunConfig& config, const std::string& key, const std::string& value);
    /// serializes every field in the format accepted by parse_config
    std::string to_text(const RunConfig& config);

    std::string to_string(Regime regime);
    Regime parse_regime(const std::string& text);

} // namespace cosal
