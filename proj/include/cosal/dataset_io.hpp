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

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <opencv2/core.hpp>

#include "cosal/config.hpp"
#include "cosal/saliency_map.hpp"

namespace cosal {

    namespace fs = std::filesystem;

    /// number of reals in one semantic sidecar
    inline constexpr std::size_t kSemanticDim = 4096;

    struct GroupEntry {
        std::string stem;
        fs::path rgb_path;
        fs::path depth_path;
        std::optional<fs::path> gt_path;
        std::optional<fs::path> intra_path;
        std::optional<fs::path> semantic_path;
    };

    struct GroupManifest {
        std::string group_name;
        std::vector<GroupEntry> entries;
    };

    /// aligned RGB (R,G,B channel order), depth normalized to [0,1] with larger = nearer,
    /// optional {0,1} ground-truth mask
    struct RgbdImage {
        cv::Mat3b rgb;
        cv::Mat1d depth;
        std::optional<cv::Mat1b> gt;

        int width() const {return rgb.cols;}
        int height() const {return rgb.rows;}
    };

    /// smallest accepted raster side
    inline constexpr int kMinImageSide = 16;

    /// walks rgb/, depth/ and the optional gt/, intra/, semantic/ folders of one group directory;
    /// entries are sorted by stem
    GroupManifest scan_group(const fs::path& root_dir);

    /// loads every entry of a scanned group (see load_entry)
    std::pair<GroupManifest,std::vector<RgbdImage>> load_group(const fs::path& root_dir, const RunConfig& config);

    /// reads one entry: rgb, min-max normalized depth (inverted for near_is_low), binarized gt
    RgbdImage load_entry(const GroupEntry& entry, DepthPolarity polarity);

    /// min-max normalization of a raw depth raster of any depth type; constant input -> zeros
    cv::Mat1d normalize_depth(const cv::Mat& raw, DepthPolarity polarity);

    /// lists group directories under a dataset root; a root that itself holds rgb/ is a single group
    std::vector<fs::path> find_groups(const fs::path& dataset_root);

    /// 8-bit grayscale raster (e.g. an external intra map); throws on unreadable files
    cv::Mat1b read_gray(const fs::path& path);

    /// writes round(score*255) as a single-channel 8-bit PNG, creating parent directories
    void save_saliency(const SaliencyMap& map, const fs::path& path);

    /// reads a .bin (little-endian float32) or .txt (one real per line) sidecar of exactly 4096 values
    std::vector<float> load_semantic(const fs::path& path);

} // namespace cosal
