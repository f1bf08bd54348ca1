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
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "synthetic.hpp"

namespace cosal::testing {

    /// fresh directory under the system temp dir, removed on destruction
    class TempDir {
    public:
        explicit TempDir(const std::string& tag) {
            std::random_device rd;
            path_ = std::filesystem::temp_directory_path()/("cosal_"+tag+"_"+std::to_string(rd()));
            std::filesystem::remove_all(path_);
            std::filesystem::create_directories(path_);
        }
        ~TempDir() {
            std::error_code ec;
            std::filesystem::remove_all(path_,ec);
        }
        TempDir(const TempDir&) = delete;
        TempDir& operator=(const TempDir&) = delete;
        const std::filesystem::path& path() const {return path_;}
    private:
        std::filesystem::path path_;
    };

    /// writes rgb/, depth/ (16-bit) and gt/ folders for the given images under dir
    inline void write_group(const std::filesystem::path& dir, const std::vector<RgbdImage>& images) {
        for(const char* sub : {"rgb","depth","gt"})
            std::filesystem::create_directories(dir/sub);
        for(size_t i=0; i<images.size(); ++i) {
            const std::string stem = "img"+std::to_string(i);
            cv::Mat bgr;
            cv::cvtColor(images[i].rgb,bgr,cv::COLOR_RGB2BGR);
            cv::imwrite((dir/"rgb"/(stem+".png")).string(),bgr);
            cv::Mat1w depth;
            images[i].depth.convertTo(depth,CV_16U,65535.0);
            cv::imwrite((dir/"depth"/(stem+".png")).string(),depth);
            if(images[i].gt)
                cv::imwrite((dir/"gt"/(stem+".png")).string(),cv::Mat1b(*images[i].gt*255));
        }
    }

    inline std::string read_file(const std::filesystem::path& p) {
        std::ifstream in(p,std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

} // namespace cosal::testing
