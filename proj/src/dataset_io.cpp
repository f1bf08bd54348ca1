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

#include "cosal/dataset_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "cosal/error.hpp"

namespace cosal {

namespace {

    bool is_raster_ext(const fs::path& p) {
        static const std::set<std::string> exts = {".png",".jpg",".jpeg",".bmp",".tif",".tiff",".pgm",".ppm"};
        std::string e = p.extension().string();
        std::transform(e.begin(),e.end(),e.begin(),[](unsigned char c){return (char)std::tolower(c);});
        return exts.count(e)>0;
    }

    /// stem -> path for every matching regular file of a folder
    std::map<std::string,fs::path> list_stems(const fs::path& dir, bool (*accept)(const fs::path&)) {
        std::map<std::string,fs::path> out;
        for(const auto& de : fs::directory_iterator(dir)) {
            if(!de.is_regular_file() || !accept(de.path()))
                continue;
            const std::string stem = de.path().stem().string();
            if(!out.emplace(stem,de.path()).second)
                throw Error("duplicate stem '"+stem+"' in "+dir.string());
        }
        return out;
    }

    bool is_semantic_ext(const fs::path& p) {
        return p.extension()==".bin" || p.extension()==".txt";
    }

    void check_same_size(const cv::Mat& a, const cv::Mat& b, const fs::path& pb) {
        if(a.size()!=b.size())
            throw Error("dimension mismatch: "+pb.string()+" is "+std::to_string(b.cols)+"x"+std::to_string(b.rows)+
                        ", expected "+std::to_string(a.cols)+"x"+std::to_string(a.rows));
    }

} // namespace

GroupManifest scan_group(const fs::path& root_dir) {
    const fs::path rgb_dir = root_dir/"rgb", depth_dir = root_dir/"depth";
    if(!fs::is_directory(rgb_dir))
        throw Error("missing folder "+rgb_dir.string());
    if(!fs::is_directory(depth_dir))
        throw Error("missing folder "+depth_dir.string());
    const auto rgb = list_stems(rgb_dir,is_raster_ext);
    const auto depth = list_stems(depth_dir,is_raster_ext);
    for(const auto& [stem,p] : depth)
        if(!rgb.count(stem))
            throw Error("stem mismatch: '"+stem+"' present in depth/ but not in rgb/");
    for(const auto& [stem,p] : rgb)
        if(!depth.count(stem))
            throw Error("stem mismatch: '"+stem+"' present in rgb/ but not in depth/");
    std::map<std::string,fs::path> gt, intra, semantic;
    if(fs::is_directory(root_dir/"gt"))
        gt = list_stems(root_dir/"gt",is_raster_ext);
    if(fs::is_directory(root_dir/"intra"))
        intra = list_stems(root_dir/"intra",is_raster_ext);
    if(fs::is_directory(root_dir/"semantic"))
        semantic = list_stems(root_dir/"semantic",is_semantic_ext);

    GroupManifest manifest;
    manifest.group_name = fs::absolute(root_dir).lexically_normal().filename().string();
    if(manifest.group_name.empty())
        manifest.group_name = fs::absolute(root_dir).lexically_normal().parent_path().filename().string();
    for(const auto& [stem,rgb_path] : rgb) { // std::map iterates in sorted stem order
        GroupEntry e;
        e.stem = stem;
        e.rgb_path = rgb_path;
        e.depth_path = depth.at(stem);
        if(auto it = gt.find(stem); it!=gt.end()) e.gt_path = it->second;
        if(auto it = intra.find(stem); it!=intra.end()) e.intra_path = it->second;
        if(auto it = semantic.find(stem); it!=semantic.end()) e.semantic_path = it->second;
        manifest.entries.push_back(std::move(e));
    }
    if(manifest.entries.size()<2)
        throw Error("group "+root_dir.string()+" holds "+std::to_string(manifest.entries.size())+" image(s); at least 2 are required");
    return manifest;
}

cv::Mat1d normalize_depth(const cv::Mat& raw, DepthPolarity polarity) {
    if(raw.empty() || raw.channels()!=1)
        throw Error("depth raster must be a nonempty single-channel image");
    cv::Mat1d d;
    raw.convertTo(d,CV_64F);
    double lo = 0, hi = 0;
    cv::minMaxLoc(d,&lo,&hi);
    if(!(hi>lo))
        return cv::Mat1d::zeros(d.size());
    d = (d-lo)/(hi-lo);
    if(polarity==DepthPolarity::near_is_low)
        d = 1.0-d;
    return d;
}

cv::Mat1b read_gray(const fs::path& path) {
    cv::Mat img = cv::imread(path.string(),cv::IMREAD_GRAYSCALE);
    if(img.empty())
        throw Error("unreadable raster "+path.string());
    return img;
}

RgbdImage load_entry(const GroupEntry& entry, DepthPolarity polarity) {
    RgbdImage out;
    cv::Mat bgr = cv::imread(entry.rgb_path.string(),cv::IMREAD_COLOR);
    if(bgr.empty())
        throw Error("unreadable raster "+entry.rgb_path.string());
    cv::cvtColor(bgr,out.rgb,cv::COLOR_BGR2RGB);
    if(out.rgb.rows<kMinImageSide || out.rgb.cols<kMinImageSide)
        throw Error("image "+entry.rgb_path.string()+" is smaller than "+std::to_string(kMinImageSide)+" pixels on a side");
    cv::Mat raw_depth = cv::imread(entry.depth_path.string(),cv::IMREAD_ANYDEPTH|cv::IMREAD_GRAYSCALE);
    if(raw_depth.empty())
        throw Error("unreadable raster "+entry.depth_path.string());
    check_same_size(out.rgb,raw_depth,entry.depth_path);
    out.depth = normalize_depth(raw_depth,polarity);
    if(entry.gt_path) {
        cv::Mat1b gt = read_gray(*entry.gt_path);
        check_same_size(out.rgb,gt,*entry.gt_path);
        out.gt = cv::Mat1b(gt>127)/255;
    }
    if(entry.intra_path)
        check_same_size(out.rgb,read_gray(*entry.intra_path),*entry.intra_path);
    return out;
}

std::pair<GroupManifest,std::vector<RgbdImage>> load_group(const fs::path& root_dir, const RunConfig& config) {
    GroupManifest manifest = scan_group(root_dir);
    std::vector<RgbdImage> images;
    images.reserve(manifest.entries.size());
    for(const auto& e : manifest.entries)
        images.push_back(load_entry(e,config.depth_polarity));
    return {std::move(manifest),std::move(images)};
}

std::vector<fs::path> find_groups(const fs::path& dataset_root) {
    if(!fs::is_directory(dataset_root))
        throw Error("dataset root "+dataset_root.string()+" is not a directory");
    if(fs::is_directory(dataset_root/"rgb"))
        return {dataset_root};
    std::vector<fs::path> groups;
    for(const auto& de : fs::directory_iterator(dataset_root))
        if(de.is_directory() && fs::is_directory(de.path()/"rgb"))
            groups.push_back(de.path());
    std::sort(groups.begin(),groups.end());
    if(groups.empty())
        throw Error("no group folders (with an rgb/ subfolder) under "+dataset_root.string());
    return groups;
}

void save_saliency(const SaliencyMap& map, const fs::path& path) {
    for(double s : map.scores)
        if(!(s>=0.0 && s<=1.0))
            throw Error("saliency scores must lie in [0,1] before saving "+path.string());
    if(path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(),ec);
    }
    const cv::Mat1b img = quantize(map.raster);
    bool ok = false;
    try {
        ok = cv::imwrite(path.string(),img);
    } catch(const cv::Exception&) {
        ok = false;
    }
    if(!ok)
        throw Error("cannot write "+path.string());
}

std::vector<float> load_semantic(const fs::path& path) {
    std::vector<float> out;
    if(path.extension()==".bin") {
        std::ifstream in(path,std::ios::binary);
        if(!in)
            throw Error("cannot read semantic sidecar "+path.string());
        std::vector<char> bytes((std::istreambuf_iterator<char>(in)),std::istreambuf_iterator<char>());
        if(bytes.size()!=kSemanticDim*4)
            throw Error("semantic sidecar "+path.string()+" holds "+std::to_string(bytes.size())+
                        " bytes, expected "+std::to_string(kSemanticDim*4));
        out.resize(kSemanticDim);
        for(std::size_t i=0; i<kSemanticDim; ++i) {
            std::uint32_t bits = 0;
            for(int b=3; b>=0; --b)
                bits = (bits<<8)|(std::uint8_t)bytes[i*4+b];
            out[i] = std::bit_cast<float>(bits);
        }
    }
    else if(path.extension()==".txt") {
        std::ifstream in(path);
        if(!in)
            throw Error("cannot read semantic sidecar "+path.string());
        std::string line;
        while(std::getline(in,line)) {
            if(line.find_first_not_of(" \t\r")==std::string::npos)
                continue;
            try {
                out.push_back(std::stof(line));
            } catch(const std::exception&) {
                throw Error("semantic sidecar "+path.string()+": malformed value '"+line+"'");
            }
        }
        if(out.size()!=kSemanticDim)
            throw Error("semantic sidecar "+path.string()+" holds "+std::to_string(out.size())+
                        " values, expected "+std::to_string(kSemanticDim));
    }
    else
        throw Error("semantic sidecar "+path.string()+" must have extension .bin or .txt");
    for(float v : out)
        if(!std::isfinite(v))
            throw Error("semantic sidecar "+path.string()+" contains a non-finite value");
    return out;
}

} // namespace cosal
