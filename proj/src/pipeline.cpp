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

#include "cosal/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "cosal/error.hpp"
#include "cosal/intra_saliency.hpp"

namespace cosal {

namespace {

    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point t0) {
        return std::chrono::duration<double>(Clock::now()-t0).count();
    }

    constexpr std::uint64_t kClusterStream = 0x100;
    constexpr std::uint64_t kTextonStream = 0x200;

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    // splitmix64 finalizer
    std::uint64_t z = base+0x9e3779b97f4a7c15ULL*(stream+1);
    z = (z^(z>>30))*0xbf58476d1ce4e5b9ULL;
    z = (z^(z>>27))*0x94d049bb133111ebULL;
    return z^(z>>31);
}

void parallel_for(int n, const std::function<void(int)>& body) {
    const int workers = std::max(1,std::min(n,(int)std::thread::hardware_concurrency()));
    if(workers<=1) {
        for(int i=0; i<n; ++i)
            body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    for(int w=0; w<workers; ++w)
        threads.emplace_back([&] {
            for(int i=next++; i<n; i=next++) {
                try {
                    body(i);
                } catch(...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if(!error)
                        error = std::current_exception();
                }
            }
        });
    for(std::thread& t : threads)
        t.join();
    if(error)
        std::rethrow_exception(error);
}

GroupInputs load_group_inputs(const fs::path& group_dir, const RunConfig& config) {
    GroupInputs in;
    auto [manifest,images] = load_group(group_dir,config);
    in.manifest = std::move(manifest);
    in.images = std::move(images);
    for(const GroupEntry& e : in.manifest.entries) {
        if(config.intra==IntraProvider::file) {
            if(!e.intra_path)
                throw Error("group '"+in.manifest.group_name+"', image '"+e.stem+"': no intra map in intra/ (required by intra = file)");
            in.intra_rasters.emplace_back(read_gray(*e.intra_path));
        }
        else
            in.intra_rasters.emplace_back(std::nullopt);
        if(e.semantic_path)
            in.semantic.emplace_back(load_semantic(*e.semantic_path));
        else
            in.semantic.emplace_back(std::nullopt);
    }
    return in;
}

GroupResult run_pipeline(const std::vector<RgbdImage>& images,
                         const std::vector<std::optional<cv::Mat1b>>& intra_rasters,
                         const std::vector<std::optional<std::vector<float>>>& semantic,
                         const RunConfig& config) {
    config.validate();
    const int N = (int)images.size();
    if(N<2)
        throw Error("a group needs at least 2 images (got "+std::to_string(N)+")");
    if((int)intra_rasters.size()!=N || (int)semantic.size()!=N)
        throw Error("intra rasters and semantic vectors must be given per image");
    GroupResult res;
    res.images.resize((size_t)N);

    auto t0 = Clock::now();
    parallel_for(N,[&](int i) {
        ImageResult& r = res.images[i];
        try {
            r.superpixels = segment(images[i],config.superpixel_count,config.rng_seed,{config.slic_compactness,config.slic_iterations});
        } catch(const Error& e) {
            throw Error("image "+std::to_string(i)+", segmentation: "+e.what());
        }
        r.measured_conf = depth_confidence(images[i].depth,config.depth_levels,config.cv_mode);
        r.conf = config.no_depth?disabled_depth_confidence(config.depth_levels):r.measured_conf;
    });
    res.timings.segmentation_s = seconds_since(t0);

    t0 = Clock::now();
    parallel_for(N,[&](int i) {
        ImageResult& r = res.images[i];
        if(config.intra==IntraProvider::file) {
            if(!intra_rasters[i])
                throw Error("image "+std::to_string(i)+", intra: no intra raster supplied");
            r.intra = intra_from_file(r.superpixels,*intra_rasters[i]);
        }
        else
            r.intra = intra_baseline(images[i],r.superpixels,r.conf);
    });
    res.timings.intra_s = seconds_since(t0);

    t0 = Clock::now();
    const TextonCodebook codebook = fit_texton_codebook(images,derive_seed(config.rng_seed,kTextonStream));
    parallel_for(N,[&](int i) {
        ImageResult& r = res.images[i];
        if(r.superpixels.size()<config.cluster_count)
            throw Error("image "+std::to_string(i)+", clustering: only "+std::to_string(r.superpixels.size())+
                        " superpixels for "+std::to_string(config.cluster_count)+" clusters");
        r.clusters = cluster_superpixels(r.superpixels,r.conf,config.cluster_count,derive_seed(config.rng_seed,kClusterStream+i));
        r.descriptor = describe_image(images[i],r.intra,r.conf,codebook,semantic[i]);
    });
    res.matches.assign((size_t)N,std::vector<MatchMatrix>((size_t)N));
    res.pairs.assign((size_t)N,std::vector<PairSimilarity>((size_t)N));
    res.phi = cv::Mat1d::ones(N,N);
    parallel_for(N*N,[&](int idx) {
        const int i = idx/N, j = idx%N;
        if(i==j)
            return;
        const ImageResult& a = res.images[i];
        const ImageResult& b = res.images[j];
        const SimilarityMatrix sim = similarity_matrix(a.superpixels,b.superpixels,a.conf,b.conf,config.sigma_sq);
        const CandidateSets phi1 = phi1_knn(sim,config.max_matches);
        const CandidateSets phi2 = phi2_saliency_consistent(a.intra.scores,b.intra.scores,config.t1);
        const CandidateSets phi3 = phi3_cluster_match(a.clusters,b.clusters);
        MatchMatrix mm = match_matrix(phi1,phi2,phi3,b.superpixels.size());
        mm.source_i = i;
        mm.source_j = j;
        res.matches[i][j] = std::move(mm);
        res.pairs[i][j] = pair_similarity(a.descriptor,b.descriptor,config.t2);
        res.phi(i,j) = std::clamp(res.pairs[i][j].phi,0.0,1.0);
    });
    std::vector<SaliencyMap> intra_maps;
    std::vector<SuperpixelMap> sps;
    for(const ImageResult& r : res.images) {
        intra_maps.push_back(r.intra);
        sps.push_back(r.superpixels);
    }
    parallel_for(N,[&](int i) {
        res.images[i].inter = inter_map(sps,intra_maps,res.matches,res.phi,i);
    });
    res.timings.inter_s = seconds_since(t0);

    t0 = Clock::now();
    const OptimizeParams params{config.t_min,config.t_max,config.use_optimized_inter_seeds};
    parallel_for(N,[&](int i) {
        ImageResult& r = res.images[i];
        const AffinityGraph graph = affinity(r.superpixels,r.conf,config.sigma_sq);
        OptimizeResult opt = optimize(r.intra,r.inter,graph,config.optimizer,params,r.superpixels.labels);
        r.intra_opt = std::move(opt.intra_opt);
        r.inter_opt = std::move(opt.inter_opt);
        r.intra_seeds = std::move(opt.intra_seeds);
        r.inter_seeds = std::move(opt.inter_seeds);
        r.cosal = fuse(r.intra,r.inter,r.intra_opt,r.inter_opt,config.gamma);
    });
    res.timings.optimization_s = seconds_since(t0);
    return res;
}

void persist_group(const GroupResult& result, const GroupManifest& manifest, const fs::path& out_dir) {
    if(result.images.size()!=manifest.entries.size())
        throw Error("result and manifest disagree on the number of images");
    const fs::path group_dir = out_dir/manifest.group_name;
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for(size_t i=0; i<result.images.size(); ++i) {
        const ImageResult& r = result.images[i];
        const std::string& stem = manifest.entries[i].stem;
        const SaliencyMap* maps[] = {&r.intra,&r.inter,&r.intra_opt,&r.inter_opt,&r.cosal};
        nlohmann::ordered_json entry;
        entry["stem"] = stem;
        for(size_t f=0; f<map_families().size(); ++f) {
            const fs::path rel = fs::path(map_families()[f])/(stem+".png");
            save_saliency(*maps[f],group_dir/rel);
            entry[map_families()[f]] = rel.generic_string();
        }
        files.push_back(entry);
    }
    nlohmann::ordered_json doc;
    doc["group"] = manifest.group_name;
    doc["images"] = files;
    std::ofstream out(group_dir/"manifest.json");
    if(!out)
        throw Error("cannot write "+(group_dir/"manifest.json").string());
    out << doc.dump(2) << '\n';
}

} // namespace cosal
