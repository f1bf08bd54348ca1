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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <opencv2/imgcodecs.hpp>

#include "cosal/config.hpp"
#include "cosal/dataset_io.hpp"
#include "cosal/error.hpp"
#include "cosal/evaluation.hpp"
#include "cosal/pipeline.hpp"

namespace fs = std::filesystem;
using namespace cosal;

namespace {

    struct CommonOptions {
        std::string dataset;
        std::string out;
        std::string config_file;
        std::string regime;
        long long seed = -1;
        bool no_depth = false;
        std::string intra;
    };

    void add_common(CLI::App* cmd, CommonOptions& o) {
        cmd->add_option("--dataset",o.dataset,"dataset root (group folders, or a single group with rgb/)");
        cmd->add_option("--out",o.out,"output directory");
        cmd->add_option("--config",o.config_file,"key = value config file")->check(CLI::ExistingFile);
        cmd->add_option("--regime",o.regime,"optimizer regime")->check(CLI::IsMember({"lp","slp","clp"},CLI::ignore_case));
        cmd->add_option("--seed",o.seed,"rng seed")->check(CLI::NonNegativeNumber);
        cmd->add_flag("--no-depth",o.no_depth,"disable depth (lambda_d = 0, alpha_d = 0)");
        cmd->add_option("--intra",o.intra,"intra saliency provider")->check(CLI::IsMember({"file","baseline"},CLI::ignore_case));
    }

    /// file values first, then flags
    RunConfig resolve_config(const CommonOptions& o) {
        RunConfig c = o.config_file.empty()?RunConfig{}:load_config(o.config_file);
        if(!o.regime.empty()) set_config_value(c,"optimizer",o.regime);
        if(o.seed>=0) c.rng_seed = (std::uint64_t)o.seed;
        if(o.no_depth) c.no_depth = true;
        if(!o.intra.empty()) set_config_value(c,"intra",o.intra);
        c.validate();
        return c;
    }

    void require(const std::string& value, const char* flag) {
        if(value.empty())
            throw Error(std::string("missing required option ")+flag);
    }

    int cmd_run(const CommonOptions& o) {
        require(o.dataset,"--dataset");
        require(o.out,"--out");
        const RunConfig config = resolve_config(o);
        const std::vector<fs::path> groups = find_groups(o.dataset);
        fs::create_directories(o.out);
        {
            std::ofstream cfg(fs::path(o.out)/"config.txt");
            cfg << to_text(config);
        }
        for(const fs::path& g : groups) {
            const std::string name = g.filename().string();
            GroupInputs in;
            try {
                in = load_group_inputs(g,config);
            } catch(const Error& e) {
                throw Error("group '"+name+"', stage load: "+e.what());
            }
            GroupResult res;
            try {
                res = run_pipeline(in,config);
            } catch(const Error& e) {
                throw Error("group '"+name+"', stage pipeline: "+e.what());
            }
            persist_group(res,in.manifest,o.out);
            const StageTimings& t = res.timings;
            const double total = t.segmentation_s+t.intra_s+t.inter_s+t.optimization_s;
            auto pct = [total](double v) {return total>0?100.0*v/total:0.0;};
            std::clog << std::fixed << std::setprecision(3)
                      << "[cosal] group " << name << ": " << in.images.size() << " images, " << total << " s"
                      << " (segmentation " << pct(t.segmentation_s) << "%, intra " << pct(t.intra_s)
                      << "%, inter " << pct(t.inter_s) << "%, optimization " << pct(t.optimization_s) << "%)\n";
        }
        return 0;
    }

    std::vector<std::string> split_methods(const std::vector<std::string>& raw) {
        std::vector<std::string> out;
        for(const std::string& r : raw) {
            std::stringstream ss(r);
            std::string tok;
            while(std::getline(ss,tok,','))
                if(!tok.empty())
                    out.push_back(tok);
        }
        return out;
    }

    int cmd_eval(const CommonOptions& o, const std::vector<std::string>& raw_methods, bool plot) {
        require(o.dataset,"--dataset");
        require(o.out,"--out");
        const std::vector<std::string> methods = split_methods(raw_methods);
        if(methods.empty())
            throw Error("eval needs at least one method (--methods)");
        const RunConfig config = resolve_config(o);
        EvalReport report;
        for(const fs::path& g : find_groups(o.dataset)) {
            const GroupManifest manifest = scan_group(g);
            for(const std::string& method : methods)
                for(const GroupEntry& e : manifest.entries) {
                    if(!e.gt_path)
                        throw Error("missing gt for group '"+manifest.group_name+"', image '"+e.stem+"'");
                    const cv::Mat1b gt = cv::Mat1b(read_gray(*e.gt_path)>127)/255;
                    const fs::path map_path = fs::path(o.out)/manifest.group_name/method/(e.stem+".png");
                    if(!fs::exists(map_path))
                        throw Error("missing saliency map "+map_path.string());
                    ImageScores s = evaluate_image(read_gray(map_path),gt,config.beta_sq);
                    s.group = manifest.group_name;
                    s.image = e.stem;
                    s.method = method;
                    report.per_image.push_back(std::move(s));
                }
        }
        report.per_group = aggregate(report.per_image);
        write_report(report,o.out);
        for(const GroupScores& g : report.per_group)
            std::cout << std::fixed << std::setprecision(4) << g.group << '\t' << g.method
                      << "\tF_adaptive=" << g.f_adaptive << "\tF_max=" << g.f_max << "\tMAE=" << g.mae << '\n';
        if(plot) {
            std::map<std::string,std::vector<std::pair<std::string,PrCurve>>> by_group;
            for(const GroupScores& g : report.per_group)
                by_group[g.group].emplace_back(g.method,g.pr);
            for(const auto& [group,curves] : by_group) {
                const fs::path p = fs::path(o.out)/(group+"_pr.png");
                if(!cv::imwrite(p.string(),render_pr_plot(group,curves)))
                    throw Error("cannot write "+p.string());
            }
        }
        return 0;
    }

    cv::Mat3b colorize_labels(const cv::Mat1i& labels) {
        cv::Mat3b out(labels.size());
        for(int y=0; y<labels.rows; ++y)
            for(int x=0; x<labels.cols; ++x) {
                const std::uint64_t h = derive_seed(0,(std::uint64_t)labels(y,x));
                const bool border = (x+1<labels.cols && labels(y,x+1)!=labels(y,x)) || (y+1<labels.rows && labels(y+1,x)!=labels(y,x));
                out(y,x) = border?cv::Vec3b(0,0,0):cv::Vec3b((uchar)(h&0xff),(uchar)((h>>8)&0xff),(uchar)((h>>16)&0xff));
            }
        return out;
    }

    int cmd_inspect(const CommonOptions& o, bool show_config) {
        const RunConfig config = resolve_config(o);
        if(show_config || o.dataset.empty()) {
            std::cout << to_text(config);
            return 0;
        }
        require(o.out,"--out");
        for(const fs::path& g : find_groups(o.dataset)) {
            const GroupInputs in = load_group_inputs(g,config);
            const GroupResult res = run_pipeline(in,config);
            const fs::path dir = fs::path(o.out)/in.manifest.group_name;
            fs::create_directories(dir/"labels");
            std::ofstream conf(dir/"depth_confidence.csv");
            conf << std::setprecision(10) << "image,lambda_d,m_d,sigma_d,cv,entropy_h,levels,superpixels\n";
            std::ofstream seeds(dir/"seeds.csv");
            seeds << "image,intra_foreground,intra_background,inter_foreground,inter_background\n";
            std::cout << "group " << in.manifest.group_name << '\n';
            for(size_t i=0; i<res.images.size(); ++i) {
                const ImageResult& r = res.images[i];
                const DepthConfidence& c = r.measured_conf;
                const std::string& stem = in.manifest.entries[i].stem;
                conf << stem << ',' << c.lambda_d << ',' << c.m_d << ',' << c.sigma_d << ',' << c.cv << ','
                     << c.entropy_h << ',' << c.levels << ',' << r.superpixels.size() << '\n';
                seeds << stem << ',' << r.intra_seeds.foreground.size() << ',' << r.intra_seeds.background.size() << ','
                      << r.inter_seeds.foreground.size() << ',' << r.inter_seeds.background.size() << '\n';
                cv::imwrite((dir/"labels"/(stem+".png")).string(),colorize_labels(r.superpixels.labels));
                std::cout << "  " << stem << ": lambda_d=" << c.lambda_d << " superpixels=" << r.superpixels.size()
                          << " seeds(intra F/B)=" << r.intra_seeds.foreground.size() << '/' << r.intra_seeds.background.size()
                          << " seeds(inter F/B)=" << r.inter_seeds.foreground.size() << '/' << r.inter_seeds.background.size() << '\n';
            }
            std::ofstream pairs(dir/"pairs.csv");
            pairs << std::setprecision(10) << "i,j,d_c1,d_c2,d_c3,d_c4,d_d,d_s,alpha_c,alpha_d,alpha_s,phi,matches\n";
            std::ofstream matches(dir/"matches.csv");
            matches << "i,j,m,n\n";
            const size_t N = res.images.size();
            for(size_t i=0; i<N; ++i)
                for(size_t j=0; j<N; ++j) {
                    if(i==j)
                        continue;
                    const PairSimilarity& p = res.pairs[i][j];
                    const MatchMatrix& mm = res.matches[i][j];
                    pairs << in.manifest.entries[i].stem << ',' << in.manifest.entries[j].stem << ',' << p.d_c1 << ',' << p.d_c2 << ','
                          << (p.has_semantic?std::to_string(p.d_c3):std::string("NA")) << ',' << p.d_c4 << ',' << p.d_d << ','
                          << p.d_s << ',' << p.alpha_c << ',' << p.alpha_d << ',' << p.alpha_s << ',' << p.phi << ','
                          << cv::countNonZero(mm.ml) << '\n';
                    for(int m=0; m<mm.ml.rows; ++m)
                        for(int n=0; n<mm.ml.cols; ++n)
                            if(mm.ml(m,n))
                                matches << in.manifest.entries[i].stem << ',' << in.manifest.entries[j].stem << ',' << m << ',' << n << '\n';
                }
        }
        return 0;
    }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RGBD co-saliency detection"};
    app.require_subcommand(1);

    CommonOptions run_opts, eval_opts, inspect_opts;
    CLI::App* run = app.add_subcommand("run","segment, match, propagate and fuse every group; write all saliency maps");
    add_common(run,run_opts);

    CLI::App* eval = app.add_subcommand("eval","score saved maps against ground truth (PR, F-measure, MAE)");
    add_common(eval,eval_opts);
    std::vector<std::string> methods;
    bool plot = false;
    eval->add_option("--methods",methods,"map families to score, e.g. cosal,inter");
    eval->add_flag("--plot",plot,"also render PR curve plots");

    CLI::App* inspect = app.add_subcommand("inspect","dump depth confidence, image similarities, matches, seeds and label rasters");
    add_common(inspect,inspect_opts);
    bool show_config = false;
    inspect->add_flag("--show-config",show_config,"print the effective configuration and exit (also the behavior without --dataset)");

    CLI11_PARSE(app,argc,argv);
    try {
        if(run->parsed())
            return cmd_run(run_opts);
        if(eval->parsed())
            return cmd_eval(eval_opts,methods,plot);
        if(inspect->parsed())
            return cmd_inspect(inspect_opts,show_config);
    } catch(const std::exception& e) {
        std::cerr << "cosal: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
