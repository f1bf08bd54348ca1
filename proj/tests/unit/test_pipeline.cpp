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

#include <cstdlib>
#include <sys/wait.h>

#include <json.hpp>

#include "cosal/error.hpp"
#include "cosal/pipeline.hpp"
#include "fixtures.hpp"

using namespace cosal;
namespace fs = std::filesystem;

#ifndef COSAL_CLI_PATH
#error "COSAL_CLI_PATH must point at the built command line tool"
#endif

namespace {

    struct CliResult {
        int status = -1;
        std::string output;
    };

    CliResult cli(const std::string& args, const fs::path& log) {
        const std::string cmd = std::string("\"") + COSAL_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
        const int raw = std::system(cmd.c_str());
        CliResult r;
        r.status = WIFEXITED(raw)?WEXITSTATUS(raw):-1;
        r.output = testing::read_file(log);
        return r;
    }

    std::string q(const fs::path& p) {return "\""+p.string()+"\"";}

    std::vector<RgbdImage> two_images() {
        auto g = testing::make_square_group(testing::DepthMode::clean);
        g.images.pop_back();
        return g.images;
    }

} // namespace

TEST_CASE("run_pipeline produces five bounded maps per image") {
    const auto images = two_images();
    const GroupResult r = run_pipeline(images,{std::nullopt,std::nullopt},{std::nullopt,std::nullopt},RunConfig{});
    REQUIRE(r.images.size()==2);
    CHECK(r.phi(0,0)==1.0);
    CHECK(r.phi(0,1)>=0.0);
    CHECK(r.phi(0,1)<=1.0);
    CHECK(r.phi(0,1)==doctest::Approx(r.phi(1,0)).epsilon(1e-12));
    for(const ImageResult& ir : r.images)
        for(const SaliencyMap* m : {&ir.intra,&ir.inter,&ir.intra_opt,&ir.inter_opt,&ir.cosal}) {
            CHECK(m->scores.size()==(size_t)ir.superpixels.size());
            CHECK(m->raster.size()==cv::Size(64,64));
            for(double s : m->scores) {
                CHECK(s>=0.0);
                CHECK(s<=1.0);
            }
        }
    CHECK(r.matches[0][1].ml.rows==r.images[0].superpixels.size());
    CHECK(r.matches[0][1].ml.cols==r.images[1].superpixels.size());
}

TEST_CASE("no_depth zeroes the depth confidence and the depth weight") {
    RunConfig c;
    c.no_depth = true;
    const GroupResult r = run_pipeline(two_images(),{std::nullopt,std::nullopt},{std::nullopt,std::nullopt},c);
    CHECK(r.images[0].conf.lambda_d==0.0);
    CHECK(r.images[0].measured_conf.lambda_d>0.0);
    CHECK(r.pairs[0][1].alpha_d==0.0);
    CHECK(r.pairs[0][1].alpha_c==doctest::Approx(0.5));
}

TEST_CASE("run_pipeline rejects bad inputs") {
    const auto images = two_images();
    RunConfig c;
    c.gamma = {0.5,0.5,0.5,0.5};
    CHECK_THROWS_AS(run_pipeline(images,{std::nullopt,std::nullopt},{std::nullopt,std::nullopt},c),Error);
    CHECK_THROWS_AS(run_pipeline({images[0]},{std::nullopt},{std::nullopt},RunConfig{}),Error);
    RunConfig file;
    file.intra = IntraProvider::file;
    CHECK_THROWS_AS(run_pipeline(images,{std::nullopt,std::nullopt},{std::nullopt,std::nullopt},file),Error);
}

TEST_CASE("derive_seed separates streams") {
    CHECK(derive_seed(0,1)!=derive_seed(0,2));
    CHECK(derive_seed(1,1)!=derive_seed(0,1));
    CHECK(derive_seed(5,9)==derive_seed(5,9));
}

TEST_CASE("cli run writes every map family, reruns byte-identically and evaluates") {
    testing::TempDir dir("cli");
    testing::write_group(dir.path()/"data"/"squares",two_images());
    const fs::path out1 = dir.path()/"out1", out2 = dir.path()/"out2";
    const CliResult r1 = cli("run --dataset "+q(dir.path()/"data")+" --out "+q(out1)+" --seed 3",dir.path()/"log1");
    REQUIRE_MESSAGE(r1.status==0,r1.output);
    REQUIRE(cli("run --dataset "+q(dir.path()/"data")+" --out "+q(out2)+" --seed 3",dir.path()/"log2").status==0);
    for(const std::string& family : map_families())
        for(const char* stem : {"img0","img1"}) {
            const fs::path a = out1/"squares"/family/(std::string(stem)+".png");
            REQUIRE(fs::exists(a));
            CHECK(testing::read_file(a)==testing::read_file(out2/"squares"/family/(std::string(stem)+".png")));
        }
    const auto manifest = nlohmann::json::parse(testing::read_file(out1/"squares"/"manifest.json"));
    CHECK(manifest["images"].size()==2);
    CHECK(fs::exists(out1/"config.txt"));

    const CliResult ev = cli("eval --dataset "+q(dir.path()/"data")+" --out "+q(out1)+" --methods cosal,inter --plot",dir.path()/"log3");
    REQUIRE_MESSAGE(ev.status==0,ev.output);
    const std::string scores = testing::read_file(out1/"eval_scores.csv");
    CHECK(std::count(scores.begin(),scores.end(),'\n')==1+2*2);
    CHECK(fs::exists(out1/"squares_pr.png"));

    const CliResult empty = cli("eval --dataset "+q(dir.path()/"data")+" --out "+q(out1)+" --methods ,",dir.path()/"log4");
    CHECK(empty.status!=0);
    CHECK(empty.output.find("method")!=std::string::npos);
    const CliResult missing = cli("eval --dataset "+q(dir.path()/"data")+" --out "+q(out1)+" --methods nosuch",dir.path()/"log5");
    CHECK(missing.status!=0);
    CHECK(missing.output.find("missing saliency map")!=std::string::npos);
}

TEST_CASE("cli eval on perfect maps reports max F of one and zero MAE") {
    testing::TempDir dir("perfect");
    const auto images = two_images();
    testing::write_group(dir.path()/"data"/"g",images);
    for(size_t i=0; i<images.size(); ++i) {
        fs::create_directories(dir.path()/"out"/"g"/"cosal");
        cv::imwrite((dir.path()/"out"/"g"/"cosal"/("img"+std::to_string(i)+".png")).string(),cv::Mat1b(*images[i].gt*255));
    }
    const CliResult ev = cli("eval --dataset "+q(dir.path()/"data")+" --out "+q(dir.path()/"out")+" --methods cosal",dir.path()/"log");
    REQUIRE_MESSAGE(ev.status==0,ev.output);
    const std::string groups = testing::read_file(dir.path()/"out"/"eval_groups.csv");
    std::istringstream in(testing::read_file(dir.path()/"out"/"eval_scores.csv"));
    std::string line;
    std::getline(in,line);
    int rows = 0;
    while(std::getline(in,line)) {
        ++rows;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for(std::string c; std::getline(ss,c,',');)
            cells.push_back(c);
        REQUIRE(cells.size()==6);
        CHECK(std::stod(cells[3])==doctest::Approx(1.0));
        CHECK(std::stod(cells[4])==doctest::Approx(1.0));
        CHECK(std::stod(cells[5])==doctest::Approx(0.0));
    }
    CHECK(rows==2);
    CHECK(!groups.empty());
}

TEST_CASE("cli reports configuration and input errors") {
    testing::TempDir dir("err");
    testing::write_group(dir.path()/"data"/"g",two_images());
    {
        std::ofstream cfg(dir.path()/"bad.cfg");
        cfg << "gamma = 0.5, 0.5, 0.5, 0.5\n";
    }
    const CliResult bad = cli("run --dataset "+q(dir.path()/"data")+" --out "+q(dir.path()/"o")+" --config "+q(dir.path()/"bad.cfg"),dir.path()/"log1");
    CHECK(bad.status!=0);
    CHECK(bad.output.find("gamma")!=std::string::npos);

    fs::remove(dir.path()/"data"/"g"/"depth"/"img1.png");
    const CliResult mismatch = cli("run --dataset "+q(dir.path()/"data")+" --out "+q(dir.path()/"o"),dir.path()/"log2");
    CHECK(mismatch.status!=0);
    CHECK(mismatch.output.find("stem mismatch")!=std::string::npos);

    const CliResult regime = cli("run --dataset "+q(dir.path()/"data")+" --out "+q(dir.path()/"o")+" --regime xyz",dir.path()/"log3");
    CHECK(regime.status!=0);

    const CliResult show = cli("inspect --show-config --regime slp --seed 9",dir.path()/"log4");
    CHECK(show.status==0);
    CHECK(show.output.find("optimizer = slp")!=std::string::npos);
    CHECK(show.output.find("rng_seed = 9")!=std::string::npos);
}

TEST_CASE("cli inspect dumps per-group diagnostics") {
    testing::TempDir dir("inspect");
    testing::write_group(dir.path()/"data"/"g",two_images());
    const CliResult r = cli("inspect --dataset "+q(dir.path()/"data")+" --out "+q(dir.path()/"o"),dir.path()/"log");
    REQUIRE_MESSAGE(r.status==0,r.output);
    for(const char* f : {"depth_confidence.csv","seeds.csv","pairs.csv","matches.csv"})
        CHECK(fs::exists(dir.path()/"o"/"g"/f));
    CHECK(fs::exists(dir.path()/"o"/"g"/"labels"/"img0.png"));
}
