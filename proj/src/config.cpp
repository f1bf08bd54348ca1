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

#include "cosal/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "cosal/error.hpp"

namespace cosal {

namespace {

    std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t\r\n");
        if(b==std::string::npos)
            return {};
        const auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b,e-b+1);
    }

    std::string lower(std::string s) {
        std::transform(s.begin(),s.end(),s.begin(),[](unsigned char c){return (char)std::tolower(c);});
        return s;
    }

    double to_double(const std::string& key, const std::string& value) {
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(value,&pos);
        } catch(const std::exception&) {
            throw Error("config key '"+key+"': expected a real, got '"+value+"'");
        }
        if(pos!=value.size() || !std::isfinite(v))
            throw Error("config key '"+key+"': expected a real, got '"+value+"'");
        return v;
    }

    long long to_int(const std::string& key, const std::string& value) {
        long long v = 0;
        const auto [ptr,ec] = std::from_chars(value.data(),value.data()+value.size(),v);
        if(ec!=std::errc() || ptr!=value.data()+value.size())
            throw Error("config key '"+key+"': expected an integer, got '"+value+"'");
        return v;
    }

    bool to_bool(const std::string& key, const std::string& value) {
        const std::string v = lower(value);
        if(v=="true" || v=="1" || v=="yes" || v=="on")
            return true;
        if(v=="false" || v=="0" || v=="no" || v=="off")
            return false;
        throw Error("config key '"+key+"': expected a boolean, got '"+value+"'");
    }

    /// shortest text that parses back to the same double
    std::string fmt_real(double v) {
        char buf[32];
        const auto [ptr,ec] = std::to_chars(buf,buf+sizeof(buf),v);
        return std::string(buf,ptr);
    }

} // namespace

void RunConfig::validate() const {
    const double gamma_sum = gamma[0]+gamma[1]+gamma[2]+gamma[3];
    if(std::abs(gamma_sum-1.0)>1e-9)
        throw Error("config: gamma weights must sum to 1 (got "+fmt_real(gamma_sum)+")");
    for(double g : gamma)
        if(g<0.0)
            throw Error("config: gamma weights must be nonnegative");
    const std::pair<const char*,double> thresholds[] = {{"t1",t1},{"t2",t2},{"t_min",t_min},{"t_max",t_max}};
    for(const auto& [name,v] : thresholds)
        if(!(v>=0.0 && v<=1.0))
            throw Error(std::string("config: threshold ")+name+" must lie in [0,1]");
    if(max_matches<1)
        throw Error("config: max_matches must be >= 1");
    if(cluster_count<2)
        throw Error("config: cluster_count must be >= 2");
    if(superpixel_count<4)
        throw Error("config: superpixel_count must be >= 4");
    if(!(sigma_sq>0.0))
        throw Error("config: sigma_sq must be > 0");
    if(!(beta_sq>0.0))
        throw Error("config: beta_sq must be > 0");
    if(depth_levels<2)
        throw Error("config: depth_levels must be >= 2");
    if(!(slic_compactness>0.0) || slic_iterations<1)
        throw Error("config: slic_compactness must be > 0 and slic_iterations >= 1");
}

std::string to_string(Regime regime) {
    switch(regime) {
        case Regime::LP: return "lp";
        case Regime::SLP: return "slp";
        case Regime::CLP: return "clp";
    }
    return "clp";
}

Regime parse_regime(const std::string& text) {
    const std::string v = lower(text);
    if(v=="lp") return Regime::LP;
    if(v=="slp") return Regime::SLP;
    if(v=="clp") return Regime::CLP;
    throw Error("unknown optimizer regime '"+text+"' (expected lp, slp or clp)");
}

void set_config_value(RunConfig& c, const std::string& raw_key, const std::string& raw_value) {
    const std::string key = lower(trim(raw_key));
    const std::string value = trim(raw_value);
    if(key=="superpixel_count") c.superpixel_count = (int)to_int(key,value);
    else if(key=="cluster_count") c.cluster_count = (int)to_int(key,value);
    else if(key=="max_matches") c.max_matches = (int)to_int(key,value);
    else if(key=="sigma_sq") c.sigma_sq = to_double(key,value);
    else if(key=="t1") c.t1 = to_double(key,value);
    else if(key=="t2") c.t2 = to_double(key,value);
    else if(key=="t_min") c.t_min = to_double(key,value);
    else if(key=="t_max") c.t_max = to_double(key,value);
    else if(key=="gamma") {
        std::vector<double> vals;
        std::stringstream ss(value);
        std::string tok;
        while(std::getline(ss,tok,','))
            vals.push_back(to_double(key,trim(tok)));
        if(vals.size()!=4)
            throw Error("config key 'gamma': expected 4 comma-separated reals");
        std::copy(vals.begin(),vals.end(),c.gamma.begin());
    }
    else if(key=="gamma1") c.gamma[0] = to_double(key,value);
    else if(key=="gamma2") c.gamma[1] = to_double(key,value);
    else if(key=="gamma3") c.gamma[2] = to_double(key,value);
    else if(key=="gamma4") c.gamma[3] = to_double(key,value);
    else if(key=="beta_sq") c.beta_sq = to_double(key,value);
    else if(key=="optimizer") c.optimizer = parse_regime(value);
    else if(key=="depth_polarity") {
        const std::string v = lower(value);
        if(v=="near_is_high") c.depth_polarity = DepthPolarity::near_is_high;
        else if(v=="near_is_low") c.depth_polarity = DepthPolarity::near_is_low;
        else throw Error("config key 'depth_polarity': expected near_is_high or near_is_low");
    }
    else if(key=="rng_seed") {
        const long long v = to_int(key,value);
        if(v<0)
            throw Error("config key 'rng_seed': must be nonnegative");
        c.rng_seed = (std::uint64_t)v;
    }
    else if(key=="depth_levels") c.depth_levels = (int)to_int(key,value);
    else if(key=="cv_mode") {
        const std::string v = lower(value);
        if(v=="mean_over_std") c.cv_mode = CvMode::mean_over_std;
        else if(v=="std_over_mean") c.cv_mode = CvMode::std_over_mean;
        else throw Error("config key 'cv_mode': expected mean_over_std or std_over_mean");
    }
    else if(key=="use_optimized_inter_seeds") c.use_optimized_inter_seeds = to_bool(key,value);
    else if(key=="no_depth") c.no_depth = to_bool(key,value);
    else if(key=="intra") {
        const std::string v = lower(value);
        if(v=="baseline") c.intra = IntraProvider::baseline;
        else if(v=="file") c.intra = IntraProvider::file;
        else throw Error("config key 'intra': expected baseline or file");
    }
    else if(key=="slic_compactness") c.slic_compactness = to_double(key,value);
    else if(key=="slic_iterations") c.slic_iterations = (int)to_int(key,value);
    else
        throw Error("config: unknown key '"+raw_key+"'");
}

RunConfig parse_config(const std::string& text, RunConfig config) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while(std::getline(in,line)) {
        ++lineno;
        if(const auto hash = line.find('#'); hash!=std::string::npos)
            line.erase(hash);
        line = trim(line);
        if(line.empty())
            continue;
        const auto eq = line.find('=');
        if(eq==std::string::npos)
            throw Error("config line "+std::to_string(lineno)+": expected 'key = value'");
        set_config_value(config,line.substr(0,eq),line.substr(eq+1));
    }
    return config;
}

RunConfig parse_config(const std::string& text) {
    return parse_config(text,RunConfig{});
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if(!in)
        throw Error("cannot read config file "+path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string to_text(const RunConfig& c) {
    std::ostringstream o;
    o << "superpixel_count = " << c.superpixel_count << "\n"
      << "cluster_count = " << c.cluster_count << "\n"
      << "max_matches = " << c.max_matches << "\n"
      << "sigma_sq = " << fmt_real(c.sigma_sq) << "\n"
      << "t1 = " << fmt_real(c.t1) << "\n"
      << "t2 = " << fmt_real(c.t2) << "\n"
      << "t_min = " << fmt_real(c.t_min) << "\n"
      << "t_max = " << fmt_real(c.t_max) << "\n"
      << "gamma = " << fmt_real(c.gamma[0]) << ", " << fmt_real(c.gamma[1]) << ", "
                    << fmt_real(c.gamma[2]) << ", " << fmt_real(c.gamma[3]) << "\n"
      << "beta_sq = " << fmt_real(c.beta_sq) << "\n"
      << "optimizer = " << to_string(c.optimizer) << "\n"
      << "depth_polarity = " << (c.depth_polarity==DepthPolarity::near_is_high?"near_is_high":"near_is_low") << "\n"
      << "rng_seed = " << c.rng_seed << "\n"
      << "depth_levels = " << c.depth_levels << "\n"
      << "cv_mode = " << (c.cv_mode==CvMode::mean_over_std?"mean_over_std":"std_over_mean") << "\n"
      << "use_optimized_inter_seeds = " << (c.use_optimized_inter_seeds?"true":"false") << "\n"
      << "no_depth = " << (c.no_depth?"true":"false") << "\n"
      << "intra = " << (c.intra==IntraProvider::baseline?"baseline":"file") << "\n"
      << "slic_compactness = " << fmt_real(c.slic_compactness) << "\n"
      << "slic_iterations = " << c.slic_iterations << "\n";
    return o.str();
}

} // namespace cosal
