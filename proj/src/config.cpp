#include "sla/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sla {

Config Config::from_file(const std::string& path) {
    Config cfg;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        long v = std::stol(val);
        if (key == "spherical_sym_dim_cap") cfg.spherical_sym_dim_cap = v;
        else if (key == "rank_sym_dim_cap") cfg.rank_sym_dim_cap = v;
        else if (key == "rank_sym_var_cap") cfg.rank_sym_var_cap = (unsigned)v;
        else if (key == "samples") cfg.samples = (int)v;
        else if (key == "sample_range") cfg.sample_range = v;
        else if (key == "seed") cfg.seed = (uint64_t)v;
        else if (key == "degree_cap") cfg.degree_cap = (int)v;
        else if (key == "cr_dim_cap") cfg.cr_dim_cap = v;
        else if (key == "candidate_bound") cfg.candidate_bound = (int)v;
        else if (key == "jobs") cfg.jobs = (int)v;
        else throw std::invalid_argument("unknown config key: " + key);
    }
    return cfg;
}

}  // namespace sla
