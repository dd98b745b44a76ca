#pragma once

#include <cstdint>
#include <string>

namespace sla {

/* Tunables; parsed from a key=value file by the CLI. */
struct Config {
    size_t spherical_sym_dim_cap = 30;  // symbolic sphericity up to this module dimension
    size_t rank_sym_dim_cap = 64;       // symbolic elimination cap for generic_rank
    unsigned rank_sym_var_cap = 8;
    int samples = 20;
    long sample_range = 10;
    uint64_t seed = 20240915;
    int degree_cap = 3;       // default monoid/symmetric-power degree
    size_t cr_dim_cap = 150;  // complete-reducibility dimension cap
    int candidate_bound = 2;  // coefficient box for candidate enumeration
    int jobs = 1;

    static Config from_file(const std::string& path);
};

}  // namespace sla
