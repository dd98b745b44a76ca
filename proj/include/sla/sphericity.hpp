#pragma once

#include "sla/config.hpp"
#include "sla/modtools.hpp"
#include "sla/rootdata.hpp"

namespace sla {

struct SphericityReport {
    bool spherical = false;
    bool sampled = false;  // probabilistic method flag
    size_t generic_rank = 0;
    size_t dim = 0;
    std::vector<Scalar> witness;  // full coordinate vector (odd coords zero)
    std::string borel_label;
};

/* Def-3.1 test: v with indeterminate even coordinates, matrix of columns
 * rho(X)v over a basis of b plus the scalar line, generic rank against
 * dim V.  A spherical verdict always carries an exact rational witness. */
SphericityReport is_spherical(const Rep& r, const Borel& b, const Config& cfg = {});

std::vector<std::pair<std::string, SphericityReport>> spherical_borel_scan(const Rep& r,
                                                                           const Config& cfg = {});

struct StabilizerReport {
    std::vector<std::vector<Scalar>> basis;  // algebra coordinates
    SuperDim sdim;
    bool bracket_closed = false;
    std::string hint;
};
StabilizerReport stabilizer(const Rep& r, const std::vector<Scalar>& v);

bool g0_spherical(const Rep& even_rep, const Config& cfg = {});
bool is_numerically_spherical(const Rep& r, const Config& cfg = {});

/* The even-part spherical weight patterns quoted from the classification
 * lists, including character shifts. */
bool g0_spherical_weight(const AlgebraPtr& g, const Weight& lambda);

struct CandidateWeight {
    Weight wt;
    Parity parity = Parity::even;
    std::vector<Rat> excluded_t;  // parameter values degenerating to characters
    bool osp24_redirect = false;
    std::string note;
};

std::vector<CandidateWeight> candidate_weights(const AlgebraPtr& g, Parity parity, int bound,
                                               const Config& cfg = {});
std::vector<CandidateWeight> candidate_weights(const RootDatum& rd, Parity parity, int bound,
                                               const Config& cfg = {});

/* Normal form modulo the even character lattice. */
Weight normalize_mod_characters(const AlgebraPtr& g, const Weight& lambda);

}  // namespace sla
