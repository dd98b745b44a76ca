#pragma once

#include <random>

#include "sla/induced.hpp"

namespace sla {

/* Joint kernel of the positive nilpotent part, per weight, split by parity. */
struct SingularSpace {
    Weight wt;
    std::vector<std::vector<Scalar>> even_vecs;
    std::vector<std::vector<Scalar>> odd_vecs;
};
std::vector<SingularSpace> singular_vectors(const Rep& r, const Borel& b);

/* Smallest operator-stable subspace containing the vectors; the returned
 * basis is weight- and parity-homogeneous. */
std::vector<std::vector<Scalar>> stable_span(const Rep& r, const std::vector<std::vector<Scalar>>& vecs);

/* Largest operator-stable subspace contained in the kernel of the projection
 * onto the given coordinates. */
std::vector<std::vector<Scalar>> maximal_submodule_avoiding(const Rep& r,
                                                            const std::vector<size_t>& coords);

/* Subrepresentation on an operator-stable homogeneous subspace (REJECTs
 * unstable input). */
Rep sub_rep(const Rep& r, const std::vector<std::vector<Scalar>>& basis);
/* Quotient by an operator-stable homogeneous subspace. */
Rep quotient_rep(const Rep& r, const std::vector<std::vector<Scalar>>& sub_basis);

/* Quotient by the largest submodule missing the highest-weight space; the
 * result is certified by verify_representation. */
Rep irreducible_quotient(const HighestWeightModule& hw);
/* The radical (largest proper submodule) of a module generated by its
 * highest-weight space. */
std::vector<std::vector<Scalar>> radical_of_hw_module(const HighestWeightModule& hw);

std::vector<Mat> image_algebra(const Rep& r);  // unital span closure of the operators
bool is_completely_reducible(const Rep& r, size_t dim_cap = 150);

/* Irreducibility via singular vectors: every sampled nonzero singular vector
 * must generate the whole module. */
bool is_irreducible(const Rep& r, const Borel& b, std::mt19937_64& rng, int samples_per_space = 5);

/* Sum of the irreducible submodules found through singular vectors. */
std::vector<std::vector<Scalar>> socle_basis(const Rep& r, const Borel& b, std::mt19937_64& rng);
std::vector<SuperDim> socle_filtration(const Rep& r, const Borel& b, std::mt19937_64& rng,
                                       std::vector<std::map<Weight, SuperDim>>* layer_weights = nullptr);

SuperDim basis_sdim(const Rep& r, const std::vector<std::vector<Scalar>>& basis);

}  // namespace sla
