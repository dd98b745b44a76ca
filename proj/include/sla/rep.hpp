#pragma once

#include "sla/borel.hpp"

namespace sla {

/* Representation as a list of operator matrices aligned to the algebra
 * basis, with a weight and parity attached to every coordinate of the
 * underlying space.  All constructions keep the Cartan action diagonal. */
struct Rep {
    AlgebraPtr g;
    std::vector<Mat> op;
    std::vector<Parity> vpar;
    std::vector<Weight> vwt;
    std::string provenance;

    size_t dim() const { return vpar.size(); }
    SuperDim sdim() const;
    std::map<Weight, SuperDim> weight_decomposition() const;
    std::vector<size_t> even_coords() const;
    std::vector<size_t> odd_coords() const;
    /* Apply the action of an algebra element given by basis coordinates. */
    std::vector<Scalar> act(const std::vector<Scalar>& elt_coords, const std::vector<Scalar>& v) const;
};

struct VerifyResult {
    bool ok = true;
    std::string detail;  // first failing pair/condition
};
VerifyResult verify_representation(const Rep& r);

Rep standard_module(const AlgebraPtr& g);
Rep trivial_module(const AlgebraPtr& g);
/* One-dimensional even module on a character weight (REJECTs non-characters). */
Rep character_module(const AlgebraPtr& g, const Weight& chi);
Rep u11_module();

Rep parity_shift(const Rep& r);
Rep dual(const Rep& r);
Rep tensor(const Rep& a, const Rep& b);
Rep sym_power(const Rep& r, int d, std::vector<std::vector<int>>* monomials_out = nullptr);
Rep alt_power(const Rep& r, int d);
Rep character_twist(const Rep& r, const Weight& chi);

/* The even part V_0 as a module over the purely even subalgebra. */
Rep even_block(const Rep& r, const AlgebraPtr& g_even);
std::vector<int> even_indices(const AlgebraPtr& g);

/* Canonical sort of supermonomial symbols with the Koszul sign; returns
 * false when an odd symbol repeats. */
bool sort_supermonomial(std::vector<int>& symbols, const std::vector<Parity>& par, int& sign);

}  // namespace sla
