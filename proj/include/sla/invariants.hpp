#pragma once

#include "sla/sphericity.hpp"

namespace sla {

/* S^d(V*) with the zeta bookkeeping degree and the mask of monomials that
 * survive setting every odd coordinate to zero. */
struct FunctionSlice {
    Rep rep;
    int degree = 0;
    std::vector<char> body_monomial;  // 1 when the monomial has no odd generator
};
FunctionSlice function_slice(const Rep& v, int d);

struct HwFunctionRow {
    Weight wt;  // includes the d*zeta tag
    long multiplicity = 0;
    bool non_nilpotent = false;
};
std::vector<HwFunctionRow> highest_weight_functions(const Rep& v, const Borel& b, int d);

struct MonoidReport {
    int degree_cap = 0;
    std::vector<HwFunctionRow> rows;  // per degree, non-nilpotent weights first
    std::vector<Weight> declared;
    bool multiplicity_free = true;
    bool closed = true;
    bool matches_declared = true;
    std::vector<std::string> diffs;
};
MonoidReport weight_monoid(const Rep& v, const Borel& b, int cap, const std::vector<Weight>& declared,
                           const Config& cfg = {});

/* Truncation of the monoid generated by the given weights, by zeta degree. */
std::vector<Weight> monoid_truncation(const std::vector<Weight>& gens, int cap);

std::vector<long> nest_hooks(const std::vector<long>& strict);
/* Partitions of d with mu_{m+1} <= k. */
std::vector<std::vector<long>> hook_partitions(int d, int m, int k);
/* Strict partitions of d with at most maxlen parts. */
std::vector<std::vector<long>> strict_partitions(int d, int maxlen);

struct HarmonicReport {
    int m = 0, two_n = 0, cap = 0;
    bool semisimple_regime = false;
    std::vector<Rat> h_scalar;       // H on S^d
    std::vector<long> harmonic_dim;  // dim ker Omega per degree
    bool ok = true;
    std::vector<std::string> failures;
};
/* Laplacian/sl2 suite on S(OSP_{m|2n}); any failed identity is recorded and
 * flips ok. */
HarmonicReport osp_harmonic_suite(int m, int two_n, int cap, const Config& cfg = {});

struct PContractionReport {
    int n = 0, cap = 0;
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::vector<SuperDim>> socle_layers;  // per degree
};
PContractionReport p_contraction_suite(int n, int cap, const Config& cfg = {});

/* Multiplication by an element of S^2 V as maps S^d -> S^{d+2}; exposed for
 * the harmonic suite tests. */
Mat multiplication_map(const Rep& v, const std::vector<std::vector<int>>& monos_d,
                       const std::vector<std::vector<int>>& monos_d2,
                       const std::map<std::pair<int, int>, Scalar>& elt);

}  // namespace sla
