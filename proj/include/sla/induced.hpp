#pragma once

#include "sla/rep.hpp"

namespace sla {

/* A module (possibly only approximately one, when truncated) together with
 * its designated highest-weight data. */
struct HighestWeightModule {
    Rep rep;
    Weight lambda;
    std::vector<size_t> hw_coords;  // coordinates spanning the highest-weight space
    int depth = 0;
    bool truncated = false;  // straightening hit the depth boundary
    std::string borel_label;
};

/* Inputs to the induction engine: a set of "free" directions (a PBW basis of
 * the negative side) and the action of every remaining basis element on the
 * highest-weight space. */
struct InducedSpec {
    AlgebraPtr g;
    std::vector<int> free_idx;
    std::vector<Parity> hw_par;
    std::vector<Weight> hw_wt;  // weight per highest-weight-space coordinate; defaults to lambda
    std::vector<Mat> hw_act;    // per algebra basis element; square of size hw_par.size()
    Weight lambda;
    int depth = 0;
    std::string borel_label;
};

HighestWeightModule induce_module(const InducedSpec& spec);

/* Kac module of gl(m|n) or osp(2|2n) through the type-I grading. */
HighestWeightModule kac_module_typeI(const AlgebraPtr& g, const Weight& lambda);

/* Thin (nabla, through g0+g1) or thick (Delta, through g-1+g0) Kac module of
 * p(n) on the character +/- omega. */
HighestWeightModule thin_kac_p(int n, int sign_omega);

/* Truncated Verma: PBW monomials in the negative side of the Borel up to
 * the given depth, acting on the Clifford highest-weight space (q(n)) or a
 * highest-weight line.  Not a module until irreducible_quotient. */
HighestWeightModule truncated_verma(const AlgebraPtr& g, const Borel& b, const Weight& lambda,
                                    int depth);

/* Default depth: coefficient mass of lambda plus two. */
int default_depth(const AlgebraPtr& g, const Weight& lambda);

/* Irreducible highest-weight space of the Clifford form B_lambda on the odd
 * Cartan of q(n); dimension (1|1) for one or two nonzero entries. */
struct CliffordSpace {
    std::vector<Parity> par;
    std::vector<Mat> xi;  // action of each odd Cartan generator
};
CliffordSpace clifford_space(const std::vector<Rat>& s);

/* Irreducible even-part module as a representation of even_part(g). */
Rep even_irreducible(const AlgebraPtr& g_even, const Weight& lambda);

}  // namespace sla
