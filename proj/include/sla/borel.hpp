#pragma once

#include "sla/algebra.hpp"

namespace sla {

/* Token of an eps-delta sequence; sign decorations only in osp type D. */
struct SeqToken {
    bool is_eps;
    int sign;  // +1 or -1, -1 only on eps tokens
};

std::vector<SeqToken> parse_eps_delta(const std::string& s);
std::string sequence_str(const std::vector<SeqToken>& toks);

struct Borel {
    AlgebraPtr g;
    std::string label;             // sequence string or sign-pattern key
    std::vector<Rat> coweight;     // values on (eps.., del..) coordinates
    std::vector<int> members;      // Cartan plus positive root vectors
    std::vector<Weight> pos_roots; // distinct positive roots
    std::vector<Weight> simple;    // simple system (basic kinds)
    SuperDim bdim;

    long odd_dim() const { return bdim.od; }
};

Borel borel_from_sequence(const AlgebraPtr& g, const std::string& seq);
Borel borel_from_coweight(const AlgebraPtr& g, const std::vector<Rat>& h);
Borel standard_borel(const AlgebraPtr& g);
Borel opposite_borel(const Borel& b);
/* One representative per conjugacy class of Borel subalgebras. */
std::vector<Borel> enumerate_borel_classes(const AlgebraPtr& g);

/* Value alpha(h) of a weight on a coweight given by coordinate values. */
Lin coweight_pair(const Weight& alpha, const std::vector<Rat>& h);

/* Positive roots of the simple system: roots with nonnegative coordinates
 * in the simple basis. */
std::vector<Weight> positive_from_simple(const std::vector<Weight>& all_roots,
                                         const std::vector<Weight>& simple);

/* Odd reflection at a simple isotropic root; throws on non-isotropic or
 * non-simple alpha. */
std::vector<Weight> odd_reflection(const Mat& gram, const std::vector<Weight>& simple,
                                   const Weight& alpha);

struct ReflectedWeight {
    Weight lambda;
    Parity parity;
    bool moved;                     // (lambda, alpha) != 0 branch taken
    std::optional<Rat> vanishing_t; // t-value where the generic branch degenerates
};
ReflectedWeight reflect_highest_weight(const Mat& gram, const Weight& lambda, Parity parity,
                                       const Weight& alpha);

/* Dominance with respect to the standard Borel, per-kind parameterization. */
bool is_dominant(const AlgebraPtr& g, const Weight& lambda);
/* Dominance for the even part (integrality on even coroots). */
bool is_dominant_even(const AlgebraPtr& g, const Weight& lambda);

/* Weyl dimension of the irreducible even-part module L0(lambda). */
Rat weyl_dim_even(const AlgebraPtr& g, const Weight& lambda);
/* Same formula from explicit data (used for abstract root data). */
Rat weyl_dim_formula(const std::vector<Weight>& even_positive, const Mat& gram, const Weight& lambda);
bool dominant_for_roots(const std::vector<Weight>& even_simple, const Mat& gram, const Weight& lambda);
std::vector<Weight> simple_of_positive(const std::vector<Weight>& positive);

/* Generators of the even character lattice; q(n) and the odd abelian algebra
 * carry an odd character instead. */
std::vector<Weight> character_constants(const AlgebraPtr& g);
bool has_odd_character(const AlgebraPtr& g);

long max_odd_borel_dim(const AlgebraPtr& g);

/* Even positive roots of a Borel. */
std::vector<Weight> even_positive_roots(const Borel& b);
std::vector<Weight> odd_positive_roots(const Borel& b);

/* Gram matrix used for even-part numerics when the algebra has no invariant
 * form (p, q): the euclidean form on the eps coordinates. */
Mat even_gram(const AlgebraPtr& g);

}  // namespace sla
