#pragma once

#include "sla/borel.hpp"

namespace sla {

enum class ExcKind { G12, F13, D21a };

std::string exc_kind_str(ExcKind k);

struct Root {
    Weight wt;
    Parity parity;
    bool isotropic;
};

/* Abstract root datum for the exceptional basic algebras.  G(1,2) weights
 * are reduced to the (eps1, eps2, delta) coordinates via eps3 = -eps1-eps2;
 * D(2,1;alpha) uses coordinates (eps, delta, gamma) stored in the eps slots. */
struct RootDatum {
    ExcKind kind;
    Rat alpha;  // D21a parameter
    size_t wm = 0, wn = 0;
    Mat gram;
    std::vector<Root> roots;
    std::vector<Weight> simple_bst;  // standard Borel's simple system
    bool osp24_isomorphic = false;   // D(2,1;alpha) at alpha in {1,-2}

    SuperDim root_count() const;
    long max_odd_borel_dim() const;  // |odd roots| / 2
    std::vector<Weight> even_positive() const;
    std::vector<Weight> odd_positive() const;
    std::vector<Weight> all_root_weights() const;
    Lin form(const Weight& a, const Weight& b) const { return form_pair(gram, a, b); }
    Weight zero_weight() const { return Weight(wm, wn); }
};

/* kind in {G12, F13, D21a}; alpha_param used only for D21a and REJECTed at
 * the degenerate values 0 and -1. */
RootDatum exceptional_root_datum(ExcKind kind, const Rat& alpha_param = Rat(1, 3));

/* Finite-dimensional dominance by walking the odd-reflection orbit: the
 * transported highest weight must be even-dominant for every reachable
 * simple system. */
bool exc_is_dominant(const RootDatum& rd, const Weight& lambda);

/* D(2,1;alpha) dominance in the principal-root coordinates (c1,c2,c3). */
bool d21a_dominant_c(const Rat& alpha, const std::vector<Rat>& c);
Weight d21a_weight_from_c(const RootDatum& rd, const std::vector<Rat>& c);
std::vector<Rat> d21a_c_of_weight(const RootDatum& rd, const Weight& w);

Rat exc_weyl_dim_even(const RootDatum& rd, const Weight& lambda);

/* Spherical weights of the even part, quoted pattern lists. */
std::vector<Weight> exc_even_spherical_weights(const RootDatum& rd);

}  // namespace sla
