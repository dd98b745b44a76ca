#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sla/weight.hpp"

namespace sla {

enum class Kind { gl, osp, p, q, u11, even_sub };

std::string kind_str(Kind k);

/* Matrix-realized Lie superalgebra with parity-graded basis, Cartan and
 * root-space decomposition.  Basis order: Cartan first (even, then odd for
 * q(n)), then root vectors sorted by root; one generator per root space for
 * gl/osp/p, an even and an odd generator per root space for q(n). */
class LieSuperalgebra {
  public:
    Kind kind;
    int m = 0, n = 0;  // gl(m|n); osp(m|2n) keeps the full orthogonal size in m
    size_t N = 0;      // size of the defining matrix realization

    std::vector<Mat> basis;
    std::vector<Parity> par;
    std::vector<std::optional<Weight>> root_of;  // nullopt on the Cartan
    std::vector<int> cartan;

    std::vector<Weight> space_wt;  // weight of each defining-space coordinate
    std::vector<Parity> space_par;

    size_t wm = 0, wn = 0;  // number of eps / delta weight coordinates
    Mat gram;               // invariant form on weights (basic kinds only)
    Mat defining_form;      // matrix of the preserved form on the defining space (osp)

    size_t dim() const { return basis.size(); }
    SuperDim sdim() const;
    SuperDim space_sdim() const;
    bool is_basic() const { return kind == Kind::gl || kind == Kind::osp; }
    bool has_form() const { return gram.rows() > 0; }
    std::string name() const;

    Weight zero_weight() const { return Weight(wm, wn); }

    /* Structure constants [basis_i, basis_j] in basis coordinates. */
    const std::vector<std::pair<int, Scalar>>& bracket_coords(int i, int j) const;
    Mat bracket(const Mat& x, Parity px, const Mat& y, Parity py) const;
    /* Coordinates in the basis; throws std::domain_error if outside the span. */
    std::vector<Scalar> express(const Mat& x) const;
    bool in_span(const Mat& x) const;
    Mat element(const std::vector<Scalar>& coords) const;

    /* Value w(h) for h an even Cartan basis element. */
    Lin weight_eval(const Weight& w, int cartan_index) const;

    std::vector<Weight> roots() const;                       // distinct, sorted
    std::vector<int> root_space(const Weight& alpha) const;  // basis indices

    std::vector<int> even_cartan() const;
    std::vector<int> odd_cartan() const;

    Lin form(const Weight& a, const Weight& b) const;

    void finalize();  // builds caches; called by the constructors

  private:
    std::unique_ptr<SpanSolver> span_;
    mutable std::mutex bmutex_;
    mutable std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> bcache_;
    std::vector<std::vector<Rat>> cartan_eval_;  // per even-cartan: (eps..,del..) values
    friend std::shared_ptr<const LieSuperalgebra> finalize_algebra(std::shared_ptr<LieSuperalgebra>);
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

/* kind in {gl, osp, p, q}; REJECTs parameter combinations that make the
 * algebra empty.  For osp, m is the full orthogonal dimension and n the
 * symplectic half-rank (so osp(m|2n)). */
AlgebraPtr build_algebra(Kind kind, int m, int n = 0);

/* The one-dimensional odd abelian algebra acting on C^{1|1}. */
AlgebraPtr build_u11();

/* Even part as a standalone (purely even) algebra; shares matrices. */
AlgebraPtr even_part(const AlgebraPtr& g);

}  // namespace sla
