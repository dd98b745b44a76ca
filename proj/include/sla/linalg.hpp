#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sla/poly.hpp"
#include "sla/scalar.hpp"

namespace sla {

class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
    static Mat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Scalar& c) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

    Mat transpose() const;
    Scalar trace() const;
    bool is_zero() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // matrix * column vector
    std::vector<Scalar> flatten() const { return d_; }
    static Mat from_flat(size_t rows, size_t cols, std::vector<Scalar> flat);

    std::string str() const;

  private:
    size_t rows_, cols_;
    std::vector<Scalar> d_;
};

size_t rank(const Mat& m);
/* Basis of the right kernel {x : m x = 0}, as column vectors. */
std::vector<std::vector<Scalar>> kernel(const Mat& m);
/* Solve m x = b; nullopt if inconsistent. */
std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b);

/* Incremental row space in reduced echelon form.  Membership testing and
 * coordinate extraction against the original inserted vectors.
 */
class SpanSolver {
  public:
    explicit SpanSolver(size_t ambient) : ambient_(ambient) {}

    /* Returns true if v enlarged the span. */
    bool insert(const std::vector<Scalar>& v);
    bool contains(const std::vector<Scalar>& v) const;
    /* Coordinates of v in terms of the vectors that were inserted and
     * enlarged the span, in insertion order; nullopt if outside. */
    std::optional<std::vector<Scalar>> coords(const std::vector<Scalar>& v) const;
    size_t dim() const { return rows_.size(); }
    size_t ambient() const { return ambient_; }
    const std::vector<std::vector<Scalar>>& echelon_rows() const { return rows_; }
    /* Reduce v modulo the span (residual after elimination). */
    std::vector<Scalar> reduce(const std::vector<Scalar>& v) const;

  private:
    size_t ambient_;
    std::vector<std::vector<Scalar>> rows_;    // reduced echelon rows
    std::vector<size_t> pivots_;               // pivot column per row
    std::vector<std::vector<Scalar>> combos_;  // expression of each row in inserted basis
};

/* Smallest subspace of n x n matrices containing the identity and the
 * generators, closed under matrix product.  Deterministic BFS order. */
std::vector<Mat> span_closure(const std::vector<Mat>& generators, size_t n);

/* Radical of the trace form on a multiplicatively closed span; equals the
 * Jacobson radical in characteristic zero.  Throws std::invalid_argument if
 * the input span is not closed under products. */
std::vector<Mat> dickson_radical(const std::vector<Mat>& algebra_basis);

class PMat {
  public:
    PMat() : rows_(0), cols_(0) {}
    PMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Poly& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const Poly& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }
    Mat eval(const std::vector<Scalar>& point) const;
    unsigned num_vars() const;

  private:
    size_t rows_, cols_;
    std::vector<Poly> d_;
};

struct GenericRankResult {
    size_t rank = 0;
    bool probabilistic = false;            // true when the sampling fallback decided
    std::vector<Scalar> witness;           // specialization achieving the rank
    Poly certificate;                      // product of pivots from the symbolic run (zero if sampled)
};

struct GenericRankOptions {
    size_t max_dim_symbolic = 64;
    unsigned max_vars_symbolic = 8;
    int samples = 20;
    long sample_range = 10;
    uint64_t seed = 0x5eed;
};

/* Maximal rank of m over all specializations of its indeterminates, with a
 * verified rational witness.  Symbolic fraction-free elimination within the
 * size bounds, Schwartz-Zippel sampling beyond them. */
GenericRankResult generic_rank(const PMat& m, const GenericRankOptions& opt = {});

}  // namespace sla
