#include "sla/linalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace sla {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] - o.d_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = -d_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (b.is_zero()) continue;
                r(i, j) += a * b;
            }
        }
    return r;
}

Mat Mat::operator*(const Scalar& c) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] * c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Scalar Mat::trace() const {
    Scalar t(0);
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

bool Mat::is_zero() const {
    for (auto& x : d_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<Scalar> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

Mat Mat::from_flat(size_t rows, size_t cols, std::vector<Scalar> flat) {
    Mat m(rows, cols);
    m.d_ = std::move(flat);
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]\n";
    }
    return os.str();
}

/* Row echelon of a working copy; returns pivot columns. */
static std::vector<size_t> echelonize(Mat& w) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        size_t p = r;
        while (p < w.rows() && w(p, c).is_zero()) ++p;
        if (p == w.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < w.cols(); ++j) std::swap(w(p, j), w(r, j));
        Scalar inv = w(r, c).inverse();
        for (size_t j = c; j < w.cols(); ++j) w(r, j) *= inv;
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == r || w(i, c).is_zero()) continue;
            Scalar f = w(i, c);
            for (size_t j = c; j < w.cols(); ++j) w(i, j) -= f * w(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(const Mat& m) {
    Mat w = m;
    return echelonize(w).size();
}

std::vector<std::vector<Scalar>> kernel(const Mat& m) {
    Mat w = m;
    std::vector<size_t> pivots = echelonize(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(m.cols());
        v[c] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b) {
    Mat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = echelonize(aug);
    for (size_t c : pivots)
        if (c == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

bool SpanSolver::insert(const std::vector<Scalar>& v) {
    if (v.size() != ambient_) throw std::invalid_argument("span insert shape mismatch");
    std::vector<Scalar> w = v;
    std::vector<Scalar> combo(dim() + 1);
    combo.back() = Scalar(1);  // position in the (prospective) inserted basis
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& f = w[pivots_[r]];
        if (f.is_zero()) continue;
        Scalar ff = f;
        for (size_t j = 0; j < ambient_; ++j)
            if (!rows_[r][j].is_zero()) w[j] -= ff * rows_[r][j];
        for (size_t j = 0; j < combos_[r].size(); ++j)
            if (!combos_[r][j].is_zero()) combo[j] -= ff * combos_[r][j];
    }
    size_t p = 0;
    while (p < ambient_ && w[p].is_zero()) ++p;
    if (p == ambient_) return false;
    Scalar inv = w[p].inverse();
    for (auto& x : w) x *= inv;
    for (auto& c : combo) c *= inv;
    // back-substitute to keep rows reduced
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& f = rows_[r][p];
        if (f.is_zero()) continue;
        Scalar ff = f;
        for (size_t j = 0; j < ambient_; ++j)
            if (!w[j].is_zero()) rows_[r][j] -= ff * w[j];
        combos_[r].resize(combo.size());
        for (size_t j = 0; j < combo.size(); ++j)
            if (!combo[j].is_zero()) combos_[r][j] -= ff * combo[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    combos_.push_back(std::move(combo));
    return true;
}

std::vector<Scalar> SpanSolver::reduce(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& f = w[pivots_[r]];
        if (f.is_zero()) continue;
        Scalar ff = f;
        for (size_t j = 0; j < ambient_; ++j)
            if (!rows_[r][j].is_zero()) w[j] -= ff * rows_[r][j];
    }
    return w;
}

bool SpanSolver::contains(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = reduce(v);
    for (auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<std::vector<Scalar>> SpanSolver::coords(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = v;
    std::vector<Scalar> combo(dim());
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& f = w[pivots_[r]];
        if (f.is_zero()) continue;
        Scalar ff = f;
        for (size_t j = 0; j < ambient_; ++j)
            if (!rows_[r][j].is_zero()) w[j] -= ff * rows_[r][j];
        for (size_t j = 0; j < combos_[r].size(); ++j)
            if (!combos_[r][j].is_zero()) combo[j] += ff * combos_[r][j];
    }
    for (auto& x : w)
        if (!x.is_zero()) return std::nullopt;
    return combo;
}

std::vector<Mat> span_closure(const std::vector<Mat>& generators, size_t n) {
    for (auto& g : generators)
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("span_closure: non-square generator");
    SpanSolver span(n * n);
    std::vector<Mat> basis;
    auto add = [&](const Mat& m) {
        if (span.insert(m.flatten())) {
            basis.push_back(m);
            return true;
        }
        return false;
    };
    add(Mat::identity(n));
    for (auto& g : generators) add(g);
    // every word in the generators is reachable by right multiplication
    for (size_t i = 0; i < basis.size(); ++i) {
        Mat b = basis[i];
        for (auto& g : generators) add(b * g);
    }
    return basis;
}

std::vector<Mat> dickson_radical(const std::vector<Mat>& algebra_basis) {
    if (algebra_basis.empty()) return {};
    size_t n = algebra_basis[0].rows();
    SpanSolver span(n * n);
    for (auto& b : algebra_basis) span.insert(b.flatten());
    for (auto& a : algebra_basis)
        for (auto& b : algebra_basis)
            if (!span.contains((a * b).flatten()))
                throw std::invalid_argument("dickson_radical: input span is not multiplicatively closed");
    size_t k = algebra_basis.size();
    Mat gram(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) gram(i, j) = (algebra_basis[i] * algebra_basis[j]).trace();
    std::vector<Mat> rad;
    for (auto& coeffs : kernel(gram)) {
        Mat m(n, n);
        for (size_t i = 0; i < k; ++i)
            if (!coeffs[i].is_zero()) m = m + algebra_basis[i] * coeffs[i];
        rad.push_back(std::move(m));
    }
    return rad;
}

Mat PMat::eval(const std::vector<Scalar>& point) const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(point);
    return m;
}

unsigned PMat::num_vars() const {
    unsigned n = 0;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) n = std::max(n, (*this)(i, j).num_vars());
    return n;
}

/* Fraction-free (Bareiss) elimination over the polynomial ring.  Pivots are
 * chosen by fewest terms, then smallest bitsize, for sparsity. */
static size_t bareiss_rank(PMat w, Poly* pivot_product) {
    size_t rows = w.rows(), cols = w.cols();
    Poly prev_pivot(Scalar(1));
    Poly cert(Scalar(1));
    size_t r = 0;
    for (size_t step = 0; r < rows && step < cols; ++step) {
        // pivot search over the whole remaining block
        size_t bi = rows, bj = cols;
        size_t best_terms = SIZE_MAX, best_bits = SIZE_MAX;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                const Poly& p = w(i, j);
                if (p.is_zero()) continue;
                size_t t = p.term_count(), b = p.bitsize();
                if (t < best_terms || (t == best_terms && b < best_bits)) {
                    best_terms = t;
                    best_bits = b;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == rows) break;  // remaining block is zero
        if (bi != r)
            for (size_t j = 0; j < cols; ++j) std::swap(w(bi, j), w(r, j));
        Poly pivot = w(r, bj);
        cert *= pivot;
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) {
                if (j == bj) continue;
                Poly num = w(i, j) * pivot - w(i, bj) * w(r, j);
                w(i, j) = num.is_zero() ? Poly() : num.divide_exact(prev_pivot);
            }
            w(i, bj) = Poly();
        }
        prev_pivot = pivot;
        ++r;
    }
    if (pivot_product) *pivot_product = cert;
    return r;
}

GenericRankResult generic_rank(const PMat& m, const GenericRankOptions& opt) {
    GenericRankResult res;
    unsigned nvars = m.num_vars();
    if (nvars == 0) {
        std::vector<Scalar> empty;
        res.rank = rank(m.eval(empty));
        res.witness = empty;
        res.certificate = Poly(Scalar(1));
        return res;
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> num(-opt.sample_range, opt.sample_range);
    auto sample_point = [&]() {
        std::vector<Scalar> pt(nvars);
        for (auto& x : pt) x = Scalar(Rat(num(rng)));
        return pt;
    };
    bool symbolic = std::max(m.rows(), m.cols()) <= opt.max_dim_symbolic && nvars <= opt.max_vars_symbolic;
    if (symbolic) {
        Poly cert;
        res.rank = bareiss_rank(m, &cert);
        res.certificate = cert;
        res.probabilistic = false;
        // witness: sample until the symbolic rank is achieved
        for (int k = 0; k < 4 * opt.samples + 16; ++k) {
            auto pt = sample_point();
            if (rank(m.eval(pt)) == res.rank) {
                res.witness = pt;
                return res;
            }
        }
        throw std::runtime_error("generic_rank: failed to realize symbolic rank by sampling");
    }
    res.probabilistic = true;
    size_t best = 0;
    std::vector<Scalar> best_pt;
    size_t full = std::min(m.rows(), m.cols());
    for (int k = 0; k < opt.samples; ++k) {
        auto pt = sample_point();
        size_t rk = rank(m.eval(pt));
        if (rk > best) {
            best = rk;
            best_pt = pt;
            if (best == full) break;
        }
    }
    res.rank = best;
    res.witness = best_pt;
    return res;
}

}  // namespace sla
