#include "sla/algebra.hpp"

#include <algorithm>

namespace sla {

std::string kind_str(Kind k) {
    switch (k) {
        case Kind::gl: return "gl";
        case Kind::osp: return "osp";
        case Kind::p: return "p";
        case Kind::q: return "q";
        case Kind::u11: return "u11";
        case Kind::even_sub: return "even";
    }
    return "?";
}

SuperDim LieSuperalgebra::sdim() const {
    SuperDim d;
    for (auto p : par) (p == Parity::even ? d.ev : d.od)++;
    return d;
}

SuperDim LieSuperalgebra::space_sdim() const {
    SuperDim d;
    for (auto p : space_par) (p == Parity::even ? d.ev : d.od)++;
    return d;
}

std::string LieSuperalgebra::name() const {
    switch (kind) {
        case Kind::gl: return "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
        case Kind::osp: return "osp(" + std::to_string(m) + "|" + std::to_string(2 * n) + ")";
        case Kind::p: return "p(" + std::to_string(n) + ")";
        case Kind::q: return "q(" + std::to_string(n) + ")";
        case Kind::u11: return "odd-abelian(1)";
        case Kind::even_sub: return "even part";
    }
    return "?";
}

Mat LieSuperalgebra::bracket(const Mat& x, Parity px, const Mat& y, Parity py) const {
    Mat xy = x * y, yx = y * x;
    return sign_of(px, py) < 0 ? xy + yx : xy - yx;
}

const std::vector<std::pair<int, Scalar>>& LieSuperalgebra::bracket_coords(int i, int j) const {
    auto key = std::make_pair(i, j);
    {
        std::lock_guard<std::mutex> lock(bmutex_);
        auto it = bcache_.find(key);
        if (it != bcache_.end()) return it->second;
    }
    Mat b = bracket(basis[i], par[i], basis[j], par[j]);
    std::vector<std::pair<int, Scalar>> sparse;
    if (!b.is_zero()) {
        auto coords = express(b);
        for (size_t k = 0; k < coords.size(); ++k)
            if (!coords[k].is_zero()) sparse.emplace_back((int)k, coords[k]);
    }
    std::lock_guard<std::mutex> lock(bmutex_);
    return bcache_.emplace(key, std::move(sparse)).first->second;
}

std::vector<Scalar> LieSuperalgebra::express(const Mat& x) const {
    auto c = span_->coords(x.flatten());
    if (!c) throw std::domain_error("matrix is not in the algebra span");
    return *c;
}

bool LieSuperalgebra::in_span(const Mat& x) const { return span_->contains(x.flatten()); }

Mat LieSuperalgebra::element(const std::vector<Scalar>& coords) const {
    Mat x(N, N);
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) x = x + basis[i] * coords[i];
    return x;
}

Lin LieSuperalgebra::weight_eval(const Weight& w, int cartan_index) const {
    size_t pos = 0;
    for (; pos < cartan.size(); ++pos)
        if (cartan[pos] == cartan_index) break;
    if (pos == cartan.size() || par[cartan_index] != Parity::even)
        throw std::invalid_argument("weight_eval expects an even Cartan basis element");
    const auto& vals = cartan_eval_[pos];
    Lin acc;
    for (size_t i = 0; i < w.dim(); ++i)
        if (!w.coord(i).is_zero() && vals[i] != 0) acc += w.coord(i) * Lin(vals[i]);
    return acc;
}

std::vector<Weight> LieSuperalgebra::roots() const {
    std::vector<Weight> rs;
    for (auto& r : root_of)
        if (r) rs.push_back(*r);
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return rs;
}

std::vector<int> LieSuperalgebra::root_space(const Weight& alpha) const {
    std::vector<int> idx;
    for (size_t i = 0; i < basis.size(); ++i)
        if (root_of[i] && *root_of[i] == alpha) idx.push_back((int)i);
    return idx;
}

std::vector<int> LieSuperalgebra::even_cartan() const {
    std::vector<int> v;
    for (int c : cartan)
        if (par[c] == Parity::even) v.push_back(c);
    return v;
}

std::vector<int> LieSuperalgebra::odd_cartan() const {
    std::vector<int> v;
    for (int c : cartan)
        if (par[c] == Parity::odd) v.push_back(c);
    return v;
}

Lin LieSuperalgebra::form(const Weight& a, const Weight& b) const {
    if (!has_form()) throw std::domain_error("algebra carries no invariant form on weights");
    return form_pair(gram, a, b);
}

void LieSuperalgebra::finalize() {
    span_ = std::make_unique<SpanSolver>(N * N);
    for (auto& b : basis)
        if (!span_->insert(b.flatten())) throw std::logic_error("dependent algebra basis");
    // evaluation data for even Cartan elements: locate a defining-space
    // coordinate carrying each unit weight and read the diagonal there
    cartan_eval_.assign(cartan.size(), {});
    for (size_t pos = 0; pos < cartan.size(); ++pos) {
        int c = cartan[pos];
        if (par[c] != Parity::even) continue;
        std::vector<Rat> vals(wm + wn, Rat(0));
        for (size_t i = 0; i < wm + wn; ++i) {
            Weight unit = i < wm ? Weight::eps_unit(wm, wn, i) : Weight::del_unit(wm, wn, i - wm);
            for (size_t k = 0; k < N; ++k)
                if (space_wt[k] == unit) {
                    vals[i] = basis[c](k, k).as_rat();
                    break;
                }
        }
        cartan_eval_[pos] = std::move(vals);
    }
}

namespace {

Mat unit_matrix(size_t N, size_t i, size_t j, const Scalar& c = Scalar(1)) {
    Mat e(N, N);
    e(i, j) = c;
    return e;
}

Mat diag_form(int mm, int nn) {
    Mat g(mm + nn, mm + nn);
    for (int i = 0; i < mm; ++i) g(i, i) = Scalar(1);
    for (int j = 0; j < nn; ++j) g(mm + j, mm + j) = Scalar(-1);
    return g;
}

struct Entry {
    int idx;
    Weight root;
    Parity parity;
    Mat mat;
};

/* Append root vectors sorted by root, stable under the given ordering. */
void append_sorted(LieSuperalgebra& g, std::vector<Entry>& entries) {
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (!(a.root == b.root)) return a.root < b.root;
        return a.parity < b.parity;  // even generator before odd (q case)
    });
    for (auto& e : entries) {
        g.basis.push_back(e.mat);
        g.par.push_back(e.parity);
        g.root_of.push_back(e.root);
    }
}

std::shared_ptr<LieSuperalgebra> make_base(Kind kind, int m, int n, size_t N) {
    auto g = std::make_shared<LieSuperalgebra>();
    g->kind = kind;
    g->m = m;
    g->n = n;
    g->N = N;
    return g;
}

std::shared_ptr<LieSuperalgebra> build_gl(int m, int n) {
    if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("gl(m|n) needs m+n >= 1");
    auto g = make_base(Kind::gl, m, n, m + n);
    g->wm = m;
    g->wn = n;
    g->gram = diag_form(m, n);
    for (int k = 0; k < m + n; ++k) {
        g->space_par.push_back(k < m ? Parity::even : Parity::odd);
        g->space_wt.push_back(k < m ? Weight::eps_unit(m, n, k) : Weight::del_unit(m, n, k - m));
    }
    for (int k = 0; k < m + n; ++k) {
        g->basis.push_back(unit_matrix(g->N, k, k));
        g->par.push_back(Parity::even);
        g->root_of.push_back(std::nullopt);
        g->cartan.push_back(k);
    }
    std::vector<Entry> entries;
    for (int i = 0; i < m + n; ++i)
        for (int j = 0; j < m + n; ++j) {
            if (i == j) continue;
            entries.push_back({0, g->space_wt[i] - g->space_wt[j], g->space_par[i] + g->space_par[j],
                               unit_matrix(g->N, i, j)});
        }
    append_sorted(*g, entries);
    return g;
}

/* osp(M|2n) with antidiagonal Gram blocks: diagonal matrices form the
 * Cartan and the defining-space coordinates are weight vectors. */
std::shared_ptr<LieSuperalgebra> build_osp(int M, int n) {
    if (M < 1 || n < 1) throw std::invalid_argument("osp(m|2n) needs m >= 1, n >= 1");
    if (M == 1 && n == 0) throw std::invalid_argument("empty algebra");
    int m = M / 2;
    size_t N = M + 2 * n;
    auto g = make_base(Kind::osp, M, n, N);
    g->wm = m;
    g->wn = n;
    g->gram = diag_form(m, n);

    // supersymmetric form: antidiagonal orthogonal block, antidiagonal
    // symplectic block with signs +1 above, -1 below
    Mat B(N, N);
    for (int i = 0; i < M; ++i) B(i, M - 1 - i) = Scalar(1);
    for (int j = 0; j < 2 * n; ++j) B(M + j, M + 2 * n - 1 - j) = Scalar(j < n ? 1 : -1);

    g->defining_form = B;
    for (size_t k = 0; k < N; ++k) g->space_par.push_back(k < (size_t)M ? Parity::even : Parity::odd);
    for (int i = 0; i < M; ++i) {
        Weight w(m, n);
        if (i < m)
            w = Weight::eps_unit(m, n, i);
        else if (i >= M - m)
            w = Weight::eps_unit(m, n, M - 1 - i, Rat(-1));
        g->space_wt.push_back(w);
    }
    for (int j = 0; j < 2 * n; ++j) {
        Weight w = j < n ? Weight::del_unit(m, n, j) : Weight::del_unit(m, n, 2 * n - 1 - j, Rat(-1));
        g->space_wt.push_back(w);
    }

    // Cartan: supported on the diagonal
    for (int i = 0; i < m; ++i) {
        Mat h(N, N);
        h(i, i) = Scalar(1);
        h(M - 1 - i, M - 1 - i) = Scalar(-1);
        g->basis.push_back(h);
        g->par.push_back(Parity::even);
        g->root_of.push_back(std::nullopt);
        g->cartan.push_back((int)g->basis.size() - 1);
    }
    for (int j = 0; j < n; ++j) {
        Mat h(N, N);
        h(M + j, M + j) = Scalar(1);
        h(M + 2 * n - 1 - j, M + 2 * n - 1 - j) = Scalar(-1);
        g->basis.push_back(h);
        g->par.push_back(Parity::even);
        g->root_of.push_back(std::nullopt);
        g->cartan.push_back((int)g->basis.size() - 1);
    }

    // root spaces: solve the invariance constraint within each ad-weight block
    std::map<Weight, std::vector<std::pair<int, int>>> blocks;
    for (size_t k = 0; k < N; ++k)
        for (size_t l = 0; l < N; ++l) {
            if (k == l) continue;
            Weight alpha = g->space_wt[k] - g->space_wt[l];
            if (alpha.is_zero() && g->space_par[k] == g->space_par[l]) continue;  // handled by Cartan
            blocks[alpha].push_back({(int)k, (int)l});
        }
    std::vector<Entry> entries;
    for (auto& [alpha, cells] : blocks) {
        if (alpha.is_zero()) continue;  // no odd zero-weight part for osp
        // unknowns x_{kl} over the cells; constraint from form invariance:
        // sum_k X_{ki} B_{kj} + (-1)^{|X||e_i|} sum_k B_{ik} X_{kj} = 0
        Parity px = g->space_par[cells[0].first] + g->space_par[cells[0].second];
        Mat cons(N * N, cells.size());
        for (size_t c = 0; c < cells.size(); ++c) {
            auto [k, l] = cells[c];
            // contributes to constraint rows (i=l, j): X_{kl} B_{kj}
            for (size_t j = 0; j < N; ++j)
                if (!B(k, j).is_zero()) cons(l * N + j, c) += B(k, j);
            // contributes to rows (i, j=l): sign * B_{ik} X_{kl}
            for (size_t i = 0; i < N; ++i)
                if (!B(i, k).is_zero()) {
                    int sg = (px == Parity::odd && g->space_par[i] == Parity::odd) ? -1 : 1;
                    cons(i * N + l, c) += Scalar(sg) * B(i, k);
                }
        }
        auto ker = kernel(cons);
        for (auto& coeffs : ker) {
            Mat x(N, N);
            for (size_t c = 0; c < cells.size(); ++c)
                if (!coeffs[c].is_zero()) x(cells[c].first, cells[c].second) = coeffs[c];
            // normalize: first nonzero entry in row-major order becomes 1
            Scalar lead;
            for (size_t k = 0; k < N && lead.is_zero(); ++k)
                for (size_t l = 0; l < N && lead.is_zero(); ++l) lead = x(k, l);
            x = x * lead.inverse();
            entries.push_back({0, alpha, px, x});
        }
    }
    append_sorted(*g, entries);
    return g;
}

std::shared_ptr<LieSuperalgebra> build_p(int n) {
    if (n < 1) throw std::invalid_argument("p(n) needs n >= 1");
    size_t N = 2 * n;
    auto g = make_base(Kind::p, 0, n, N);
    g->wm = n;
    g->wn = 0;
    for (int k = 0; k < 2 * n; ++k) {
        g->space_par.push_back(k < n ? Parity::even : Parity::odd);
        g->space_wt.push_back(k < n ? Weight::eps_unit(n, 0, k) : Weight::eps_unit(n, 0, k - n, Rat(-1)));
    }
    auto block = [&](const Mat& A, const Mat& Bm, const Mat& C) {
        Mat x(N, N);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                x(i, j) = A(i, j);
                x(i, n + j) = Bm(i, j);
                x(n + i, j) = C(i, j);
                x(n + i, n + j) = -A(j, i);
            }
        return x;
    };
    Mat zero(n, n);
    for (int i = 0; i < n; ++i) {
        g->basis.push_back(block(unit_matrix(n, i, i), zero, zero));
        g->par.push_back(Parity::even);
        g->root_of.push_back(std::nullopt);
        g->cartan.push_back(i);
    }
    std::vector<Entry> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j)
                entries.push_back({0, Weight::eps_unit(n, 0, i) - Weight::eps_unit(n, 0, j), Parity::even,
                                   block(unit_matrix(n, i, j), zero, zero)});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Mat Bm = unit_matrix(n, i, j);
            if (i != j) Bm(j, i) = Scalar(1);
            entries.push_back({0, Weight::eps_unit(n, 0, i) + Weight::eps_unit(n, 0, j), Parity::odd,
                               block(zero, Bm, zero)});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat C = unit_matrix(n, i, j);
            C(j, i) = Scalar(-1);
            entries.push_back({0, -(Weight::eps_unit(n, 0, i) + Weight::eps_unit(n, 0, j)), Parity::odd,
                               block(zero, zero, C)});
        }
    append_sorted(*g, entries);
    return g;
}

std::shared_ptr<LieSuperalgebra> build_q(int n) {
    if (n < 1) throw std::invalid_argument("q(n) needs n >= 1");
    size_t N = 2 * n;
    auto g = make_base(Kind::q, 0, n, N);
    g->wm = n;
    g->wn = 0;
    for (int k = 0; k < 2 * n; ++k) {
        g->space_par.push_back(k < n ? Parity::even : Parity::odd);
        g->space_wt.push_back(Weight::eps_unit(n, 0, k % n));
    }
    auto block = [&](const Mat& A, const Mat& Bm) {
        Mat x(N, N);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                x(i, j) = A(i, j);
                x(n + i, n + j) = A(i, j);
                x(i, n + j) = Bm(i, j);
                x(n + i, j) = Bm(i, j);
            }
        return x;
    };
    Mat zero(n, n);
    for (int i = 0; i < n; ++i) {  // even Cartan
        g->basis.push_back(block(unit_matrix(n, i, i), zero));
        g->par.push_back(Parity::even);
        g->root_of.push_back(std::nullopt);
        g->cartan.push_back((int)g->basis.size() - 1);
    }
    for (int i = 0; i < n; ++i) {  // odd Cartan
        g->basis.push_back(block(zero, unit_matrix(n, i, i)));
        g->par.push_back(Parity::odd);
        g->root_of.push_back(std::nullopt);
        g->cartan.push_back((int)g->basis.size() - 1);
    }
    std::vector<Entry> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Weight alpha = Weight::eps_unit(n, 0, i) - Weight::eps_unit(n, 0, j);
            entries.push_back({0, alpha, Parity::even, block(unit_matrix(n, i, j), zero)});
            entries.push_back({0, alpha, Parity::odd, block(zero, unit_matrix(n, i, j))});
        }
    append_sorted(*g, entries);
    return g;
}

}  // namespace

std::shared_ptr<const LieSuperalgebra> finalize_algebra(std::shared_ptr<LieSuperalgebra> g) {
    g->finalize();
    return g;
}

AlgebraPtr build_algebra(Kind kind, int m, int n) {
    switch (kind) {
        case Kind::gl: return finalize_algebra(build_gl(m, n));
        case Kind::osp: return finalize_algebra(build_osp(m, n));
        case Kind::p: return finalize_algebra(build_p(m ? m : n));
        case Kind::q: return finalize_algebra(build_q(m ? m : n));
        case Kind::u11: return build_u11();
        default: throw std::invalid_argument("build_algebra: unsupported kind");
    }
}

AlgebraPtr build_u11() {
    auto g = make_base(Kind::u11, 0, 0, 2);
    g->wm = 0;
    g->wn = 0;
    g->space_par = {Parity::even, Parity::odd};
    g->space_wt = {Weight(0, 0), Weight(0, 0)};
    g->basis.push_back(unit_matrix(2, 1, 0));
    g->par.push_back(Parity::odd);
    g->root_of.push_back(std::nullopt);  // h0 = 0: everything centralizes
    g->cartan = {};
    return finalize_algebra(g);
}

AlgebraPtr even_part(const AlgebraPtr& g) {
    auto h = make_base(Kind::even_sub, g->m, g->n, g->N);
    h->wm = g->wm;
    h->wn = g->wn;
    h->gram = g->gram;
    h->space_wt = g->space_wt;
    h->space_par.assign(g->space_par.size(), Parity::even);
    for (size_t i = 0; i < g->basis.size(); ++i) {
        if (g->par[i] != Parity::even) continue;
        h->basis.push_back(g->basis[i]);
        h->par.push_back(Parity::even);
        h->root_of.push_back(g->root_of[i]);
        bool is_cartan = std::find(g->cartan.begin(), g->cartan.end(), (int)i) != g->cartan.end();
        if (is_cartan) h->cartan.push_back((int)h->basis.size() - 1);
    }
    return finalize_algebra(h);
}

}  // namespace sla
