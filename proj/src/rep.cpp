#include "sla/rep.hpp"

#include <algorithm>

namespace sla {

SuperDim Rep::sdim() const {
    SuperDim d;
    for (auto p : vpar) (p == Parity::even ? d.ev : d.od)++;
    return d;
}

std::map<Weight, SuperDim> Rep::weight_decomposition() const {
    std::map<Weight, SuperDim> m;
    for (size_t i = 0; i < dim(); ++i) (vpar[i] == Parity::even ? m[vwt[i]].ev : m[vwt[i]].od)++;
    return m;
}

std::vector<size_t> Rep::even_coords() const {
    std::vector<size_t> v;
    for (size_t i = 0; i < dim(); ++i)
        if (vpar[i] == Parity::even) v.push_back(i);
    return v;
}

std::vector<size_t> Rep::odd_coords() const {
    std::vector<size_t> v;
    for (size_t i = 0; i < dim(); ++i)
        if (vpar[i] == Parity::odd) v.push_back(i);
    return v;
}

std::vector<Scalar> Rep::act(const std::vector<Scalar>& elt_coords, const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(dim());
    for (size_t k = 0; k < elt_coords.size(); ++k) {
        if (elt_coords[k].is_zero()) continue;
        auto w = op[k].apply(v);
        for (size_t i = 0; i < out.size(); ++i) out[i] += elt_coords[k] * w[i];
    }
    return out;
}

VerifyResult verify_representation(const Rep& r) {
    const auto& g = *r.g;
    size_t D = r.dim();
    // parity block structure
    for (size_t k = 0; k < g.dim(); ++k) {
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) {
                if (r.op[k](i, j).is_zero()) continue;
                Parity expect = r.vpar[j] + g.par[k];
                if (r.vpar[i] != expect)
                    return {false, "parity block violated by operator " + std::to_string(k)};
            }
    }
    // Cartan acts diagonally by the weight labels
    for (int c : g.cartan) {
        if (g.par[c] != Parity::even) continue;
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) {
                Scalar expect = i == j ? Scalar(g.weight_eval(r.vwt[i], c).const_value()) : Scalar(0);
                if (r.op[c](i, j) != expect)
                    return {false, "Cartan weight labels violated at basis element " + std::to_string(c)};
            }
    }
    // supercommutator identity on all basis pairs
    for (size_t a = 0; a < g.dim(); ++a)
        for (size_t b = 0; b <= a; ++b) {
            Mat lhs = r.op[a] * r.op[b];
            if (sign_of(g.par[a], g.par[b]) < 0)
                lhs = lhs + r.op[b] * r.op[a];
            else
                lhs = lhs - r.op[b] * r.op[a];
            Mat rhs(D, D);
            for (auto& [k, coef] : g.bracket_coords((int)a, (int)b)) rhs = rhs + r.op[k] * coef;
            if (!(lhs == rhs))
                return {false, "supercommutator fails on basis pair (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")"};
        }
    return {true, ""};
}

Rep standard_module(const AlgebraPtr& g) {
    Rep r;
    r.g = g;
    r.op = g->basis;
    r.vpar = g->space_par;
    r.vwt = g->space_wt;
    r.provenance = "std:" + g->name();
    return r;
}

Rep trivial_module(const AlgebraPtr& g) { return character_module(g, g->zero_weight()); }

static bool is_character_weight(const AlgebraPtr& g, const Weight& chi) {
    if (chi.is_zero()) return true;
    auto gens = character_constants(g);
    if (gens.empty()) return false;
    // chi must be a rational multiple of the single generator (gl: Ber, p: omega)
    const Weight& gen = gens[0];
    Rat ratio;
    bool have = false;
    for (size_t i = 0; i < chi.dim(); ++i) {
        const Lin &a = chi.coord(i), &b = gen.coord(i);
        if (b.is_zero()) {
            if (!a.is_zero()) return false;
            continue;
        }
        if (!a.is_const()) return false;
        Rat q = a.c0 / b.c0;
        if (have && q != ratio) return false;
        ratio = q;
        have = true;
    }
    return have;
}

Rep character_module(const AlgebraPtr& g, const Weight& chi) {
    if (!is_character_weight(g, chi)) throw std::invalid_argument("weight is not a character: " + chi.str());
    Rep r;
    r.g = g;
    r.vpar = {Parity::even};
    r.vwt = {chi};
    for (size_t k = 0; k < g->dim(); ++k) {
        Mat m(1, 1);
        bool cartan = std::find(g->cartan.begin(), g->cartan.end(), (int)k) != g->cartan.end();
        if (cartan && g->par[k] == Parity::even) m(0, 0) = Scalar(g->weight_eval(chi, (int)k).const_value());
        r.op.push_back(m);
    }
    r.provenance = chi.is_zero() ? "trivial" : "char:" + chi.str();
    return r;
}

Rep u11_module() { return standard_module(build_u11()); }

Rep parity_shift(const Rep& r) {
    Rep s = r;
    for (auto& p : s.vpar) p = flip(p);
    for (size_t k = 0; k < r.g->dim(); ++k)
        if (r.g->par[k] == Parity::odd) s.op[k] = -s.op[k];
    s.provenance = "pi:" + r.provenance;
    return s;
}

Rep dual(const Rep& r) {
    Rep s;
    s.g = r.g;
    s.vpar = r.vpar;
    for (auto& w : r.vwt) s.vwt.push_back(-w);
    size_t D = r.dim();
    for (size_t k = 0; k < r.g->dim(); ++k) {
        Mat m(D, D);
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) {
                const Scalar& x = r.op[k](j, i);
                if (x.is_zero()) continue;
                int sg = (r.g->par[k] == Parity::odd && r.vpar[j] == Parity::odd) ? -1 : 1;
                m(i, j) = Scalar(-sg) * x;
            }
        s.op.push_back(m);
    }
    s.provenance = "dual:" + r.provenance;
    return s;
}

Rep tensor(const Rep& a, const Rep& b) {
    if (a.g != b.g) throw std::invalid_argument("tensor factors over different algebras");
    Rep s;
    s.g = a.g;
    size_t da = a.dim(), db = b.dim();
    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < db; ++j) {
            s.vpar.push_back(a.vpar[i] + b.vpar[j]);
            s.vwt.push_back(a.vwt[i] + b.vwt[j]);
        }
    for (size_t k = 0; k < a.g->dim(); ++k) {
        Mat m(da * db, da * db);
        for (size_t i = 0; i < da; ++i)
            for (size_t j = 0; j < db; ++j) {
                size_t col = i * db + j;
                for (size_t i2 = 0; i2 < da; ++i2)
                    if (!a.op[k](i2, i).is_zero()) m(i2 * db + j, col) += a.op[k](i2, i);
                int sg = sign_of(a.g->par[k], a.vpar[i]);
                for (size_t j2 = 0; j2 < db; ++j2)
                    if (!b.op[k](j2, j).is_zero()) m(i * db + j2, col) += Scalar(sg) * b.op[k](j2, j);
            }
        s.op.push_back(m);
    }
    s.provenance = "tensor(" + a.provenance + "," + b.provenance + ")";
    return s;
}

bool sort_supermonomial(std::vector<int>& symbols, const std::vector<Parity>& par, int& sign) {
    sign = 1;
    // insertion sort tracking Koszul signs
    for (size_t i = 1; i < symbols.size(); ++i) {
        int x = symbols[i];
        size_t j = i;
        while (j > 0 && symbols[j - 1] > x) {
            symbols[j] = symbols[j - 1];
            if (par[x] == Parity::odd && par[symbols[j - 1]] == Parity::odd) sign = -sign;
            --j;
        }
        symbols[j] = x;
    }
    for (size_t i = 1; i < symbols.size(); ++i)
        if (symbols[i] == symbols[i - 1] && par[symbols[i]] == Parity::odd) return false;
    return true;
}

Rep sym_power(const Rep& r, int d, std::vector<std::vector<int>>* monomials_out) {
    if (d < 0) throw std::invalid_argument("negative symmetric power");
    Rep s;
    s.g = r.g;
    size_t D = r.dim();
    // monomials: nondecreasing symbol lists, odd symbols distinct
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int start, int left) {
        if (left == 0) {
            monos.push_back(cur);
            return;
        }
        for (int i = start; i < (int)D; ++i) {
            if (!cur.empty() && cur.back() == i && r.vpar[i] == Parity::odd) continue;
            cur.push_back(i);
            gen(i, left - 1);
            cur.pop_back();
        }
    };
    gen(0, d);
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < monos.size(); ++i) {
        index[monos[i]] = i;
        Parity p = Parity::even;
        Weight w = r.g->zero_weight();
        for (int sym : monos[i]) {
            p = p + r.vpar[sym];
            w = w + r.vwt[sym];
        }
        s.vpar.push_back(p);
        s.vwt.push_back(w);
    }
    for (size_t k = 0; k < r.g->dim(); ++k) {
        Mat m(monos.size(), monos.size());
        Parity px = r.g->par[k];
        for (size_t col = 0; col < monos.size(); ++col) {
            const auto& mono = monos[col];
            for (size_t pos = 0; pos < mono.size(); ++pos) {
                int sg_pass = 1;
                if (px == Parity::odd)
                    for (size_t q = 0; q < pos; ++q)
                        if (r.vpar[mono[q]] == Parity::odd) sg_pass = -sg_pass;
                for (size_t j = 0; j < D; ++j) {
                    const Scalar& c = r.op[k](j, mono[pos]);
                    if (c.is_zero()) continue;
                    std::vector<int> out = mono;
                    out[pos] = (int)j;
                    int sg_sort = 1;
                    if (!sort_supermonomial(out, r.vpar, sg_sort)) continue;
                    m(index.at(out), col) += Scalar(sg_pass * sg_sort) * c;
                }
            }
        }
        s.op.push_back(m);
    }
    s.provenance = "sym" + std::to_string(d) + ":" + r.provenance;
    if (monomials_out) *monomials_out = monos;
    return s;
}

Rep alt_power(const Rep& r, int d) {
    Rep s = sym_power(parity_shift(r), d);
    if (d % 2 == 1) s = parity_shift(s);
    s.provenance = "alt" + std::to_string(d) + ":" + r.provenance;
    return s;
}

Rep character_twist(const Rep& r, const Weight& chi) {
    if (!is_character_weight(r.g, chi))
        throw std::invalid_argument("twist weight is not a character: " + chi.str());
    Rep s = r;
    for (int c : r.g->cartan) {
        if (r.g->par[c] != Parity::even) continue;
        Scalar v(r.g->weight_eval(chi, c).const_value());
        for (size_t i = 0; i < s.dim(); ++i) s.op[c](i, i) += v;
    }
    for (auto& w : s.vwt) w = w + chi;
    s.provenance = "twist(" + chi.str() + "):" + r.provenance;
    return s;
}

std::vector<int> even_indices(const AlgebraPtr& g) {
    std::vector<int> v;
    for (size_t i = 0; i < g->dim(); ++i)
        if (g->par[i] == Parity::even) v.push_back((int)i);
    return v;
}

Rep even_block(const Rep& r, const AlgebraPtr& g_even) {
    Rep s;
    s.g = g_even;
    auto coords = r.even_coords();
    for (size_t c : coords) {
        s.vpar.push_back(Parity::even);
        s.vwt.push_back(r.vwt[c]);
    }
    auto idx = even_indices(r.g);
    if (idx.size() != g_even->dim()) throw std::invalid_argument("even part mismatch");
    for (int k : idx) {
        Mat m(coords.size(), coords.size());
        for (size_t i = 0; i < coords.size(); ++i)
            for (size_t j = 0; j < coords.size(); ++j) m(i, j) = r.op[k](coords[i], coords[j]);
        s.op.push_back(m);
    }
    s.provenance = "even:" + r.provenance;
    return s;
}

}  // namespace sla
