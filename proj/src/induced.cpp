#include "sla/induced.hpp"

#include <algorithm>
#include <functional>

#include "sla/modtools.hpp"

namespace sla {

namespace {

using Exps = std::vector<uint8_t>;
using State = std::pair<Exps, int>;
using LinC = std::map<State, Scalar>;

void add_to(LinC& acc, const State& st, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = acc.find(st);
    if (it == acc.end())
        acc[st] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

struct Engine {
    const InducedSpec& spec;
    std::vector<int> free_pos_of;  // algebra index -> free position or -1
    std::vector<Parity> fpar;
    std::map<std::pair<int, State>, LinC> memo;
    bool truncated = false;

    explicit Engine(const InducedSpec& s) : spec(s) {
        free_pos_of.assign(s.g->dim(), -1);
        for (size_t p = 0; p < s.free_idx.size(); ++p) {
            free_pos_of[s.free_idx[p]] = (int)p;
            fpar.push_back(s.g->par[s.free_idx[p]]);
        }
    }

    int length(const Exps& e) const {
        int L = 0;
        for (auto x : e) L += x;
        return L;
    }

    const LinC& act(int k, const State& st) {
        auto key = std::make_pair(k, st);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        LinC res;
        const Exps& exps = st.first;
        int L = length(exps);
        int lead = -1;
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) {
                lead = (int)i;
                break;
            }
        int pk = free_pos_of[k];
        if (lead < 0) {
            // acting on the highest-weight space
            if (pk >= 0) {
                if (L + 1 > spec.depth) {
                    truncated = true;
                } else {
                    Exps e = exps;
                    e[pk]++;
                    add_to(res, {e, st.second}, Scalar(1));
                }
            } else {
                const Mat& a = spec.hw_act[k];
                for (size_t j = 0; j < a.rows(); ++j)
                    if (!a(j, st.second).is_zero()) add_to(res, {exps, (int)j}, a(j, st.second));
            }
        } else if (pk >= 0 && (pk < lead || (pk == lead && fpar[pk] == Parity::even))) {
            if (L + 1 > spec.depth) {
                truncated = true;
            } else {
                Exps e = exps;
                e[pk]++;
                add_to(res, {e, st.second}, Scalar(1));
            }
        } else if (pk == lead) {
            // odd square: y y M' = (1/2)[y,y] M'
            Exps rest = exps;
            rest[lead]--;
            State inner{rest, st.second};
            for (auto& [z, c] : spec.g->bracket_coords(k, k))
                for (auto& [s2, c2] : act(z, inner)) add_to(res, s2, c * c2 * Scalar(Rat(1, 2)));
        } else {
            int y = spec.free_idx[lead];
            Exps rest = exps;
            rest[lead]--;
            State inner{rest, st.second};
            int sg = sign_of(spec.g->par[k], spec.g->par[y]);
            // x (y M') = sg * y (x M') + [x,y] M'
            for (auto& [s1, c1] : act(k, inner)) {
                LinC pre = act(y, s1);  // copy: memo may rehash during recursion
                for (auto& [s2, c2] : pre) add_to(res, s2, Scalar(sg) * c1 * c2);
            }
            for (auto& [z, c] : spec.g->bracket_coords(k, y))
                for (auto& [s2, c2] : act(z, inner)) add_to(res, s2, c * c2);
        }
        return memo.emplace(key, std::move(res)).first->second;
    }
};

}  // namespace

HighestWeightModule induce_module(const InducedSpec& spec) {
    size_t nf = spec.free_idx.size();
    size_t hwd = spec.hw_par.size();
    // enumerate monomials: exponent vectors with total <= depth, odd slots <= 1
    std::vector<Exps> monos;
    Exps cur(nf, 0);
    std::function<void(size_t, int)> gen = [&](size_t pos, int left) {
        if (pos == nf) {
            monos.push_back(cur);
            return;
        }
        int cap = spec.g->par[spec.free_idx[pos]] == Parity::odd ? 1 : left;
        for (int e = 0; e <= cap; ++e) {
            cur[pos] = (uint8_t)e;
            gen(pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    gen(0, spec.depth);
    std::sort(monos.begin(), monos.end());

    HighestWeightModule out;
    out.lambda = spec.lambda;
    out.depth = spec.depth;
    out.borel_label = spec.borel_label;
    Rep& r = out.rep;
    r.g = spec.g;
    std::vector<Weight> hw_wt = spec.hw_wt;
    if (hw_wt.empty()) hw_wt.assign(hwd, spec.lambda);
    std::map<State, size_t> index;
    for (auto& e : monos)
        for (size_t j = 0; j < hwd; ++j) {
            State st{e, (int)j};
            index[st] = r.vpar.size();
            Parity p = spec.hw_par[j];
            Weight w = hw_wt[j];
            for (size_t i = 0; i < nf; ++i)
                if (e[i]) {
                    p = p + (spec.g->par[spec.free_idx[i]] == Parity::odd && e[i] % 2 ? Parity::odd
                                                                                      : Parity::even);
                    Weight root = *spec.g->root_of[spec.free_idx[i]];
                    for (int t = 0; t < e[i]; ++t) w = w + root;
                }
            r.vpar.push_back(p);
            r.vwt.push_back(w);
            bool zero = true;
            for (auto x : e) zero = zero && x == 0;
            if (zero) out.hw_coords.push_back(index[st]);
        }

    Engine eng(spec);
    size_t D = r.vpar.size();
    for (size_t k = 0; k < spec.g->dim(); ++k) {
        Mat m(D, D);
        for (auto& [st, col] : index)
            for (auto& [st2, c] : eng.act((int)k, st)) m(index.at(st2), col) = c;
        r.op.push_back(std::move(m));
    }
    out.truncated = eng.truncated;
    r.provenance = "induced(" + spec.lambda.str() + ")@" + spec.borel_label;
    return out;
}

int default_depth(const AlgebraPtr& g, const Weight& lambda) {
    Rat mass(0);
    for (size_t i = 0; i < lambda.dim(); ++i) {
        const Lin& c = lambda.coord(i);
        mass += abs(c.c0) + abs(c.c1);
    }
    mpz_class z = mass.get_num() / mass.get_den();
    return (int)z.get_si() + 2;
}

CliffordSpace clifford_space(const std::vector<Rat>& s) {
    std::vector<size_t> nz;
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] != 0) nz.push_back(i);
    CliffordSpace cs;
    size_t k = nz.size();
    if (k == 0) {
        cs.par = {Parity::even};
        cs.xi.assign(s.size(), Mat(1, 1));
        return cs;
    }
    if (k <= 2) {
        cs.par = {Parity::even, Parity::odd};
        cs.xi.assign(s.size(), Mat(2, 2));
        size_t a = nz[0];
        cs.xi[a](1, 0) = Scalar(1);
        cs.xi[a](0, 1) = Scalar(s[a]);
        if (k == 2) {
            size_t b = nz[1];
            Scalar d = Scalar::sqrt_of(-s[b] / s[a]);
            cs.xi[b](1, 0) = d;
            cs.xi[b](0, 1) = Scalar(-s[a]) * d;
        }
        return cs;
    }
    if (k == 3) {
        cs.par = {Parity::even, Parity::even, Parity::odd, Parity::odd};
        cs.xi.assign(s.size(), Mat(4, 4));
        size_t a = nz[0], b = nz[1], c = nz[2];
        auto place = [&](size_t which, const Mat& A, const Mat& B) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    cs.xi[which](i, 2 + j) = A(i, j);
                    cs.xi[which](2 + i, j) = B(i, j);
                }
        };
        Mat I2 = Mat::identity(2);
        place(a, I2 * Scalar(s[a]), I2);
        Scalar d = Scalar::sqrt_of(-s[b] / s[a]);
        Mat s3(2, 2);
        s3(0, 0) = Scalar(1);
        s3(1, 1) = Scalar(-1);
        place(b, s3 * (Scalar(-s[a]) * d), s3 * d);
        Scalar e = Scalar::sqrt_of(-s[c] / s[a]);
        Mat s1(2, 2);
        s1(0, 1) = Scalar(1);
        s1(1, 0) = Scalar(1);
        place(c, s1 * (Scalar(-s[a]) * e), s1 * e);
        return cs;
    }
    throw std::invalid_argument("Clifford highest-weight spaces built explicitly for rank <= 3 only");
}

Rep even_irreducible(const AlgebraPtr& g_even, const Weight& lambda) {
    if (g_even->kind != Kind::even_sub) throw std::invalid_argument("expects an even-part algebra");
    Borel st = standard_borel(g_even);
    // exact depth bound: height of lambda minus its lowest Weyl translate
    Mat gram = even_gram(g_even);
    Rat height(0);
    for (auto& alpha : even_positive_roots(st)) {
        Lin num = form_pair(gram, lambda, alpha);
        Lin den = form_pair(gram, alpha, alpha);
        Rat pairing = 2 * num.const_value() / den.const_value();
        if (pairing > 0) height += pairing;
    }
    int depth = (int)mpz_class(height.get_num() / height.get_den()).get_si() + 1;
    auto tv = truncated_verma(g_even, st, lambda, depth);
    Rep L0 = irreducible_quotient(tv);
    Rat expect = weyl_dim_even(g_even, lambda);
    if (Rat((long)L0.dim()) != expect)
        throw std::logic_error("even irreducible dimension disagrees with the Weyl formula");
    return L0;
}

HighestWeightModule truncated_verma(const AlgebraPtr& g, const Borel& b, const Weight& lambda,
                                    int depth) {
    if (lambda.has_param())
        throw std::invalid_argument("module construction needs a concrete weight (evaluate t first)");
    InducedSpec spec;
    spec.g = g;
    spec.lambda = lambda;
    spec.depth = depth;
    spec.borel_label = b.label;
    std::vector<bool> member(g->dim(), false);
    for (int i : b.members) member[i] = true;
    for (size_t i = 0; i < g->dim(); ++i)
        if (!member[i]) spec.free_idx.push_back((int)i);

    size_t hwd;
    if (g->kind == Kind::q) {
        std::vector<Rat> s;
        for (size_t i = 0; i < g->wm; ++i) s.push_back(lambda.eps[i].const_value());
        CliffordSpace cs = clifford_space(s);
        spec.hw_par = cs.par;
        hwd = cs.par.size();
        spec.hw_act.assign(g->dim(), Mat(hwd, hwd));
        auto oc = g->odd_cartan();
        for (size_t i = 0; i < oc.size(); ++i) spec.hw_act[oc[i]] = cs.xi[i];
    } else {
        spec.hw_par = {Parity::even};
        hwd = 1;
        spec.hw_act.assign(g->dim(), Mat(1, 1));
    }
    for (int c : g->cartan) {
        if (g->par[c] != Parity::even) continue;
        Scalar v(g->weight_eval(lambda, c).const_value());
        for (size_t j = 0; j < hwd; ++j) spec.hw_act[c](j, j) = v;
    }
    return induce_module(spec);
}

HighestWeightModule kac_module_typeI(const AlgebraPtr& g, const Weight& lambda) {
    bool ok = (g->kind == Kind::gl && g->m >= 1 && g->n >= 1) || (g->kind == Kind::osp && g->m == 2);
    if (!ok) throw std::invalid_argument("Kac modules need gl(m|n) or osp(2|2n)");
    if (!is_dominant(g, lambda))
        throw std::invalid_argument("Kac module weight is not dominant: " + lambda.str());
    auto ev = even_part(g);
    Rep L0 = even_irreducible(ev, lambda);

    InducedSpec spec;
    spec.g = g;
    spec.lambda = lambda;
    spec.borel_label = "kac";
    // grading level of an odd root: the eps-coefficient sum (+1 on g_1)
    for (size_t i = 0; i < g->dim(); ++i) {
        if (g->par[i] != Parity::odd || !g->root_of[i]) continue;
        Lin level;
        for (auto& c : g->root_of[i]->eps) level += c;
        if (level.const_value() < 0) spec.free_idx.push_back((int)i);
    }
    spec.depth = (int)spec.free_idx.size();
    size_t hwd = L0.dim();
    spec.hw_par.assign(hwd, Parity::even);
    spec.hw_wt = L0.vwt;
    spec.hw_act.assign(g->dim(), Mat(hwd, hwd));
    auto idx = even_indices(g);
    for (size_t pos = 0; pos < idx.size(); ++pos) spec.hw_act[idx[pos]] = L0.op[pos];
    auto out = induce_module(spec);
    out.rep.provenance = "kac(" + lambda.str() + "):" + g->name();
    return out;
}

HighestWeightModule thin_kac_p(int n, int sign_omega) {
    if (n < 2) throw std::invalid_argument("thin Kac modules need p(n) with n >= 2");
    auto g = build_algebra(Kind::p, n);
    Weight omega(g->wm, 0);
    for (size_t i = 0; i < g->wm; ++i) omega.eps[i] = Lin(sign_omega >= 0 ? 1 : -1);
    InducedSpec spec;
    spec.g = g;
    spec.lambda = omega;
    spec.borel_label = sign_omega >= 0 ? "thin-kac" : "thick-kac";
    for (size_t i = 0; i < g->dim(); ++i) {
        if (g->par[i] != Parity::odd || !g->root_of[i]) continue;
        Lin level;
        for (auto& c : g->root_of[i]->eps) level += c;
        bool neg = level.const_value() < 0;
        if ((sign_omega >= 0 && neg) || (sign_omega < 0 && !neg)) spec.free_idx.push_back((int)i);
    }
    spec.depth = (int)spec.free_idx.size();
    spec.hw_par = {Parity::even};
    spec.hw_act.assign(g->dim(), Mat(1, 1));
    for (int c : g->cartan) spec.hw_act[c](0, 0) = Scalar(g->weight_eval(omega, c).const_value());
    auto out = induce_module(spec);
    out.rep.provenance = (sign_omega >= 0 ? std::string("thin-kac(w):") : std::string("thick-kac(-w):")) +
                         g->name();
    return out;
}

}  // namespace sla
