#include "sla/sphericity.hpp"

#include <algorithm>
#include <set>

namespace sla {

SphericityReport is_spherical(const Rep& r, const Borel& b, const Config& cfg) {
    if (b.g != r.g) throw std::invalid_argument("Borel belongs to a different algebra");
    auto ev = r.even_coords();
    size_t D = r.dim();
    PMat M(D, b.members.size() + 1);
    for (size_t k = 0; k < b.members.size(); ++k) {
        const Mat& X = r.op[b.members[k]];
        for (size_t row = 0; row < D; ++row) {
            Poly entry;
            for (size_t vi = 0; vi < ev.size(); ++vi)
                if (!X(row, ev[vi]).is_zero()) entry += Poly::var((unsigned)vi, X(row, ev[vi]));
            M(row, k) = std::move(entry);
        }
    }
    for (size_t vi = 0; vi < ev.size(); ++vi) M(ev[vi], b.members.size()) = Poly::var((unsigned)vi);

    GenericRankOptions opt;
    opt.samples = cfg.samples;
    opt.sample_range = cfg.sample_range;
    opt.seed = cfg.seed;
    opt.max_vars_symbolic = cfg.rank_sym_var_cap;
    opt.max_dim_symbolic = r.dim() <= cfg.spherical_sym_dim_cap
                               ? std::max<size_t>(cfg.rank_sym_dim_cap, std::max(M.rows(), M.cols()))
                               : 0;
    auto res = generic_rank(M, opt);

    SphericityReport rep;
    rep.dim = D;
    rep.generic_rank = res.rank;
    rep.sampled = res.probabilistic;
    rep.spherical = res.rank == D;
    rep.borel_label = b.label;
    if (rep.spherical) {
        rep.witness.assign(D, Scalar(0));
        for (size_t vi = 0; vi < ev.size(); ++vi)
            rep.witness[ev[vi]] = vi < res.witness.size() ? res.witness[vi] : Scalar(0);
        // soundness: the witness must realize the rank exactly
        if (rank(M.eval(res.witness)) != D)
            throw std::logic_error("spherical witness failed re-verification");
    }
    return rep;
}

std::vector<std::pair<std::string, SphericityReport>> spherical_borel_scan(const Rep& r,
                                                                           const Config& cfg) {
    std::vector<std::pair<std::string, SphericityReport>> out;
    for (auto& b : enumerate_borel_classes(r.g)) out.push_back({b.label, is_spherical(r, b, cfg)});
    return out;
}

StabilizerReport stabilizer(const Rep& r, const std::vector<Scalar>& v) {
    const auto& g = *r.g;
    StabilizerReport rep;
    for (Parity p : {Parity::even, Parity::odd}) {
        std::vector<int> idx;
        for (size_t k = 0; k < g.dim(); ++k)
            if (g.par[k] == p) idx.push_back((int)k);
        if (idx.empty()) continue;
        Mat M(r.dim(), idx.size());
        for (size_t c = 0; c < idx.size(); ++c) {
            auto w = r.op[idx[c]].apply(v);
            for (size_t i = 0; i < r.dim(); ++i) M(i, c) = w[i];
        }
        for (auto& kv : kernel(M)) {
            std::vector<Scalar> full(g.dim());
            for (size_t c = 0; c < idx.size(); ++c) full[idx[c]] = kv[c];
            rep.basis.push_back(std::move(full));
            (p == Parity::even ? rep.sdim.ev : rep.sdim.od)++;
        }
    }
    // bracket closure of the stabilizer
    SpanSolver span(g.dim());
    for (auto& x : rep.basis) span.insert(x);
    rep.bracket_closed = true;
    for (auto& x : rep.basis)
        for (auto& y : rep.basis) {
            std::vector<Scalar> br(g.dim());
            for (size_t i = 0; i < g.dim(); ++i) {
                if (x[i].is_zero()) continue;
                for (size_t j = 0; j < g.dim(); ++j) {
                    if (y[j].is_zero()) continue;
                    for (auto& [k, c] : g.bracket_coords((int)i, (int)j)) br[k] += x[i] * y[j] * c;
                }
            }
            if (!span.contains(br)) rep.bracket_closed = false;
        }
    rep.hint = "dim " + rep.sdim.str() + (rep.bracket_closed ? "" : " (not closed)");
    return rep;
}

bool g0_spherical(const Rep& even_rep, const Config& cfg) {
    return is_spherical(even_rep, standard_borel(even_rep.g), cfg).spherical;
}

bool is_numerically_spherical(const Rep& r, const Config& cfg) {
    auto gv = even_part(r.g);
    Rep er = even_block(r, gv);
    long odd_dim = r.sdim().od;
    if (odd_dim > max_odd_borel_dim(r.g)) return false;
    if (er.dim() == 0) return true;
    return g0_spherical(er, cfg);
}

/* ---- even-part spherical weight patterns (quoted classification lists) ---- */

namespace {

Weight mk(const AlgebraPtr& g, std::initializer_list<std::pair<int, Rat>> eps,
          std::initializer_list<std::pair<int, Rat>> del = {}) {
    Weight w(g->wm, g->wn);
    for (auto& [i, c] : eps) w.eps[i < 0 ? g->wm + i : i] += Lin(c);
    for (auto& [j, c] : del) w.del[j < 0 ? g->wn + j : j] += Lin(c);
    return w;
}

bool all_coords_equal(const std::vector<Lin>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (!(v[i] == v[0])) return false;
    return true;
}

/* lambda - pattern must lie in the allowed shift lattice. */
bool matches_mod_shifts(const AlgebraPtr& g, const Weight& lambda, const Weight& pattern) {
    Weight d = lambda - pattern;
    switch (g->kind) {
        case Kind::gl: return all_coords_equal(d.eps) && all_coords_equal(d.del);
        case Kind::p:
        case Kind::q:
        case Kind::even_sub: return all_coords_equal(d.eps) && all_coords_equal(d.del);
        case Kind::osp: {
            if (g->m == 2) {  // free so(2) direction on eps1
                for (auto& c : d.del)
                    if (!c.is_zero()) return false;
                return true;
            }
            for (auto& c : d.eps)
                if (!c.is_zero()) return false;
            for (auto& c : d.del)
                if (!c.is_zero()) return false;
            return true;
        }
        default: return d.is_zero();
    }
}

std::vector<Weight> g0_patterns(const AlgebraPtr& g) {
    std::vector<Weight> out;
    int m = (int)g->wm, n = (int)g->wn;
    switch (g->kind) {
        case Kind::gl: {
            out.push_back(Weight(m, n));  // trivial
            if (m >= 1) {
                out.push_back(mk(g, {{0, 1}}));
                out.push_back(mk(g, {{-1, -1}}));
                out.push_back(mk(g, {{0, 2}}));
                out.push_back(mk(g, {{-1, -2}}));
            }
            if (m >= 2) {
                out.push_back(mk(g, {{0, 1}, {1, 1}}));
                out.push_back(mk(g, {{-2, -1}, {-1, -1}}));
            }
            if (n >= 1) {
                out.push_back(mk(g, {}, {{0, 1}}));
                out.push_back(mk(g, {}, {{-1, -1}}));
                out.push_back(mk(g, {}, {{0, 2}}));
                out.push_back(mk(g, {}, {{-1, -2}}));
            }
            if (n >= 2) {
                out.push_back(mk(g, {}, {{0, 1}, {1, 1}}));
                out.push_back(mk(g, {}, {{-2, -1}, {-1, -1}}));
            }
            if (m >= 1 && n >= 1) {
                out.push_back(mk(g, {{0, 1}}, {{0, 1}}));
                out.push_back(mk(g, {{0, 1}}, {{-1, -1}}));
                out.push_back(mk(g, {{-1, -1}}, {{0, 1}}));
                out.push_back(mk(g, {{-1, -1}}, {{-1, -1}}));
            }
            break;
        }
        case Kind::p:
        case Kind::q: {
            out.push_back(Weight(m, 0));
            out.push_back(mk(g, {{0, 1}}));
            out.push_back(mk(g, {{0, 2}}));
            out.push_back(mk(g, {{-1, -1}}));
            out.push_back(mk(g, {{-1, -2}}));
            if (m >= 2) {
                out.push_back(mk(g, {{0, 1}, {1, 1}}));
                out.push_back(mk(g, {{-2, -1}, {-1, -1}}));
            }
            break;
        }
        case Kind::osp: {
            out.push_back(Weight(m, n));
            if (g->m == 2) {
                out.push_back(mk(g, {}, {{0, 1}}));
                if (n == 2) out.push_back(mk(g, {}, {{0, 1}, {1, 1}}));
                break;
            }
            bool typeD = g->m % 2 == 0;
            out.push_back(mk(g, {}, {{0, 1}}));
            out.push_back(mk(g, {{0, 1}}));
            auto half_spin = [&](int sign_last) {
                Weight w(m, n);
                for (int i = 0; i < m; ++i) w.eps[i] = Lin(Rat(i + 1 == m ? sign_last : 1, 2));
                return w;
            };
            auto full_spin = [&](int sign_last) {
                Weight w(m, n);
                for (int i = 0; i < m; ++i) w.eps[i] = Lin(Rat(i + 1 == m ? sign_last : 1));
                return w;
            };
            if (typeD) {
                if (m == 2 || m == 3 || m == 5) {
                    out.push_back(half_spin(1));
                    out.push_back(half_spin(-1));
                }
                if (m == 2 || m == 3) {
                    out.push_back(full_spin(1));
                    out.push_back(full_spin(-1));
                }
                if (m == 2 || (m == 3 && n <= 2)) {
                    for (int s : {1, -1}) out.push_back(half_spin(s) + mk(g, {}, {{0, 1}}));
                }
            } else {
                if (m <= 4) out.push_back(half_spin(1));
                if ((m == 1 && (n == 1 || n == 2)) || (m == 2 && n == 1))
                    out.push_back(half_spin(1) + mk(g, {}, {{0, 1}}));
            }
            if (n == 2) out.push_back(mk(g, {}, {{0, 1}, {1, 1}}));
            if (n == 1) out.push_back(mk(g, {}, {{0, 2}}));
            break;
        }
        default: break;
    }
    return out;
}

}  // namespace

bool g0_spherical_weight(const AlgebraPtr& g, const Weight& lambda) {
    for (auto& p : g0_patterns(g))
        if (matches_mod_shifts(g, lambda, p)) return true;
    return false;
}

Weight normalize_mod_characters(const AlgebraPtr& g, const Weight& lambda) {
    auto chars = character_constants(g);
    if (chars.empty()) return lambda;
    const Weight& gen = chars[0];
    // zero out the last coordinate on which the generator is supported
    size_t pivot = 0;
    for (size_t i = 0; i < gen.dim(); ++i)
        if (!gen.coord(i).is_zero()) pivot = i;
    Lin coef = lambda.coord(pivot) * Lin(Rat(1) / gen.coord(pivot).const_value());
    Weight out = lambda;
    for (size_t i = 0; i < out.dim(); ++i)
        out.coord(i) -= coef * Lin(gen.coord(i).const_value());
    return out;
}

/* ---- candidate enumeration (section-4 pipeline) ---- */

namespace {

std::optional<Weight> free_direction(const AlgebraPtr& g) {
    switch (g->kind) {
        case Kind::gl: {
            Weight d(g->wm, g->wn);
            for (size_t i = 0; i < g->wm; ++i) d.eps[i] = Lin(1);
            return d;  // det_eps, modulo Ber
        }
        case Kind::osp:
            if (g->m == 2) return Weight::eps_unit(g->wm, g->wn, 0);
            return std::nullopt;
        case Kind::q: {
            Weight d(g->wm, 0);
            for (size_t i = 0; i < g->wm; ++i) d.eps[i] = Lin(1);
            return d;
        }
        default: return std::nullopt;
    }
}

Weight with_param(const Weight& base, const Weight& dir) {
    Weight w = base;
    for (size_t i = 0; i < w.dim(); ++i) w.coord(i) += Lin::param() * Lin(dir.coord(i).const_value());
    return w;
}

/* Canonical translate of a t-family so duplicates collapse: shift t so the
 * last coordinate supporting the direction has constant part 0. */
Weight canonical_family(const AlgebraPtr& g, const Weight& fam, const Weight& dir) {
    size_t pivot = SIZE_MAX;
    for (size_t i = 0; i < dir.dim(); ++i)
        if (!dir.coord(i).is_zero()) pivot = i;
    if (pivot == SIZE_MAX) return fam;
    Rat shift = fam.coord(pivot).c0 / dir.coord(pivot).const_value();
    Weight out = fam;
    for (size_t i = 0; i < out.dim(); ++i)
        out.coord(i) = Lin(out.coord(i).c0 - shift * dir.coord(i).const_value(), out.coord(i).c1);
    return out;
}

bool is_character_multiple(const AlgebraPtr& g, const Weight& w) {
    if (w.is_zero()) return true;
    auto chars = character_constants(g);
    if (chars.empty()) return false;
    const Weight& gen = chars[0];
    Rat ratio;
    bool have = false;
    for (size_t i = 0; i < w.dim(); ++i) {
        const Lin &a = w.coord(i), &b = gen.coord(i);
        if (!a.is_const()) return false;
        if (b.is_zero()) {
            if (!a.is_zero()) return false;
            continue;
        }
        Rat q = a.c0 / b.const_value();
        if (have && q != ratio) return false;
        ratio = q;
        have = true;
    }
    return have;
}

/* Values of t where the family degenerates to a character (excluded). */
std::vector<Rat> character_values(const AlgebraPtr& g, const Weight& fam) {
    std::vector<Rat> vals;
    auto chars = character_constants(g);
    // solve fam(t) = c * gen (or 0) coordinate-wise
    std::vector<Weight> gens = {Weight(fam.m(), fam.n())};
    for (auto& c : chars) gens.push_back(c);
    for (auto& gen : gens) {
        // fam(t) - c*gen = 0: unknowns (t, c); try all t from single-coordinate solves
        for (size_t i = 0; i < fam.dim(); ++i) {
            const Lin& a = fam.coord(i);
            if (a.c1 == 0) continue;
            // for each candidate c from another coordinate... simple scan over
            // t-roots of coordinates not supporting gen
            if (gen.coord(i).is_zero()) {
                Rat t0 = -a.c0 / a.c1;
                Weight at = fam.eval(t0);
                if (is_character_multiple(g, at) &&
                    std::find(vals.begin(), vals.end(), t0) == vals.end())
                    vals.push_back(t0);
            }
        }
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<Weight> simple_isotropic_roots(const AlgebraPtr& g) {
    std::vector<Weight> out;
    if (!g->is_basic()) return out;
    Borel st = standard_borel(g);
    for (auto& alpha : st.simple)
        if (g->form(alpha, alpha).is_zero()) out.push_back(alpha);
    return out;
}

std::vector<Weight> positive_isotropic_roots(const AlgebraPtr& g) {
    std::vector<Weight> out;
    if (!g->is_basic()) return out;
    Borel st = standard_borel(g);
    for (auto& alpha : odd_positive_roots(st))
        if (g->form(alpha, alpha).is_zero()) out.push_back(alpha);
    return out;
}

struct CandCollector {
    const AlgebraPtr& g;
    std::vector<CandidateWeight> out;
    std::set<Weight> seen;

    void add(const CandidateWeight& c) {
        if (seen.insert(c.wt).second) out.push_back(c);
    }
    /* drop concretes that a family already covers */
    void dedupe_against_families() {
        std::vector<CandidateWeight> keep;
        for (auto& c : out) {
            bool covered = false;
            if (!c.wt.has_param()) {
                for (auto& f : out) {
                    if (!f.wt.has_param()) continue;
                    // solve f(t0) == c.wt from the first parametric coordinate
                    std::optional<Rat> t0;
                    bool match = true;
                    for (size_t i = 0; i < c.wt.dim() && match; ++i) {
                        const Lin& a = f.wt.coord(i);
                        const Lin& b = c.wt.coord(i);
                        if (a.c1 == 0) {
                            match = a.c0 == b.c0;
                        } else {
                            Rat cand = (b.c0 - a.c0) / a.c1;
                            if (t0 && *t0 != cand)
                                match = false;
                            else
                                t0 = cand;
                        }
                    }
                    if (match && t0 &&
                        std::find(f.excluded_t.begin(), f.excluded_t.end(), *t0) == f.excluded_t.end()) {
                        covered = true;
                        break;
                    }
                }
            }
            if (!covered) keep.push_back(c);
        }
        out = std::move(keep);
    }
};

long std_borel_odd_dim(const AlgebraPtr& g) { return standard_borel(g).odd_dim(); }

/* dim L0(lambda) with the t-part along the character/torus direction removed
 * (it never changes factor dimensions). */
Rat dim_L0(const AlgebraPtr& g, const Weight& lambda) {
    Weight w = lambda.has_param() ? lambda.eval(Rat(7919)) : lambda;  // dims are t-independent
    return weyl_dim_even(g, w);
}

bool even_dominant_safe(const AlgebraPtr& g, const Weight& w) {
    Weight v = w.has_param() ? w.eval(Rat(7919)) : w;
    return is_dominant_even(g, v);
}

/* Lemma "odd part too large" filter at the simple isotropic roots; may spawn
 * concrete special values.  Returns true if the (possibly symbolic) weight
 * survives, pushing spawned concrete candidates through `recheck`. */
template <typename Recheck>
bool isotropic_dim_filter(const AlgebraPtr& g, const Weight& lambda, long bound, Recheck recheck) {
    for (auto& alpha : simple_isotropic_roots(g)) {
        Lin pairing = g->form(lambda, alpha);
        if (pairing.is_zero()) continue;
        Weight shifted = lambda - alpha;
        bool dim_ok = even_dominant_safe(g, shifted) && dim_L0(g, shifted) <= Rat(bound);
        if (pairing.is_const()) {
            if (!dim_ok) return false;
        } else if (!dim_ok) {
            Rat t0 = -pairing.c0 / pairing.c1;
            recheck(lambda.eval(t0));
            return false;
        }
    }
    return true;
}

void candidates_even_basic(const AlgebraPtr& g, CandCollector& col) {
    auto dir = free_direction(g);
    long bODD = std_borel_odd_dim(g);
    std::function<void(const Weight&, int)> process = [&](const Weight& lam0, int depth) {
        if (depth > 3) return;
        Weight lam = normalize_mod_characters(g, lam0);
        if (!is_dominant(g, lam)) return;
        if (!lam.has_param() && is_character_multiple(g, lam)) return;
        bool ok = isotropic_dim_filter(g, lam, bODD, [&](const Weight& special) {
            process(special, depth + 1);
        });
        if (!ok) return;
        CandidateWeight c;
        c.wt = dir && lam.has_param() ? canonical_family(g, lam, *dir) : lam;
        c.parity = Parity::even;
        if (lam.has_param()) c.excluded_t = character_values(g, c.wt);
        col.add(c);
    };
    for (auto& p : g0_patterns(g)) {
        if (dir)
            process(with_param(p, *dir), 0);
        else
            process(p, 0);
    }
}

void candidates_odd_basic(const AlgebraPtr& g, CandCollector& col, int bound) {
    auto dir = free_direction(g);
    long maxb1 = max_odd_borel_dim(g);
    auto posiso = positive_isotropic_roots(g);

    std::function<void(const Weight&, int)> process = [&](const Weight& lam0, int depth) {
        if (depth > 3) return;
        Weight lam = normalize_mod_characters(g, lam0);
        if (!is_dominant(g, lam)) return;
        if (!lam.has_param() && is_character_multiple(g, lam)) return;
        if (dim_L0(g, lam) > Rat(maxb1)) return;
        // refined simple-root test: lambda - alpha must be g0-spherical
        for (auto& alpha : simple_isotropic_roots(g)) {
            Lin pairing = g->form(lam, alpha);
            if (pairing.is_zero()) continue;
            if (!pairing.is_const()) {
                if (!g0_spherical_weight(g, lam - alpha)) {
                    Rat t0 = -pairing.c0 / pairing.c1;
                    process(lam.eval(t0), depth + 1);
                    return;
                }
            } else if (!g0_spherical_weight(g, lam - alpha)) {
                return;
            }
        }
        // existence of a positive isotropic root moving lambda into the list
        bool exists = false;
        for (auto& alpha : posiso) {
            Lin pairing = g->form(lam, alpha);
            if (pairing.is_zero()) continue;
            if (g0_spherical_weight(g, lam - alpha)) {
                exists = true;
                break;
            }
        }
        if (!exists) return;
        CandidateWeight c;
        c.wt = dir && lam.has_param() ? canonical_family(g, lam, *dir) : lam;
        c.parity = Parity::odd;
        if (lam.has_param()) c.excluded_t = character_values(g, c.wt);
        col.add(c);
    };

    // bounded integral enumeration, normalized mod characters
    std::vector<std::vector<Rat>> eps_choices, del_choices;
    auto enumerate_decreasing = [&](size_t len, bool last_zero, std::vector<std::vector<Rat>>& sink) {
        if (len == 0) {
            sink.push_back({});
            return;
        }
        std::vector<Rat> cur;
        std::function<void(size_t, Rat)> rec2 = [&](size_t pos, Rat hi) {
            if (pos == len) {
                sink.push_back(cur);
                return;
            }
            Rat lo(-bound);
            Rat top = hi;
            if (last_zero && pos + 1 == len) {
                lo = Rat(0);
                top = std::min(top, Rat(0));
            }
            for (Rat v = top; v >= lo; v -= 1) {
                cur.push_back(v);
                rec2(pos + 1, v);
                cur.pop_back();
            }
        };
        rec2(0, Rat(bound));
    };
    bool glkind = g->kind == Kind::gl;
    enumerate_decreasing(g->wm, false, eps_choices);
    enumerate_decreasing(g->wn, glkind, del_choices);  // gl normal form: last delta 0
    for (auto& es : eps_choices)
        for (auto& ds : del_choices) {
            Weight lam(g->wm, g->wn);
            for (size_t i = 0; i < g->wm; ++i) lam.eps[i] = Lin(es[i]);
            for (size_t j = 0; j < g->wn; ++j) lam.del[j] = Lin(ds[j]);
            if (!is_dominant(g, lam)) continue;
            if (dir)
                process(with_param(lam, *dir), 0);
            else
                process(lam, 0);
        }
    // osp half-integer branch
    if (g->kind == Kind::osp && g->m >= 3) {
        std::vector<std::vector<Rat>> hs;
        std::function<void(std::vector<Rat>&)> rec = [&](std::vector<Rat>& cur) {
            if (cur.size() == g->wm) {
                hs.push_back(cur);
                return;
            }
            Rat hi = cur.empty() ? Rat(2 * bound + 1, 2) : cur.back();
            for (Rat v = hi; v >= Rat(1, 2); v -= 1) {
                cur.push_back(v);
                rec(cur);
                cur.pop_back();
            }
        };
        std::vector<Rat> cur;
        rec(cur);
        for (auto& ss : hs)
            for (auto& ds : del_choices) {
                Weight lam(g->wm, g->wn);
                for (size_t i = 0; i < g->wm; ++i) lam.eps[i] = Lin(ss[i]);
                for (size_t j = 0; j < g->wn; ++j) lam.del[j] = Lin(ds[j]);
                if (!is_dominant(g, lam)) continue;
                process(lam, 0);
            }
    }
}

void candidates_p(const AlgebraPtr& g, Parity parity, CandCollector& col, int bound) {
    int n = (int)g->wm;
    if (parity == Parity::even) {
        for (auto& p : g0_patterns(g)) {
            Weight lam = normalize_mod_characters(g, p);
            if (lam.is_zero()) continue;
            if (!is_dominant(g, lam)) continue;
            CandidateWeight c;
            c.wt = lam;
            c.parity = parity;
            col.add(c);
        }
        return;
    }
    // odd: partitions with lambda_n = 0, plus Lemma "negative root" filter
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    std::function<void(size_t, long)> rec = [&](size_t pos, long hi) {
        if (pos == (size_t)n) {
            parts.push_back(cur);
            return;
        }
        long cap = pos + 1 == (size_t)n ? 0 : hi;
        for (long v = cap; v >= 0; --v) {
            cur.push_back(v);
            rec(pos + 1, v);
            cur.pop_back();
        }
    };
    rec(0, bound);
    for (auto& pv : parts) {
        Weight lam(n, 0);
        for (int i = 0; i < n; ++i) lam.eps[i] = Lin(pv[i]);
        if (lam.is_zero()) continue;
        if (dim_L0(g, lam) > Rat(max_odd_borel_dim(g))) continue;
        bool exists = false;
        for (int i = 0; i < n && !exists; ++i)
            for (int j = i; j < n && !exists; ++j) {
                // odd negative roots of b^st are eps_i + eps_j
                Weight shifted = lam + Weight::eps_unit(n, 0, i) + Weight::eps_unit(n, 0, j);
                if (even_dominant_safe(g, shifted) && g0_spherical_weight(g, shifted)) exists = true;
            }
        if (!exists) continue;
        CandidateWeight c;
        c.wt = lam;
        c.parity = parity;
        col.add(c);
    }
}

void candidates_q(const AlgebraPtr& g, CandCollector& col, int bound) {
    int n = (int)g->wm;
    long maxb1 = max_odd_borel_dim(g);
    auto dir = free_direction(g);
    std::vector<std::vector<long>> tuples;
    std::vector<long> cur;
    std::function<void(size_t, long)> rec = [&](size_t pos, long hi) {
        if (pos == (size_t)n) {
            tuples.push_back(cur);
            return;
        }
        for (long v = hi; v >= -bound; --v) {
            cur.push_back(v);
            rec(pos + 1, v);
            cur.pop_back();
        }
    };
    rec(0, bound);
    for (auto& tv : tuples) {
        Weight base(n, 0);
        for (int i = 0; i < n; ++i) base.eps[i] = Lin(tv[i]);
        for (bool fam : {true, false}) {
            Weight lam = fam ? with_param(base, *dir) : base;
            if (!is_dominant(g, lam)) continue;
            if (!fam && lam.is_zero()) continue;
            if (!g0_spherical_weight(g, lam)) continue;
            if (dim_L0(g, lam) > Rat(maxb1)) continue;
            CandidateWeight c;
            c.wt = fam ? canonical_family(g, lam, *dir) : lam;
            c.parity = Parity::even;
            c.note = "parity-combined";
            if (fam) c.excluded_t = character_values(g, c.wt);
            col.add(c);
        }
    }
}

}  // namespace

std::vector<CandidateWeight> candidate_weights(const AlgebraPtr& g, Parity parity, int bound,
                                               const Config& cfg) {
    (void)cfg;
    CandCollector col{g};
    switch (g->kind) {
        case Kind::gl:
        case Kind::osp:
            if (parity == Parity::even)
                candidates_even_basic(g, col);
            else
                candidates_odd_basic(g, col, bound);
            break;
        case Kind::p: candidates_p(g, parity, col, bound); break;
        case Kind::q: candidates_q(g, col, bound); break;
        default: throw std::invalid_argument("candidate_weights: unsupported algebra kind");
    }
    col.dedupe_against_families();
    return col.out;
}

std::vector<CandidateWeight> candidate_weights(const RootDatum& rd, Parity parity, int bound,
                                               const Config& cfg) {
    (void)cfg;
    std::vector<CandidateWeight> out;
    long maxb1 = rd.max_odd_borel_dim();
    auto even_simple = simple_of_positive(rd.even_positive());
    auto patterns = exc_even_spherical_weights(rd);
    auto g0_ok = [&](const Weight& w) {
        if (w.is_zero()) return true;
        for (auto& p : patterns)
            if (w == p) return true;
        return false;
    };
    auto dominant = [&](const Weight& w) {
        if (rd.kind == ExcKind::D21a) return d21a_dominant_c(rd.alpha, d21a_c_of_weight(rd, w));
        return exc_is_dominant(rd, w);
    };
    auto iso_filter = [&](const Weight& lam) {
        for (auto& alpha : rd.simple_bst) {
            if (!rd.form(alpha, alpha).is_zero()) continue;
            if (rd.form(lam, alpha).is_zero()) continue;
            Weight shifted = lam - alpha;
            if (!dominant_for_roots(even_simple, rd.gram, shifted)) return false;
            if (exc_weyl_dim_even(rd, shifted) > Rat(maxb1)) return false;
        }
        return true;
    };
    auto odd_conditions = [&](const Weight& lam) {
        // simple positive isotropic roots must move lambda into the list
        for (auto& alpha : rd.simple_bst) {
            if (!rd.form(alpha, alpha).is_zero()) continue;
            if (rd.form(lam, alpha).is_zero()) continue;
            if (!g0_ok(lam - alpha)) return false;
        }
        bool exists = false;
        for (auto& alpha : rd.odd_positive()) {
            if (!rd.form(alpha, alpha).is_zero()) continue;
            if (rd.form(lam, alpha).is_zero()) continue;
            if (g0_ok(lam - alpha)) {
                exists = true;
                break;
            }
        }
        return exists;
    };

    std::set<Weight> seen;
    auto add = [&](const Weight& w) {
        if (!seen.insert(w).second) return;
        CandidateWeight c;
        c.wt = w;
        c.parity = parity;
        c.osp24_redirect = rd.kind == ExcKind::D21a && rd.osp24_isomorphic;
        if (c.osp24_redirect) c.note = "isomorphic to osp(2|4); handled there";
        out.push_back(c);
    };

    if (parity == Parity::even) {
        for (auto& p : patterns) {
            if (p.is_zero()) continue;
            if (!dominant(p)) continue;
            if (!iso_filter(p)) continue;
            add(p);
        }
        return out;
    }
    // odd parity: bounded enumeration over fundamental coordinates
    if (rd.kind == ExcKind::D21a) {
        for (long c1 = 0; c1 <= bound; ++c1)
            for (long c2 = 0; c2 <= bound; ++c2)
                for (long c3 = 0; c3 <= bound; ++c3) {
                    if (c1 + c2 + c3 == 0) continue;
                    std::vector<Rat> c{Rat(c1), Rat(c2), Rat(c3)};
                    if (!d21a_dominant_c(rd.alpha, c)) continue;
                    if (Rat((c1 + 1) * (c2 + 1) * (c3 + 1)) > Rat(maxb1)) continue;
                    Weight w = d21a_weight_from_c(rd, c);
                    if (!odd_conditions(w)) continue;
                    add(w);
                }
        return out;
    }
    // fundamental weights of the even simple system
    size_t rank = even_simple.size();
    Mat pair(rank, rank);
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rank; ++j) {
            Lin num = rd.form(even_simple[j], even_simple[i]);
            Lin den = rd.form(even_simple[j], even_simple[j]);
            pair(i, j) = Scalar(2 * num.const_value() / den.const_value());
        }
    // lambda = sum k_i omega_i: express in the simple-root coordinate basis
    size_t d = rd.wm + rd.wn;
    Mat S(d, rank);
    for (size_t j = 0; j < rank; ++j)
        for (size_t i = 0; i < d; ++i) S(i, j) = Scalar(even_simple[j].coord(i).const_value());
    std::vector<long> ks(rank, 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == rank) {
            bool allzero = true;
            for (auto k : ks) allzero = allzero && k == 0;
            if (allzero) return;
            // solve pair * x = ks, lambda = S x
            std::vector<Scalar> rhs;
            for (auto k : ks) rhs.push_back(Scalar(k));
            auto x = solve(pair, rhs);
            if (!x) return;
            Weight lam(rd.wm, rd.wn);
            for (size_t i = 0; i < d; ++i) {
                Scalar acc(0);
                for (size_t j = 0; j < rank; ++j) acc += S(i, j) * (*x)[j];
                lam.coord(i) = Lin(acc.as_rat());
            }
            if (exc_weyl_dim_even(rd, lam) > Rat(maxb1)) return;
            if (!dominant(lam)) return;
            if (!odd_conditions(lam)) return;
            add(lam);
            return;
        }
        for (long k = 0; k <= bound + 4; ++k) {
            ks[pos] = k;
            rec(pos + 1);
        }
        ks[pos] = 0;
    };
    rec(0);
    return out;
}

}  // namespace sla
