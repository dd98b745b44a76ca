#include "sla/borel.hpp"

#include <algorithm>
#include <set>

namespace sla {

std::vector<SeqToken> parse_eps_delta(const std::string& s) {
    std::vector<SeqToken> toks;
    size_t i = 0;
    while (i < s.size()) {
        SeqToken t{false, 1};
        if (s[i] == '(') {
            if (i + 3 >= s.size() || s[i + 1] != '-' || s[i + 2] != 'e' || s[i + 3] != ')')
                throw std::invalid_argument("bad sign token in sequence: " + s);
            t = {true, -1};
            i += 4;
        } else if (s[i] == 'e') {
            t = {true, 1};
            ++i;
        } else if (s[i] == 'd') {
            t = {false, 1};
            ++i;
        } else {
            throw std::invalid_argument("bad character in eps-delta sequence: " + s);
        }
        size_t rep = 1;
        if (i < s.size() && isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
            rep = std::stoul(s.substr(i, j - i));
            if (rep == 0) throw std::invalid_argument("zero repeat in sequence: " + s);
            i = j;
        }
        for (size_t k = 0; k < rep; ++k) toks.push_back(t);
    }
    if (toks.empty()) throw std::invalid_argument("empty eps-delta sequence");
    return toks;
}

std::string sequence_str(const std::vector<SeqToken>& toks) {
    std::string s;
    for (auto& t : toks) s += t.is_eps ? (t.sign < 0 ? "(-e)" : "e") : "d";
    return s;
}

Lin coweight_pair(const Weight& alpha, const std::vector<Rat>& h) {
    if (alpha.dim() != h.size()) throw std::invalid_argument("coweight dimension mismatch");
    Lin acc;
    for (size_t i = 0; i < h.size(); ++i)
        if (!alpha.coord(i).is_zero() && h[i] != 0) acc += alpha.coord(i) * Lin(h[i]);
    return acc;
}

static Borel borel_from_positivity(const AlgebraPtr& g, const std::vector<Rat>& h,
                                   const std::string& label) {
    for (auto& alpha : g->roots()) {
        Lin v = coweight_pair(alpha, h);
        if (v.is_zero()) throw std::invalid_argument("coweight is not generic");
    }
    Borel b;
    b.g = g;
    b.label = label;
    b.coweight = h;
    for (int c : g->cartan) b.members.push_back(c);
    std::set<Weight> pos;
    for (size_t i = 0; i < g->basis.size(); ++i) {
        if (!g->root_of[i]) continue;
        Lin v = coweight_pair(*g->root_of[i], h);
        if (v.const_value() > 0) {
            b.members.push_back((int)i);
            pos.insert(*g->root_of[i]);
        }
    }
    b.pos_roots.assign(pos.begin(), pos.end());
    for (int i : b.members) (g->par[i] == Parity::even ? b.bdim.ev : b.bdim.od)++;
    return b;
}

Borel borel_from_coweight(const AlgebraPtr& g, const std::vector<Rat>& h) {
    std::string label = "h=";
    for (size_t i = 0; i < h.size(); ++i) label += (i ? "," : "") + h[i].get_str();
    return borel_from_positivity(g, h, label);
}

/* Coweight whose chamber realizes the sequence: token values descend and the
 * osp chambers keep delta values positive. */
static std::vector<Rat> sequence_coweight(const AlgebraPtr& g, const std::vector<SeqToken>& toks) {
    std::vector<Rat> h(g->wm + g->wn, Rat(0));
    long L = (long)toks.size();
    size_t ie = 0, id = 0;
    for (size_t k = 0; k < toks.size(); ++k) {
        long val = L - (long)k;
        if (toks[k].is_eps)
            h[ie++] = Rat(val * toks[k].sign);
        else
            h[g->wm + id++] = Rat(val);
    }
    return h;
}

Borel borel_from_sequence(const AlgebraPtr& g, const std::string& seq) {
    auto toks = parse_eps_delta(seq);
    if (!(g->kind == Kind::gl || g->kind == Kind::osp))
        throw std::invalid_argument("eps-delta sequences apply to gl and osp only");
    size_t ne = 0, nd = 0;
    for (auto& t : toks) (t.is_eps ? ne : nd)++;
    if (ne != g->wm || nd != g->wn)
        throw std::invalid_argument("sequence shape does not match the algebra: " + seq);
    bool typeD = g->kind == Kind::osp && g->m % 2 == 0;
    for (auto& t : toks)
        if (t.sign < 0 && !typeD)
            throw std::invalid_argument("sign tokens are only allowed for osp type D");

    // token values in eps/delta coordinates
    std::vector<Weight> vals;
    size_t ie = 0, id = 0;
    for (auto& t : toks)
        vals.push_back(t.is_eps ? Weight::eps_unit(g->wm, g->wn, ie++, Rat(t.sign))
                                : Weight::del_unit(g->wm, g->wn, id++));
    std::vector<Weight> simple;
    for (size_t k = 0; k + 1 < vals.size(); ++k) simple.push_back(vals[k] - vals[k + 1]);
    if (g->kind == Kind::osp) {
        if (g->m % 2 == 1) {
            simple.push_back(vals.back());
        } else if (!toks.back().is_eps) {
            simple.push_back(vals.back() + vals.back());
        } else {
            if (vals.size() < 2) throw std::invalid_argument("sequence too short for osp type D");
            simple.push_back(vals[vals.size() - 2] + vals.back());
        }
    }
    Borel b = borel_from_positivity(g, sequence_coweight(g, toks), sequence_str(toks));
    b.simple = simple;
    return b;
}

Borel standard_borel(const AlgebraPtr& g) {
    switch (g->kind) {
        case Kind::gl: {
            std::string s(g->wm, 'e');
            s += std::string(g->wn, 'd');
            return borel_from_sequence(g, s);
        }
        case Kind::osp: {
            std::string s;
            if (g->m == 2) {
                s = "e" + std::string(g->wn, 'd');
            } else {
                s = std::string(g->wn, 'd') + std::string(g->wm, 'e');
            }
            return borel_from_sequence(g, s);
        }
        case Kind::p: {
            // b0 upper triangular, odd part g_{-1}: eps_i+eps_j all negative
            std::vector<Rat> h;
            for (int i = 0; i < g->n; ++i) h.push_back(Rat(-(i + 1)));
            Borel b = borel_from_positivity(g, h, "st");
            return b;
        }
        case Kind::q: {
            std::vector<Rat> h;
            for (int i = 0; i < g->n; ++i) h.push_back(Rat(g->n - i));
            Borel b = borel_from_positivity(g, h, "st");
            return b;
        }
        case Kind::u11: {
            Borel b;
            b.g = g;
            b.label = "full";
            b.members = {0};
            b.bdim = {0, 1};
            return b;
        }
        default: {
            // even subalgebra: all positive even roots of a descending coweight
            std::vector<Rat> h(g->wm + g->wn);
            for (size_t i = 0; i < h.size(); ++i) h[i] = Rat((long)(h.size() - i));
            return borel_from_positivity(g, h, "st");
        }
    }
}

Borel opposite_borel(const Borel& b) {
    if (b.g->kind == Kind::u11) return b;  // b = g is self-opposite
    std::vector<Rat> h;
    for (auto& x : b.coweight) h.push_back(-x);
    Borel o = borel_from_positivity(b.g, h, b.label + "^op");
    return o;
}

static void p_coweight_check(const std::vector<Rat>& h) {
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = i; j < h.size(); ++j)
            if (h[i] + h[j] == 0) throw std::invalid_argument("p(n) coweight not generic");
}

std::vector<Borel> enumerate_borel_classes(const AlgebraPtr& g) {
    std::vector<Borel> out;
    switch (g->kind) {
        case Kind::gl:
        case Kind::osp: {
            bool typeD = g->kind == Kind::osp && g->m % 2 == 0;
            size_t m = g->wm, n = g->wn;
            std::vector<std::string> shuffles;
            std::string word(m, 'e');
            word += std::string(n, 'd');
            std::sort(word.begin(), word.end());
            do {
                shuffles.push_back(word);
            } while (std::next_permutation(word.begin(), word.end()));
            std::sort(shuffles.begin(), shuffles.end(), [](const std::string& a, const std::string& b) {
                return a > b;  // 'e' before 'd' words first for stable, readable order
            });
            for (auto& s : shuffles) {
                if (typeD && m >= 1) {
                    // sign choice on the last eps token
                    for (int sg : {1, -1}) {
                        std::string seq;
                        size_t last_e = s.find_last_of('e');
                        for (size_t i = 0; i < s.size(); ++i) {
                            if (s[i] == 'e' && i == last_e && sg < 0)
                                seq += "(-e)";
                            else
                                seq += s[i];
                        }
                        out.push_back(borel_from_sequence(g, seq));
                    }
                } else {
                    out.push_back(borel_from_sequence(g, s));
                }
            }
            break;
        }
        case Kind::q:
        case Kind::u11: out.push_back(standard_borel(g)); break;
        case Kind::p: {
            int n = g->n;
            long B = 2 * n;
            std::vector<long> cur(n);
            std::set<std::string> seen;
            std::function<void(int, long)> rec = [&](int pos, long hi) {
                if (pos == n) {
                    std::vector<Rat> h;
                    for (long v : cur) h.push_back(Rat(v));
                    std::string key;
                    for (int i = 0; i < n; ++i)
                        for (int j = i; j < n; ++j) {
                            if (cur[i] + cur[j] == 0) return;
                            key += (cur[i] + cur[j] > 0) ? '+' : '-';
                        }
                    if (seen.count(key)) return;
                    seen.insert(key);
                    Borel b = borel_from_positivity(g, h, "p[" + key + "]");
                    out.push_back(b);
                    return;
                }
                for (long v = hi; v >= -B; --v) {
                    cur[pos] = v;
                    rec(pos + 1, v - 1);
                }
            };
            rec(0, B);
            std::sort(out.begin(), out.end(), [](const Borel& a, const Borel& b) { return a.label < b.label; });
            break;
        }
        default: throw std::invalid_argument("enumerate_borel_classes: unsupported kind");
    }
    return out;
}

std::vector<Weight> positive_from_simple(const std::vector<Weight>& all_roots,
                                         const std::vector<Weight>& simple) {
    if (simple.empty()) return {};
    size_t d = simple[0].dim();
    Mat S(d, simple.size());
    for (size_t j = 0; j < simple.size(); ++j)
        for (size_t i = 0; i < d; ++i) S(i, j) = simple[j].coord(i).const_value();
    std::vector<Weight> pos;
    for (auto& alpha : all_roots) {
        std::vector<Scalar> rhs(d);
        for (size_t i = 0; i < d; ++i) rhs[i] = Scalar(alpha.coord(i).const_value());
        auto c = solve(S, rhs);
        if (!c) continue;
        bool nonneg = true;
        for (auto& x : *c) nonneg = nonneg && (x.is_rational() && x.as_rat() >= 0);
        if (nonneg) pos.push_back(alpha);
    }
    return pos;
}

std::vector<Weight> odd_reflection(const Mat& gram, const std::vector<Weight>& simple,
                                   const Weight& alpha) {
    if (!form_pair(gram, alpha, alpha).is_zero())
        throw std::invalid_argument("odd reflection requires an isotropic root");
    bool found = false;
    for (auto& b : simple) found = found || b == alpha;
    if (!found) throw std::invalid_argument("odd reflection requires a simple root of the system");
    std::vector<Weight> out;
    for (auto& beta : simple) {
        if (beta == alpha)
            out.push_back(-alpha);
        else if (form_pair(gram, beta, alpha).is_zero())
            out.push_back(beta);
        else
            out.push_back(beta + alpha);
    }
    return out;
}

ReflectedWeight reflect_highest_weight(const Mat& gram, const Weight& lambda, Parity parity,
                                       const Weight& alpha) {
    Lin pairing = form_pair(gram, lambda, alpha);
    ReflectedWeight r;
    r.vanishing_t = std::nullopt;
    if (pairing.is_zero()) {
        r.lambda = lambda;
        r.parity = parity;
        r.moved = false;
        return r;
    }
    if (!pairing.is_const()) {
        Rat root = -pairing.c0 / pairing.c1;
        r.vanishing_t = root;
    }
    r.lambda = lambda - alpha;
    r.parity = flip(parity);
    r.moved = true;
    return r;
}

Mat even_gram(const AlgebraPtr& g) {
    if (g->has_form()) return g->gram;
    return Mat::identity(g->wm + g->wn);
}

std::vector<Weight> even_positive_roots(const Borel& b) {
    std::vector<Weight> out;
    std::set<Weight> seen;
    for (int i : b.members) {
        if (!b.g->root_of[i] || b.g->par[i] != Parity::even) continue;
        if (seen.insert(*b.g->root_of[i]).second) out.push_back(*b.g->root_of[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> odd_positive_roots(const Borel& b) {
    std::vector<Weight> out;
    std::set<Weight> seen;
    for (int i : b.members) {
        if (!b.g->root_of[i] || b.g->par[i] != Parity::odd) continue;
        if (seen.insert(*b.g->root_of[i]).second) out.push_back(*b.g->root_of[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> simple_of_positive(const std::vector<Weight>& positive) {
    std::set<Weight> pos(positive.begin(), positive.end());
    std::vector<Weight> simple;
    for (auto& a : positive) {
        bool decomposable = false;
        for (auto& b : positive) {
            if (decomposable) break;
            for (auto& c : positive)
                if (b + c == a) {
                    decomposable = true;
                    break;
                }
        }
        if (!decomposable) simple.push_back(a);
    }
    return simple;
}

bool dominant_for_roots(const std::vector<Weight>& even_simple, const Mat& gram, const Weight& lambda) {
    for (auto& alpha : even_simple) {
        Lin num = form_pair(gram, lambda, alpha);
        Lin den = form_pair(gram, alpha, alpha);
        if (!num.is_const()) return false;
        Rat v = 2 * num.const_value() / den.const_value();
        if (v < 0 || v.get_den() != 1) return false;
    }
    return true;
}

bool is_dominant_even(const AlgebraPtr& g, const Weight& lambda) {
    if (lambda.m() != g->wm || lambda.n() != g->wn) throw std::invalid_argument("weight shape mismatch");
    Borel st = standard_borel(g);
    auto simple = simple_of_positive(even_positive_roots(st));
    return dominant_for_roots(simple, even_gram(g), lambda);
}

static bool const_int_geq0(const Lin& x) {
    return x.is_const() && x.c0.get_den() == 1 && x.c0 >= 0;
}

bool is_dominant(const AlgebraPtr& g, const Weight& lambda) {
    if (lambda.m() != g->wm || lambda.n() != g->wn)
        throw std::invalid_argument("weight shape does not match the algebra");
    switch (g->kind) {
        case Kind::gl: {
            for (size_t i = 0; i + 1 < g->wm; ++i)
                if (!const_int_geq0(lambda.eps[i] - lambda.eps[i + 1])) return false;
            for (size_t j = 0; j + 1 < g->wn; ++j)
                if (!const_int_geq0(lambda.del[j] - lambda.del[j + 1])) return false;
            return true;
        }
        case Kind::osp: {
            size_t m = g->wm, n = g->wn;
            // delta part: decreasing nonnegative integers
            for (size_t j = 0; j < n; ++j) {
                if (!lambda.del[j].is_const()) return false;
                const Rat& t = lambda.del[j].c0;
                if (t.get_den() != 1) return false;
                if (j + 1 < n && lambda.del[j].c0 < lambda.del[j + 1].c0) return false;
            }
            if (n > 0 && lambda.del[n - 1].c0 < 0) return false;
            if (g->m == 2) return true;  // osp(2|2n): s arbitrary (type I)
            // eps part: all integers or all half-integers
            std::vector<Rat> s;
            for (size_t i = 0; i < m; ++i) {
                if (!lambda.eps[i].is_const()) return false;
                s.push_back(lambda.eps[i].c0);
            }
            bool half = false;
            for (auto& x : s) {
                if (x.get_den() == 1) continue;
                if (x.get_den() == 2)
                    half = true;
                else
                    return false;
            }
            if (half)
                for (auto& x : s)
                    if (x.get_den() != 2) return false;
            bool typeD = g->m % 2 == 0;
            for (size_t i = 0; i + 1 < m; ++i)
                if (s[i] < (i + 2 == m && typeD ? abs(s[i + 1]) : s[i + 1])) return false;
            if (!typeD && m > 0 && s[m - 1] < 0) return false;
            Rat tn = n > 0 ? lambda.del[n - 1].c0 : Rat(0);
            if (half) return tn >= (long)m;
            // hook condition: the eps columns must fit under the delta rows
            long nonzero = 0;
            for (auto& x : s)
                if (x != 0) ++nonzero;
            return tn >= nonzero;
        }
        case Kind::p: {
            for (size_t i = 0; i + 1 < g->wm; ++i)
                if (!const_int_geq0(lambda.eps[i] - lambda.eps[i + 1])) return false;
            return true;
        }
        case Kind::q: {
            for (size_t i = 0; i + 1 < g->wm; ++i) {
                Lin d = lambda.eps[i] - lambda.eps[i + 1];
                if (d.is_zero()) {
                    if (!lambda.eps[i].is_zero()) return false;
                } else if (!const_int_geq0(d)) {
                    return false;
                }
            }
            return true;
        }
        case Kind::u11: return true;
        case Kind::even_sub: return is_dominant_even(g, lambda);
    }
    return false;
}

Rat weyl_dim_formula(const std::vector<Weight>& even_positive, const Mat& gram, const Weight& lambda) {
    if (even_positive.empty()) return Rat(1);
    Weight rho = even_positive[0];
    for (size_t i = 1; i < even_positive.size(); ++i) rho = rho + even_positive[i];
    rho = rho.scaled(Rat(1, 2));
    Rat dim(1);
    for (auto& alpha : even_positive) {
        Lin num = form_pair(gram, lambda + rho, alpha);
        Lin den = form_pair(gram, rho, alpha);
        dim *= num.const_value() / den.const_value();
    }
    return dim;
}

Rat weyl_dim_even(const AlgebraPtr& g, const Weight& lambda) {
    Borel st = standard_borel(g);
    auto pos = even_positive_roots(st);
    Mat gram = even_gram(g);
    if (!dominant_for_roots(simple_of_positive(pos), gram, lambda))
        throw std::invalid_argument("weyl_dim_even: weight is not even-dominant");
    return weyl_dim_formula(pos, gram, lambda);
}

std::vector<Weight> character_constants(const AlgebraPtr& g) {
    switch (g->kind) {
        case Kind::gl: {
            Weight ber(g->wm, g->wn);
            for (size_t i = 0; i < g->wm; ++i) ber.eps[i] = Lin(1);
            for (size_t j = 0; j < g->wn; ++j) ber.del[j] = Lin(-1);
            return {ber};
        }
        case Kind::p: {
            Weight omega(g->wm, 0);
            for (size_t i = 0; i < g->wm; ++i) omega.eps[i] = Lin(1);
            return {omega};
        }
        default: return {};
    }
}

bool has_odd_character(const AlgebraPtr& g) { return g->kind == Kind::q || g->kind == Kind::u11; }

long max_odd_borel_dim(const AlgebraPtr& g) {
    long best = 0;
    for (auto& b : enumerate_borel_classes(g)) best = std::max(best, b.odd_dim());
    return best;
}

}  // namespace sla
