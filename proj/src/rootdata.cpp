#include "sla/rootdata.hpp"

#include <algorithm>
#include <set>

namespace sla {

std::string exc_kind_str(ExcKind k) {
    switch (k) {
        case ExcKind::G12: return "G(1,2)";
        case ExcKind::F13: return "F(1,3)";
        case ExcKind::D21a: return "D(2,1;a)";
    }
    return "?";
}

SuperDim RootDatum::root_count() const {
    SuperDim d;
    for (auto& r : roots) (r.parity == Parity::even ? d.ev : d.od)++;
    return d;
}

long RootDatum::max_odd_borel_dim() const { return root_count().od / 2; }

std::vector<Weight> RootDatum::all_root_weights() const {
    std::vector<Weight> v;
    for (auto& r : roots) v.push_back(r.wt);
    return v;
}

std::vector<Weight> RootDatum::even_positive() const {
    std::vector<Weight> even;
    for (auto& r : roots)
        if (r.parity == Parity::even) even.push_back(r.wt);
    return positive_from_simple(even, simple_bst);
}

std::vector<Weight> RootDatum::odd_positive() const {
    std::vector<Weight> odd;
    for (auto& r : roots)
        if (r.parity == Parity::odd) odd.push_back(r.wt);
    return positive_from_simple(odd, simple_bst);
}

namespace {

Weight w3(size_t m, size_t n, std::initializer_list<Rat> eps, std::initializer_list<Rat> del) {
    Weight w(m, n);
    size_t i = 0;
    for (auto& c : eps) w.eps[i++] = Lin(c);
    i = 0;
    for (auto& c : del) w.del[i++] = Lin(c);
    return w;
}

void push_roots(RootDatum& rd, const std::vector<Weight>& ws, Parity p) {
    for (auto& w : ws) {
        bool iso = form_pair(rd.gram, w, w).is_zero();
        rd.roots.push_back({w, p, iso});
    }
}

RootDatum build_g12() {
    RootDatum rd;
    rd.kind = ExcKind::G12;
    rd.wm = 2;  // eps1, eps2 with eps3 = -eps1-eps2
    rd.wn = 1;  // delta
    rd.gram = Mat(3, 3);
    rd.gram(0, 0) = Scalar(2);
    rd.gram(1, 1) = Scalar(2);
    rd.gram(0, 1) = rd.gram(1, 0) = Scalar(-1);
    rd.gram(2, 2) = Scalar(-2);
    auto E = [&](long a, long b) { return w3(2, 1, {Rat(a), Rat(b)}, {Rat(0)}); };
    auto D = [&](long d) { return w3(2, 1, {Rat(0), Rat(0)}, {Rat(d)}); };
    // eps_1, eps_2, eps_3 = -(eps_1+eps_2) in reduced coordinates
    std::vector<Weight> epsv = {E(1, 0), E(0, 1), E(-1, -1)};
    std::vector<Weight> even, odd;
    for (auto& e : epsv) {
        even.push_back(e);
        even.push_back(-e);
    }
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            if (i != j) even.push_back(epsv[i] - epsv[j]);
    even.push_back(D(2));
    even.push_back(D(-2));
    odd.push_back(D(1));
    odd.push_back(D(-1));
    for (int sd : {1, -1})
        for (size_t j = 0; j < 3; ++j) {
            odd.push_back(D(sd) + epsv[j]);
            odd.push_back(D(sd) - epsv[j]);
        }
    push_roots(rd, even, Parity::even);
    push_roots(rd, odd, Parity::odd);
    // standard Borel: simple roots delta+eps_3, eps_1, eps_2-eps_1
    rd.simple_bst = {D(1) + epsv[2], epsv[0], epsv[1] - epsv[0]};
    return rd;
}

RootDatum build_f13() {
    RootDatum rd;
    rd.kind = ExcKind::F13;
    rd.wm = 3;
    rd.wn = 1;
    rd.gram = Mat(4, 4);
    for (int i = 0; i < 3; ++i) rd.gram(i, i) = Scalar(1);
    rd.gram(3, 3) = Scalar(-3);
    auto E = [&](long a, long b, long c, Rat d) { return w3(3, 1, {Rat(a), Rat(b), Rat(c)}, {d}); };
    std::vector<Weight> even, odd;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    Weight w(3, 1);
                    w.eps[i] = Lin(si);
                    w.eps[j] = Lin(sj);
                    even.push_back(w);
                }
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            Weight w(3, 1);
            w.eps[i] = Lin(s);
            even.push_back(w);
        }
    even.push_back(E(0, 0, 0, Rat(1)));
    even.push_back(E(0, 0, 0, Rat(-1)));
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1})
                for (int sd : {1, -1}) {
                    Weight w(3, 1);
                    w.eps[0] = Lin(Rat(s1, 2));
                    w.eps[1] = Lin(Rat(s2, 2));
                    w.eps[2] = Lin(Rat(s3, 2));
                    w.del[0] = Lin(Rat(sd, 2));
                    odd.push_back(w);
                }
    push_roots(rd, even, Parity::even);
    push_roots(rd, odd, Parity::odd);
    // simple roots: (-eps1-eps2-eps3+delta)/2, eps3, eps2-eps3, eps1-eps2
    rd.simple_bst = {E(0, 0, 0, Rat(0)), E(0, 0, 1, Rat(0)), E(0, 1, -1, Rat(0)), E(1, -1, 0, Rat(0))};
    rd.simple_bst[0].eps[0] = Lin(Rat(-1, 2));
    rd.simple_bst[0].eps[1] = Lin(Rat(-1, 2));
    rd.simple_bst[0].eps[2] = Lin(Rat(-1, 2));
    rd.simple_bst[0].del[0] = Lin(Rat(1, 2));
    return rd;
}

RootDatum build_d21a(const Rat& a) {
    if (a == 0 || a == -1) throw std::invalid_argument("D(2,1;a) is degenerate at a = 0, -1");
    RootDatum rd;
    rd.kind = ExcKind::D21a;
    rd.alpha = a;
    rd.wm = 3;  // coordinates (eps, delta, gamma)
    rd.wn = 0;
    rd.gram = Mat(3, 3);
    rd.gram(0, 0) = Scalar(Rat(1));
    rd.gram(1, 1) = Scalar(a);
    rd.gram(2, 2) = Scalar(-(1 + a));
    std::vector<Weight> even, odd;
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            Weight w(3, 0);
            w.eps[i] = Lin(s);
            even.push_back(w);
        }
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
                Weight w(3, 0);
                w.eps[0] = Lin(Rat(s1, 2));
                w.eps[1] = Lin(Rat(s2, 2));
                w.eps[2] = Lin(Rat(s3, 2));
                odd.push_back(w);
            }
    push_roots(rd, even, Parity::even);
    push_roots(rd, odd, Parity::odd);
    // all-isotropic simple system: {(-e+d+g)/2, (e-d+g)/2, (e+d-g)/2}
    auto half = [&](int s1, int s2, int s3) {
        Weight w(3, 0);
        w.eps[0] = Lin(Rat(s1, 2));
        w.eps[1] = Lin(Rat(s2, 2));
        w.eps[2] = Lin(Rat(s3, 2));
        return w;
    };
    rd.simple_bst = {half(-1, 1, 1), half(1, -1, 1), half(1, 1, -1)};
    rd.osp24_isomorphic = (a == 1 || a == -2);
    return rd;
}

}  // namespace

RootDatum exceptional_root_datum(ExcKind kind, const Rat& alpha_param) {
    switch (kind) {
        case ExcKind::G12: return build_g12();
        case ExcKind::F13: return build_f13();
        case ExcKind::D21a: return build_d21a(alpha_param);
    }
    throw std::invalid_argument("bad exceptional kind");
}

bool exc_is_dominant(const RootDatum& rd, const Weight& lambda) {
    auto even_simple = simple_of_positive(rd.even_positive());
    // walk every reachable (simple system, transported weight) state
    std::set<std::pair<std::vector<Weight>, Weight>> visited;
    std::vector<std::pair<std::vector<Weight>, Weight>> stack = {{rd.simple_bst, lambda}};
    auto canon = [](std::vector<Weight> s) {
        std::sort(s.begin(), s.end());
        return s;
    };
    while (!stack.empty()) {
        auto [simple, wt] = stack.back();
        stack.pop_back();
        if (!visited.insert({canon(simple), wt}).second) continue;
        if (!dominant_for_roots(even_simple, rd.gram, wt)) return false;
        for (auto& alpha : simple) {
            if (!form_pair(rd.gram, alpha, alpha).is_zero()) continue;
            auto next = odd_reflection(rd.gram, simple, alpha);
            auto r = reflect_highest_weight(rd.gram, wt, Parity::even, alpha);
            stack.push_back({next, r.lambda});
        }
    }
    return true;
}

Weight d21a_weight_from_c(const RootDatum& rd, const std::vector<Rat>& c) {
    // principal roots: beta_1 = alpha_2+alpha_3 = eps, beta_2 = alpha_1+alpha_3 = delta,
    // beta_3 = alpha_1+alpha_2 = gamma; c_i = 2(lambda, beta_i)/(beta_i, beta_i)
    // matching the quoted dominance conditions: lambda = (c3/2) eps +
    // (c1/2) delta + (c2/2) gamma (cross-checked against the odd-reflection
    // orbit criterion)
    (void)rd;
    Weight w(3, 0);
    w.eps[0] = Lin(c[2] / 2);
    w.eps[1] = Lin(c[0] / 2);
    w.eps[2] = Lin(c[1] / 2);
    return w;
}

std::vector<Rat> d21a_c_of_weight(const RootDatum& rd, const Weight& w) {
    std::vector<Rat> c(3);
    for (int i = 0; i < 3; ++i) {
        Weight beta = Weight::eps_unit(3, 0, i);
        Lin num = rd.form(w, beta), den = rd.form(beta, beta);
        c[i] = 2 * num.const_value() / den.const_value();
    }
    // (eps, delta, gamma) pairings give (c3, c1, c2)
    return {c[1], c[2], c[0]};
}

bool d21a_dominant_c(const Rat& a, const std::vector<Rat>& c) {
    for (auto& x : c)
        if (x < 0 || x.get_den() != 1) return false;
    if (c[0] > 0 && c[1] > 0 && c[2] > 0) return true;
    if (c[0] == 0 && (a + 1) * c[1] + c[2] == 0) return true;
    if (c[1] == 0 && -a * c[0] + c[2] == 0) return true;
    if (c[2] == 0 && -a * c[0] + (a + 1) * c[1] == 0) return true;
    return false;
}

Rat exc_weyl_dim_even(const RootDatum& rd, const Weight& lambda) {
    return weyl_dim_formula(rd.even_positive(), rd.gram, lambda);
}

std::vector<Weight> exc_even_spherical_weights(const RootDatum& rd) {
    std::vector<Weight> out;
    switch (rd.kind) {
        case ExcKind::G12: {
            out.push_back(w3(2, 1, {Rat(0), Rat(0)}, {Rat(1)}));   // delta
            out.push_back(w3(2, 1, {Rat(0), Rat(0)}, {Rat(2)}));   // 2 delta
            out.push_back(w3(2, 1, {Rat(1), Rat(1)}, {Rat(0)}));   // eps1+eps2
            break;
        }
        case ExcKind::F13: {
            out.push_back(w3(3, 1, {Rat(0), Rat(0), Rat(0)}, {Rat(1, 2)}));
            out.push_back(w3(3, 1, {Rat(0), Rat(0), Rat(0)}, {Rat(1)}));
            out.push_back(w3(3, 1, {Rat(1), Rat(0), Rat(0)}, {Rat(0)}));
            out.push_back(w3(3, 1, {Rat(1, 2), Rat(1, 2), Rat(1, 2)}, {Rat(0)}));
            break;
        }
        case ExcKind::D21a: {
            for (int pos = 0; pos < 3; ++pos)
                for (long x : {1, 2}) {
                    std::vector<Rat> c(3, Rat(0));
                    c[pos] = Rat(x);
                    out.push_back(d21a_weight_from_c(rd, c));
                }
            for (int zero = 0; zero < 3; ++zero) {
                std::vector<Rat> c(3, Rat(1));
                c[zero] = Rat(0);
                out.push_back(d21a_weight_from_c(rd, c));
            }
            break;
        }
    }
    return out;
}

}  // namespace sla
