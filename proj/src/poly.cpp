#include "sla/poly.hpp"

#include <algorithm>
#include <sstream>

namespace sla {

bool MonoLess::operator()(const Mono& x, const Mono& y) const {
    size_t n = std::max(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
        unsigned a = i < x.size() ? x[i] : 0;
        unsigned b = i < y.size() ? y[i] : 0;
        if (a != b) return a < b;
    }
    return false;
}

Poly::Poly(const Scalar& c) {
    if (!c.is_zero()) terms_[Mono{}] = c;
}

Poly Poly::var(unsigned i, const Scalar& coeff) {
    Poly p;
    if (coeff.is_zero()) return p;
    Mono m(i + 1, 0);
    m[i] = 1;
    p.terms_[m] = coeff;
    return p;
}

void Poly::trim(Mono& m) const {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar Poly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) {
        unsigned s = 0;
        for (unsigned e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

unsigned Poly::num_vars() const {
    unsigned n = 0;
    for (auto& [m, c] : terms_) n = std::max<unsigned>(n, (unsigned)m.size());
    return n;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : terms_) {
        for (auto& [m2, c2] : o.terms_) {
            Mono m(std::max(m1.size(), m2.size()), 0);
            for (size_t i = 0; i < m.size(); ++i) {
                unsigned a = i < m1.size() ? m1[i] : 0;
                unsigned b = i < m2.size() ? m2[i] : 0;
                m[i] = a + b;
            }
            trim(m);
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Scalar v = c1 * c2;
                if (!v.is_zero()) r.terms_[m] = v;
            } else {
                it->second += c1 * c2;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

void Poly::set_term(const Mono& m, const Scalar& c) {
    Mono mm = m;
    trim(mm);
    if (c.is_zero())
        terms_.erase(mm);
    else
        terms_[mm] = c;
}

std::pair<Mono, Scalar> Poly::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Poly Poly::divide_exact(const Poly& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = *this, quot;
    auto [lm, lc] = o.leading();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading();
        Mono q(std::max(rm.size(), lm.size()), 0);
        for (size_t i = 0; i < q.size(); ++i) {
            unsigned a = i < rm.size() ? rm[i] : 0;
            unsigned b = i < lm.size() ? lm[i] : 0;
            if (a < b) throw std::domain_error("inexact polynomial division");
            q[i] = a - b;
        }
        trim(q);
        Poly qt;
        qt.terms_[q] = rc / lc;
        quot += qt;
        rem -= qt * o;
    }
    return quot;
}

Poly Poly::scalar_normalized() const {
    if (is_zero()) return *this;
    Scalar lc = leading().second;
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[m] = c / lc;
    return r;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
    Scalar acc(0);
    for (auto& [m, c] : terms_) {
        Scalar t = c;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= point.size()) throw std::invalid_argument("evaluation point too short");
            for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

Poly Poly::eval_var(unsigned i, const Scalar& value) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Scalar coeff = c;
        Mono mm = m;
        if (i < mm.size() && mm[i] > 0) {
            for (unsigned k = 0; k < mm[i]; ++k) coeff *= value;
            mm[i] = 0;
        }
        trim(mm);
        if (coeff.is_zero()) continue;
        auto it = r.terms_.find(mm);
        if (it == r.terms_.end())
            r.terms_[mm] = coeff;
        else {
            it->second += coeff;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        for (size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            os << "*";
            if (i < names.size())
                os << names[i];
            else
                os << "x" << i;
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

std::vector<Rat> Poly::rational_roots(unsigned i) const {
    // collect integer coefficient vector of the univariate polynomial in x_i
    std::vector<Rat> coeffs;  // coeffs[k] of x_i^k
    for (auto& [m, c] : terms_) {
        unsigned deg = i < m.size() ? m[i] : 0;
        for (size_t j = 0; j < m.size(); ++j)
            if (j != i && m[j] != 0) throw std::domain_error("not univariate in requested variable");
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
        coeffs[deg] = c.as_rat();
    }
    std::vector<Rat> roots;
    if (coeffs.size() <= 1) return roots;  // constant: no roots reported
    // clear denominators
    mpz_class den(1);
    for (auto& c : coeffs) den = den / gcd(den, mpz_class(c.get_den())) * c.get_den();
    std::vector<mpz_class> z;
    for (auto& c : coeffs) z.push_back(mpz_class(c * Rat(den)));
    while (!z.empty() && z.back() == 0) z.pop_back();
    size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low >= z.size() - 1) return roots;
    mpz_class a0 = abs(z[low]), an = abs(z.back());
    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> d;
        for (mpz_class f = 1; f * f <= n; ++f)
            if (n % f == 0) {
                d.push_back(f);
                if (f * f != n) d.push_back(n / f);
            }
        return d;
    };
    auto horner = [&](const Rat& x) {
        Rat acc(0);
        for (size_t k = z.size(); k-- > low;) acc = acc * x + Rat(z[k]);
        return acc;
    };
    for (auto& p : divisors(a0))
        for (auto& q : divisors(an))
            for (int s : {1, -1}) {
                Rat cand(s * p, q);
                cand.canonicalize();
                if (horner(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

size_t Poly::bitsize() const {
    size_t n = 0;
    for (auto& [m, c] : terms_) n += c.bitsize() + m.size();
    return n;
}

}  // namespace sla
