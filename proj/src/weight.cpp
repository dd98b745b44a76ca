#include "sla/weight.hpp"

#include <sstream>

namespace sla {

const Rat& Lin::const_value() const {
    if (c1 != 0) throw std::domain_error("value depends on the family parameter t");
    return c0;
}

Lin Lin::operator*(const Lin& o) const {
    if (c1 != 0 && o.c1 != 0) throw std::domain_error("quadratic term in family parameter");
    return Lin(c0 * o.c0, c0 * o.c1 + c1 * o.c0);
}

bool Lin::operator<(const Lin& o) const {
    int c = cmp(c0, o.c0);
    if (c != 0) return c < 0;
    return cmp(c1, o.c1) < 0;
}

std::string Lin::str() const {
    if (c1 == 0) return c0.get_str();
    std::string ts = (c1 == 1) ? "t" : (c1 == -1 ? "-t" : c1.get_str() + "*t");
    if (c0 == 0) return ts;
    return c0.get_str() + (ts[0] == '-' ? "" : "+") + ts;
}

bool Weight::is_zero() const {
    for (auto& c : eps)
        if (!c.is_zero()) return false;
    for (auto& c : del)
        if (!c.is_zero()) return false;
    return zeta == 0;
}

bool Weight::has_param() const {
    for (auto& c : eps)
        if (!c.is_const()) return true;
    for (auto& c : del)
        if (!c.is_const()) return true;
    return false;
}

Weight Weight::eval(const Rat& t) const {
    Weight w(m(), n());
    for (size_t i = 0; i < eps.size(); ++i) w.eps[i] = Lin(eps[i].eval(t));
    for (size_t i = 0; i < del.size(); ++i) w.del[i] = Lin(del[i].eval(t));
    w.zeta = zeta;
    return w;
}

Lin& Weight::coord(size_t i) { return i < eps.size() ? eps[i] : del[i - eps.size()]; }
const Lin& Weight::coord(size_t i) const { return i < eps.size() ? eps[i] : del[i - eps.size()]; }

static void check_shape(const Weight& a, const Weight& b) {
    if (a.m() != b.m() || a.n() != b.n()) throw std::invalid_argument("weight shape mismatch");
}

Weight Weight::operator+(const Weight& o) const {
    check_shape(*this, o);
    Weight w = *this;
    for (size_t i = 0; i < eps.size(); ++i) w.eps[i] += o.eps[i];
    for (size_t i = 0; i < del.size(); ++i) w.del[i] += o.del[i];
    w.zeta += o.zeta;
    return w;
}

Weight Weight::operator-(const Weight& o) const {
    check_shape(*this, o);
    Weight w = *this;
    for (size_t i = 0; i < eps.size(); ++i) w.eps[i] -= o.eps[i];
    for (size_t i = 0; i < del.size(); ++i) w.del[i] -= o.del[i];
    w.zeta -= o.zeta;
    return w;
}

Weight Weight::operator-() const {
    Weight w(m(), n());
    for (size_t i = 0; i < eps.size(); ++i) w.eps[i] = -eps[i];
    for (size_t i = 0; i < del.size(); ++i) w.del[i] = -del[i];
    w.zeta = -zeta;
    return w;
}

Weight Weight::scaled(const Rat& c) const {
    Weight w = *this;
    for (auto& x : w.eps) x = x * Lin(c);
    for (auto& x : w.del) x = x * Lin(c);
    return w;  // zeta untouched by scaling; callers scale weights, not degrees
}

bool Weight::operator==(const Weight& o) const {
    return eps == o.eps && del == o.del && zeta == o.zeta;
}

bool Weight::operator<(const Weight& o) const {
    if (eps != o.eps) return std::lexicographical_compare(eps.begin(), eps.end(), o.eps.begin(), o.eps.end());
    if (del != o.del) return std::lexicographical_compare(del.begin(), del.end(), o.del.begin(), o.del.end());
    return zeta < o.zeta;
}

std::string Weight::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Lin& c, const std::string& sym) {
        if (c.is_zero()) return;
        std::string cs = c.str();
        if (cs == "1")
            os << (first ? "" : "+") << sym;
        else if (cs == "-1")
            os << "-" << sym;
        else if (cs.find_first_of("+-", 1) != std::string::npos || !c.is_const())
            os << (first ? "(" : "+(") << cs << ")" << sym;
        else
            os << (first || cs[0] == '-' ? "" : "+") << cs << sym;
        first = false;
    };
    for (size_t i = 0; i < eps.size(); ++i) emit(eps[i], "e" + std::to_string(i + 1));
    for (size_t i = 0; i < del.size(); ++i) emit(del[i], "d" + std::to_string(i + 1));
    if (zeta != 0) emit(Lin(zeta), "z");
    if (first) return "0";
    return os.str();
}

Weight Weight::eps_unit(size_t m, size_t n, size_t i, const Rat& c) {
    Weight w(m, n);
    w.eps.at(i) = Lin(c);
    return w;
}

Weight Weight::del_unit(size_t m, size_t n, size_t j, const Rat& c) {
    Weight w(m, n);
    w.del.at(j) = Lin(c);
    return w;
}

Lin form_pair(const Mat& gram, const Weight& a, const Weight& b) {
    size_t d = a.dim();
    if (gram.rows() != d || gram.cols() != d || b.dim() != d)
        throw std::invalid_argument("form/weight dimension mismatch");
    Lin acc;
    for (size_t i = 0; i < d; ++i) {
        if (a.coord(i).is_zero()) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b.coord(j).is_zero() || gram(i, j).is_zero()) continue;
            acc += a.coord(i) * b.coord(j) * Lin(gram(i, j).as_rat());
        }
    }
    return acc;
}

std::string parity_str(Parity p) { return p == Parity::even ? "even" : "odd"; }

}  // namespace sla
