#pragma once

#include <string>
#include <vector>

#include "sla/linalg.hpp"
#include "sla/scalar.hpp"

namespace sla {

enum class Parity : int { even = 0, odd = 1 };
inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
inline Parity operator+(Parity a, Parity b) {
    return (static_cast<int>(a) ^ static_cast<int>(b)) ? Parity::odd : Parity::even;
}
inline int sign_of(Parity a, Parity b) {  // Koszul sign (-1)^{|a||b|}
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

struct SuperDim {
    long ev = 0, od = 0;
    bool operator==(const SuperDim& o) const { return ev == o.ev && od == o.od; }
    bool operator!=(const SuperDim& o) const { return !(*this == o); }
    long total() const { return ev + od; }
    std::string str() const { return "(" + std::to_string(ev) + "|" + std::to_string(od) + ")"; }
};

/* Linear polynomial c0 + c1*t in the single family parameter t. */
struct Lin {
    Rat c0, c1;
    Lin() : c0(0), c1(0) {}
    Lin(long v) : c0(v), c1(0) {}
    Lin(const Rat& v) : c0(v), c1(0) {}
    Lin(const Rat& a, const Rat& b) : c0(a), c1(b) {}
    static Lin param() { return Lin(Rat(0), Rat(1)); }

    bool is_zero() const { return c0 == 0 && c1 == 0; }
    bool is_const() const { return c1 == 0; }
    Rat eval(const Rat& t) const { return c0 + c1 * t; }
    const Rat& const_value() const;

    Lin operator-() const { return Lin(-c0, -c1); }
    Lin operator+(const Lin& o) const { return Lin(c0 + o.c0, c1 + o.c1); }
    Lin operator-(const Lin& o) const { return Lin(c0 - o.c0, c1 - o.c1); }
    Lin operator*(const Lin& o) const;  // throws if both sides carry t
    Lin& operator+=(const Lin& o) { return *this = *this + o; }
    Lin& operator-=(const Lin& o) { return *this = *this - o; }
    bool operator==(const Lin& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Lin& o) const { return !(*this == o); }
    bool operator<(const Lin& o) const;
    std::string str() const;
};

/* Weight coordinates on eps_1..eps_m, delta_1..delta_n plus the zeta
 * bookkeeping degree used for symmetric-power slices. */
struct Weight {
    std::vector<Lin> eps, del;
    long zeta = 0;

    Weight() = default;
    Weight(size_t m, size_t n) : eps(m), del(n) {}

    size_t m() const { return eps.size(); }
    size_t n() const { return del.size(); }
    bool is_zero() const;
    bool has_param() const;
    Weight eval(const Rat& t) const;

    Lin& coord(size_t i);  // eps then del, concatenated indexing
    const Lin& coord(size_t i) const;
    size_t dim() const { return eps.size() + del.size(); }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(const Rat& c) const;
    bool operator==(const Weight& o) const;
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const;

    std::string str() const;

    static Weight eps_unit(size_t m, size_t n, size_t i, const Rat& c = Rat(1));
    static Weight del_unit(size_t m, size_t n, size_t j, const Rat& c = Rat(1));
};

/* Pairing of two weights under a symmetric Gram matrix on the concatenated
 * coordinates (only the eps/del part; zeta is bookkeeping). */
Lin form_pair(const Mat& gram, const Weight& a, const Weight& b);

std::string parity_str(Parity p);

}  // namespace sla
