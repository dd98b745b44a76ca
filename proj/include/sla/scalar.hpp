#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sla {

using Rat = mpq_class;

Rat rat(long num, long den = 1);
Rat rat_from_string(const std::string& s);
std::string rat_str(const Rat& r);

/* Field scalar a + b*sqrt(disc), with disc a squarefree integer.
 * Pure rationals carry disc = 0.  Arithmetic between two values with
 * different nonzero discriminants is rejected: each computation lives in
 * a single quadratic extension Q(sqrt(d)).  Values are kept normalized:
 * b == 0 forces disc = 0.
 */
class Scalar {
  public:
    Scalar() : a_(0), b_(0), disc_(0) {}
    Scalar(long v) : a_(v), b_(0), disc_(0) {}
    Scalar(const Rat& v) : a_(v), b_(0), disc_(0) { a_.canonicalize(); }
    Scalar(const Rat& a, const Rat& b, long disc);

    static Scalar sqrt_of(const Rat& r);  // exact square root, extending if needed

    const Rat& rat_part() const { return a_; }
    const Rat& surd_part() const { return b_; }
    long disc() const { return disc_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    /* Throws if the value is irrational. */
    const Rat& as_rat() const;

    Scalar operator-() const { return Scalar(-a_, -b_, disc_); }
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_ && disc_ == o.disc_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /* Total order used only for deterministic container keys. */
    bool operator<(const Scalar& o) const;

    std::string str() const;

    /* Rough size measure for pivot selection. */
    size_t bitsize() const;

  private:
    Rat a_, b_;
    long disc_;
    static long merge_disc(const Scalar& x, const Scalar& y);
};

inline Scalar operator*(long c, const Scalar& s) { return Scalar(c) * s; }

}  // namespace sla
