#include "sla/scalar.hpp"

namespace sla {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Scalar::Scalar(const Rat& a, const Rat& b, long disc) : a_(a), b_(b), disc_(disc) {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0) disc_ = 0;
    if (b_ != 0 && (disc_ == 0 || disc_ == 1)) throw std::invalid_argument("degenerate discriminant");
}

/* Split n = s^2 * d with d squarefree (n nonzero integer). */
static void squarefree_split(mpz_class n, mpz_class& s, long& d) {
    bool neg = n < 0;
    if (neg) n = -n;
    s = 1;
    for (mpz_class f = 2; f * f <= n; ++f) {
        mpz_class f2 = f * f;
        while (n % f2 == 0) {
            n /= f2;
            s *= f;
        }
    }
    if (!n.fits_slong_p()) throw std::overflow_error("discriminant too large");
    d = n.get_si() * (neg ? -1 : 1);
}

Scalar Scalar::sqrt_of(const Rat& r) {
    if (r == 0) return Scalar();
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class pq = r.get_num() * r.get_den();
    mpz_class s;
    long d;
    squarefree_split(pq, s, d);
    Rat coeff(s, r.get_den());
    coeff.canonicalize();
    if (d == 1) return Scalar(coeff);
    return Scalar(Rat(0), coeff, d);
}

const Rat& Scalar::as_rat() const {
    if (b_ != 0) throw std::domain_error("scalar is not rational: " + str());
    return a_;
}

long Scalar::merge_disc(const Scalar& x, const Scalar& y) {
    if (x.disc_ == 0) return y.disc_;
    if (y.disc_ == 0 || x.disc_ == y.disc_) return x.disc_;
    throw std::domain_error("mixing distinct quadratic extensions");
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(a_ + o.a_, b_ + o.b_, merge_disc(*this, o));
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(a_ - o.a_, b_ - o.b_, merge_disc(*this, o));
}

Scalar Scalar::operator*(const Scalar& o) const {
    long d = merge_disc(*this, o);
    return Scalar(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rat norm = a_ * a_ - b_ * b_ * disc_;
    // norm != 0 since disc is not a rational square
    return Scalar(a_ / norm, -b_ / norm, disc_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator<(const Scalar& o) const {
    if (disc_ != o.disc_) return disc_ < o.disc_;
    int c = cmp(a_, o.a_);
    if (c != 0) return c < 0;
    return cmp(b_, o.b_) < 0;
}

std::string Scalar::str() const {
    if (b_ == 0) return a_.get_str();
    std::string surd = b_.get_str() + "*sqrt(" + std::to_string(disc_) + ")";
    if (a_ == 0) return surd;
    if (b_ > 0) return a_.get_str() + "+" + surd;
    return a_.get_str() + surd;  // b_ negative includes its sign
}

size_t Scalar::bitsize() const {
    size_t n = mpz_sizeinbase(a_.get_num().get_mpz_t(), 2) + mpz_sizeinbase(a_.get_den().get_mpz_t(), 2);
    if (b_ != 0)
        n += mpz_sizeinbase(b_.get_num().get_mpz_t(), 2) + mpz_sizeinbase(b_.get_den().get_mpz_t(), 2);
    return n;
}

}  // namespace sla
