#pragma once

#include <map>
#include <vector>

#include "sla/scalar.hpp"

namespace sla {

/* Exponent vector with trailing zeros stripped; empty = constant monomial. */
using Mono = std::vector<unsigned>;

struct MonoLess {
    bool operator()(const Mono& x, const Mono& y) const;
};

/* Sparse multivariate polynomial over Scalar, variables indexed 0,1,2,...
 * The zero polynomial has an empty term map.
 */
class Poly {
  public:
    Poly() = default;
    Poly(const Scalar& c);
    Poly(long c) : Poly(Scalar(c)) {}
    static Poly var(unsigned i, const Scalar& coeff = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;  // throws if non-constant
    size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;
    unsigned num_vars() const;  // 1 + max variable index used

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /* Exact division: throws if o does not divide exactly. */
    Poly divide_exact(const Poly& o) const;

    /* Divide all coefficients by the leading coefficient's scalar (monic-ish
     * rescale; rank-preserving). */
    Poly scalar_normalized() const;

    Scalar eval(const std::vector<Scalar>& point) const;
    /* Substitute nothing but reindex is not needed; partial eval of var i. */
    Poly eval_var(unsigned i, const Scalar& value) const;

    const std::map<Mono, Scalar, MonoLess>& terms() const { return terms_; }
    void set_term(const Mono& m, const Scalar& c);

    /* Leading term under the lex order used by the term map. */
    std::pair<Mono, Scalar> leading() const;

    std::string str(const std::vector<std::string>& names = {}) const;

    /* For univariate polynomials in variable i: rational roots. */
    std::vector<Rat> rational_roots(unsigned i) const;

    size_t bitsize() const;

  private:
    std::map<Mono, Scalar, MonoLess> terms_;
    void trim(Mono& m) const;
};

}  // namespace sla
