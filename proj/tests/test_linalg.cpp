#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sla/linalg.hpp"

using namespace sla;

static Mat from_longs(std::initializer_list<std::initializer_list<long>> rows) {
    size_t r = rows.size(), c = rows.begin()->size();
    Mat m(r, c);
    size_t i = 0;
    for (auto& row : rows) {
        size_t j = 0;
        for (long v : row) m(i, j++) = Scalar(v);
        ++i;
    }
    return m;
}

TEST_CASE("quadratic scalars") {
    Scalar a = Scalar::sqrt_of(rat(-1, 2));  // (1/2) sqrt(-2)
    CHECK(a.disc() == -2);
    CHECK((a * a) == Scalar(rat(-1, 2)));
    CHECK((a.inverse() * a) == Scalar(1));
    Scalar b = Scalar::sqrt_of(rat(9, 4));
    CHECK(b == Scalar(rat(3, 2)));
    Scalar c = Scalar::sqrt_of(rat(12));
    CHECK(c.disc() == 3);
    CHECK((c * c) == Scalar(12));
    CHECK_THROWS(Scalar::sqrt_of(rat(-3)) + Scalar::sqrt_of(rat(-2)));
    CHECK((Scalar(rat(2, 3)) + Scalar::sqrt_of(rat(5))).str() == "2/3+1*sqrt(5)");
}

TEST_CASE("rank examples") {
    CHECK(rank(Mat::identity(3)) == 3);
    CHECK(rank(Mat(4, 2)) == 0);
    CHECK(rank(from_longs({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Mat::identity(3)).empty());
    CHECK(kernel(Mat(2, 3)).size() == 3);
    auto k = kernel(from_longs({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * Scalar(1) + k[0][1] == Scalar(0));  // spans (1,-1)
}

TEST_CASE("rank equals rank of transpose on random rational matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    for (int trial = 0; trial < 12; ++trial) {
        Mat m(4, 5);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 5; ++j) m(i, j) = Scalar(rat(num(rng), den(rng)));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve and SpanSolver coordinates") {
    Mat m = from_longs({{2, 1}, {0, 3}});
    auto x = solve(m, {Scalar(5), Scalar(9)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(1));
    CHECK((*x)[1] == Scalar(3));
    SpanSolver span(3);
    CHECK(span.insert({Scalar(1), Scalar(1), Scalar(0)}));
    CHECK(span.insert({Scalar(0), Scalar(1), Scalar(1)}));
    CHECK(!span.insert({Scalar(1), Scalar(2), Scalar(1)}));
    auto c = span.coords({Scalar(2), Scalar(3), Scalar(1)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Scalar(2));
    CHECK((*c)[1] == Scalar(1));
    CHECK(!span.coords({Scalar(0), Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("generic rank examples") {
    // [[x, y], [2x, 2y]] has generic rank 1
    PMat m(2, 2);
    m(0, 0) = Poly::var(0);
    m(0, 1) = Poly::var(1);
    m(1, 0) = Poly::var(0) * Poly(Scalar(2));
    m(1, 1) = Poly::var(1) * Poly(Scalar(2));
    auto r = generic_rank(m);
    CHECK(r.rank == 1);
    CHECK(!r.probabilistic);

    PMat id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = Poly(Scalar(1));
    CHECK(generic_rank(id).rank == 3);

    // [[x, 1], [1, x]]: rank 2, witnessed at x = 0 among others
    PMat h(2, 2);
    h(0, 0) = Poly::var(0);
    h(0, 1) = Poly(Scalar(1));
    h(1, 0) = Poly(Scalar(1));
    h(1, 1) = Poly::var(0);
    auto rh = generic_rank(h);
    CHECK(rh.rank == 2);
    // brute-force oracle over a few specializations
    size_t best = 0;
    for (long x : {0, 1, 2}) {
        Mat s(2, 2);
        s(0, 0) = s(1, 1) = Scalar(x);
        s(0, 1) = s(1, 0) = Scalar(1);
        best = std::max(best, rank(s));
    }
    CHECK(rh.rank == best);
    CHECK(rank(h.eval(rh.witness)) == 2);
}

TEST_CASE("generic rank matches sampled maxima") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int trial = 0; trial < 6; ++trial) {
        PMat m(3, 4);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 4; ++j) {
                Poly p(Scalar(c(rng)));
                p += Poly::var(0, Scalar(c(rng)));
                p += Poly::var(1, Scalar(c(rng)));
                m(i, j) = p;
            }
        auto r = generic_rank(m);
        size_t best = 0;
        std::uniform_int_distribution<long> v(-10, 10);
        for (int s = 0; s < 20; ++s) {
            std::vector<Scalar> pt{Scalar(v(rng)), Scalar(v(rng))};
            best = std::max(best, rank(m.eval(pt)));
        }
        CHECK(r.rank >= best);
        CHECK(rank(m.eval(r.witness)) == r.rank);
    }
}

TEST_CASE("polynomial exact division and roots") {
    Poly x = Poly::var(0), y = Poly::var(1);
    Poly p = (x * y + Poly(Scalar(2))) * (x - y);
    CHECK(p.divide_exact(x - y) == x * y + Poly(Scalar(2)));
    CHECK_THROWS(p.divide_exact(x + Poly(Scalar(1))));
    // roots of (2t - 1)(t + 3)
    Poly t = Poly::var(0);
    Poly q = (t * Poly(Scalar(2)) - Poly(Scalar(1))) * (t + Poly(Scalar(3)));
    auto roots = q.rational_roots(0);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == rat(-3));
    CHECK(roots[1] == rat(1, 2));
}

TEST_CASE("span closure examples") {
    // empty generators: the identity alone
    CHECK(span_closure({}, 2).size() == 1);
    // diag(1,-1): dimension 2
    Mat d(2, 2);
    d(0, 0) = Scalar(1);
    d(1, 1) = Scalar(-1);
    CHECK(span_closure({d}, 2).size() == 2);
    // matrix units e12, e21 generate the full 2x2 algebra
    Mat e12(2, 2), e21(2, 2);
    e12(0, 1) = Scalar(1);
    e21(1, 0) = Scalar(1);
    auto alg = span_closure({e12, e21}, 2);
    CHECK(alg.size() == 4);
    // closure property: products stay inside
    SpanSolver span(4);
    for (auto& b : alg) span.insert(b.flatten());
    for (auto& a : alg)
        for (auto& b : alg) CHECK(span.contains((a * b).flatten()));
}

TEST_CASE("dickson radical examples") {
    Mat e12(2, 2), e21(2, 2), e11(2, 2);
    e12(0, 1) = Scalar(1);
    e21(1, 0) = Scalar(1);
    e11(0, 0) = Scalar(1);
    CHECK(dickson_radical(span_closure({e12, e21}, 2)).empty());
    // upper triangular algebra {I, e11, e12}: radical is spanned by e12
    auto rad = dickson_radical({Mat::identity(2), e11, e12});
    REQUIRE(rad.size() == 1);
    CHECK(!rad[0](0, 1).is_zero());
    CHECK(rad[0](0, 0).is_zero());
    // REJECT non-closed input
    CHECK_THROWS_AS(dickson_radical({Mat::identity(2), e12, e21}), std::invalid_argument);
    // radical elements are nilpotent
    for (auto& x : rad) CHECK((x * x).is_zero());
    // the U^{1|1} image algebra {I, e21} has nonzero radical
    auto rad2 = dickson_radical(span_closure({e21}, 2));
    REQUIRE(rad2.size() == 1);
    CHECK(!rad2[0](1, 0).is_zero());
}
