#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sla/modtools.hpp"

using namespace sla;

static Weight E(const AlgebraPtr& g, size_t i, long c = 1) {
    return Weight::eps_unit(g->wm, g->wn, i, Rat(c));
}
static Weight D(const AlgebraPtr& g, size_t j, long c = 1) {
    return Weight::del_unit(g->wm, g->wn, j, Rat(c));
}

TEST_CASE("standard modules") {
    CHECK(standard_module(build_algebra(Kind::gl, 2, 3)).sdim() == SuperDim{2, 3});
    CHECK(standard_module(build_algebra(Kind::osp, 3, 1)).sdim() == SuperDim{3, 2});
    CHECK(standard_module(build_algebra(Kind::p, 2)).sdim() == SuperDim{2, 2});
    for (auto g : {build_algebra(Kind::gl, 1, 2), build_algebra(Kind::osp, 2, 2),
                   build_algebra(Kind::p, 3), build_algebra(Kind::q, 2)}) {
        auto v = verify_representation(standard_module(g));
        CHECK(v.ok);
    }
}

TEST_CASE("parity shift, dual, tensor") {
    auto o = build_algebra(Kind::osp, 3, 1);
    Rep v = standard_module(o);
    CHECK(parity_shift(v).sdim() == SuperDim{2, 3});
    CHECK(verify_representation(parity_shift(v)).ok);
    Rep dv = dual(v);
    CHECK(verify_representation(dv).ok);
    // dual weights are negated, parities kept
    auto wd = v.weight_decomposition();
    for (auto& [w, sd] : dv.weight_decomposition()) CHECK(wd.at(-w) == sd);
    Rep triv = trivial_module(o);
    Rep dt = dual(triv);
    CHECK(dt.sdim() == SuperDim{1, 0});
    CHECK(dt.vwt[0].is_zero());
    auto g11 = build_algebra(Kind::gl, 1, 1);
    Rep t = tensor(standard_module(g11), standard_module(g11));
    CHECK(t.sdim() == SuperDim{2, 2});
    CHECK(verify_representation(t).ok);
    // dual of dual has the original weight multiset
    Rep ddv = dual(dv);
    CHECK(ddv.weight_decomposition() == v.weight_decomposition());
}

TEST_CASE("symmetric and exterior powers") {
    auto g22 = build_algebra(Kind::gl, 2, 2);
    Rep v = standard_module(g22);
    Rep s2 = sym_power(v, 2);
    CHECK(s2.sdim() == SuperDim{4, 4});
    CHECK(verify_representation(s2).ok);
    Rep ps2 = sym_power(parity_shift(v), 2);
    CHECK(ps2.sdim() == SuperDim{4, 4});
    CHECK(verify_representation(ps2).ok);
    auto o24 = build_algebra(Kind::osp, 2, 2);
    // exterior powers beyond the even dimension survive on the odd variables
    Rep a3 = alt_power(standard_module(o24), 3);
    CHECK(a3.dim() > 0);
    CHECK(verify_representation(a3).ok);
    auto g23 = build_algebra(Kind::gl, 2, 3);
    CHECK(sym_power(standard_module(g23), 2).sdim() == SuperDim{3 + 3, 6});
}

TEST_CASE("character twists") {
    auto g12 = build_algebra(Kind::gl, 1, 2);
    Rep v = standard_module(g12);
    Rep same = character_twist(v, g12->zero_weight());
    for (size_t k = 0; k < g12->dim(); ++k) CHECK(same.op[k] == v.op[k]);
    Weight ber = character_constants(g12)[0];
    Rep tw = character_twist(v, -ber);
    CHECK(verify_representation(tw).ok);
    auto wd = tw.weight_decomposition();
    CHECK(wd.count(D(g12, 0) + D(g12, 1)));  // eps1 - Ber = delta1 + delta2
    auto p3 = build_algebra(Kind::p, 3);
    Weight omega = character_constants(p3)[0];
    Rep comega = character_twist(trivial_module(p3), omega);
    CHECK(comega.vwt[0] == omega);
    CHECK(verify_representation(comega).ok);
    CHECK_THROWS_AS(character_twist(v, E(g12, 0)), std::invalid_argument);
}

TEST_CASE("Kac modules") {
    auto g12 = build_algebra(Kind::gl, 1, 2);
    auto k_half = kac_module_typeI(g12, E(g12, 0, 1).scaled(rat(1, 2)));
    CHECK(k_half.rep.sdim() == SuperDim{2, 2});
    CHECK(verify_representation(k_half.rep).ok);
    auto g11 = build_algebra(Kind::gl, 1, 1);
    auto k0 = kac_module_typeI(g11, g11->zero_weight());
    CHECK(k0.rep.sdim() == SuperDim{1, 1});
    auto o24 = build_algebra(Kind::osp, 2, 2);
    Weight lam = D(o24, 0) + D(o24, 1) + E(o24, 0, -1);
    auto ko = kac_module_typeI(o24, lam);
    CHECK(ko.rep.sdim() == SuperDim{40, 40});
    CHECK(verify_representation(ko.rep).ok);
    // dimension = 2^{dim g_{-1}} * dim L0 with correct parity split
    CHECK(ko.rep.dim() == (1u << 4) * 5);
    CHECK_THROWS_AS(kac_module_typeI(g12, E(g12, 0) - D(g12, 0) + D(g12, 1)), std::invalid_argument);
}

TEST_CASE("irreducible quotients of Kac modules") {
    auto g12 = build_algebra(Kind::gl, 1, 2);
    Rep l0 = irreducible_quotient(kac_module_typeI(g12, g12->zero_weight()));
    CHECK(l0.sdim() == SuperDim{1, 0});
    Rep lhalf = irreducible_quotient(kac_module_typeI(g12, E(g12, 0).scaled(rat(1, 2))));
    CHECK(lhalf.sdim() == SuperDim{2, 2});  // typical: the Kac module is simple
    auto o24 = build_algebra(Kind::osp, 2, 2);
    Rep lo = irreducible_quotient(kac_module_typeI(o24, D(o24, 0) + D(o24, 1) + E(o24, 0, -1)));
    CHECK(lo.sdim() == SuperDim{6, 4});
    CHECK(verify_representation(lo).ok);
}

TEST_CASE("thin and thick Kac modules for p(3)") {
    auto nab = thin_kac_p(3, +1);
    CHECK(nab.rep.sdim() == SuperDim{4, 4});
    CHECK(verify_representation(nab.rep).ok);
    auto del = thin_kac_p(3, -1);
    CHECK(del.rep.sdim() == SuperDim{32, 32});  // exterior algebra on g_1
    CHECK(verify_representation(del.rep).ok);

    // radical (3|4) and quotient by socle (4|3)
    auto rad = radical_of_hw_module(nab);
    Rep radrep = sub_rep(nab.rep, rad);
    CHECK(radrep.sdim() == SuperDim{3, 4});
    CHECK(verify_representation(radrep).ok);

    auto g = nab.rep.g;
    std::vector<Rat> h{Rat(3), Rat(2), Rat(1)};
    Borel b = borel_from_coweight(g, h);
    std::mt19937_64 rng(5);
    auto soc = socle_basis(nab.rep, b, rng);
    CHECK(basis_sdim(nab.rep, soc) == SuperDim{0, 1});
    Rep quot = quotient_rep(nab.rep, soc);
    CHECK(quot.sdim() == SuperDim{4, 3});
    CHECK(verify_representation(quot).ok);

    // three-step socle filtration (0|1) / (3|3) / (1|0)
    auto layers = socle_filtration(nab.rep, b, rng);
    REQUIRE(layers.size() == 3);
    CHECK(layers[0] == SuperDim{0, 1});
    CHECK(layers[1] == SuperDim{3, 3});
    CHECK(layers[2] == SuperDim{1, 0});
}

TEST_CASE("truncated Verma constructions") {
    auto g11 = build_algebra(Kind::gl, 1, 1);
    auto tv = truncated_verma(g11, standard_borel(g11), E(g11, 0), 3);
    Rep l = irreducible_quotient(tv);
    CHECK(l.sdim() == SuperDim{1, 1});
    auto wd = l.weight_decomposition();
    CHECK(wd.count(E(g11, 0)));
    CHECK(wd.count(D(g11, 0)));

    auto q2 = build_algebra(Kind::q, 2);
    // (Q_{2|2})_t at t = 1: highest weight 2eps1 + eps2
    Weight lam = E(q2, 0, 2) + E(q2, 1);
    auto tvq = truncated_verma(q2, standard_borel(q2), lam, 2);
    Rep lq = irreducible_quotient(tvq);
    CHECK(lq.sdim() == SuperDim{2, 2});
    auto wq = lq.weight_decomposition();
    CHECK(wq.at(E(q2, 0, 2) + E(q2, 1)) == SuperDim{1, 1});
    CHECK(wq.at(E(q2, 0) + E(q2, 1, 2)) == SuperDim{1, 1});

    // t = -1/2: the restriction of P_{2|2} to [p(2),p(2)], up to parity shift
    Weight lamh = E(q2, 0).scaled(rat(1, 2)) - E(q2, 1).scaled(rat(1, 2));
    Rep lh = irreducible_quotient(truncated_verma(q2, standard_borel(q2), lamh, 2));
    CHECK(lh.sdim() == SuperDim{2, 2});
    CHECK(lh.weight_decomposition().count(lamh));

    // q(3) standard module appears as L(eps1)
    auto q3 = build_algebra(Kind::q, 3);
    Rep lq3 = irreducible_quotient(truncated_verma(q3, standard_borel(q3), E(q3, 0), 3));
    CHECK(lq3.sdim() == SuperDim{3, 3});
}

TEST_CASE("singular vectors") {
    auto g22 = build_algebra(Kind::gl, 2, 2);
    Rep v = standard_module(g22);
    auto sing = singular_vectors(v, standard_borel(g22));
    REQUIRE(sing.size() == 1);
    CHECK(sing[0].wt == E(g22, 0));
    CHECK(sing[0].even_vecs.size() == 1);
    CHECK(sing[0].odd_vecs.empty());
    Rep triv = trivial_module(g22);
    auto sing2 = singular_vectors(triv, standard_borel(g22));
    REQUIRE(sing2.size() == 1);
    CHECK(sing2[0].wt.is_zero());
}

TEST_CASE("submodules and quotients") {
    auto g12 = build_algebra(Kind::gl, 1, 2);
    Rep l = irreducible_quotient(kac_module_typeI(g12, E(g12, 0).scaled(rat(1, 2))));
    // the highest-weight vector generates everything
    auto sing = singular_vectors(l, standard_borel(g12));
    REQUIRE(!sing.empty());
    auto span = stable_span(l, sing[0].even_vecs);
    CHECK(span.size() == l.dim());
    // the zero vector generates the zero module
    std::vector<Scalar> zero(l.dim());
    CHECK(stable_span(l, {zero}).empty());
    // quotient REJECTs unstable subspaces
    std::vector<Scalar> e0(l.dim());
    e0[0] = Scalar(1);
    CHECK_THROWS_AS(quotient_rep(l, {e0}), std::invalid_argument);
}

TEST_CASE("complete reducibility") {
    auto g22 = build_algebra(Kind::gl, 2, 2);
    CHECK(is_completely_reducible(sym_power(dual(standard_module(g22)), 2)));
    auto p2 = build_algebra(Kind::p, 2);
    CHECK(!is_completely_reducible(sym_power(dual(parity_shift(standard_module(p2))), 2)));
    Rep u = u11_module();
    for (int d = 1; d <= 3; ++d) CHECK(!is_completely_reducible(sym_power(dual(u), d)));
}

TEST_CASE("the (1|1)-dimensional odd module") {
    Rep u = u11_module();
    CHECK(u.sdim() == SuperDim{1, 1});
    CHECK((u.op[0] * u.op[0]).is_zero());
    CHECK(verify_representation(u).ok);
}

TEST_CASE("verify catches corrupted operators") {
    auto g12 = build_algebra(Kind::gl, 1, 2);
    Rep v = standard_module(g12);
    // negate one odd root-vector operator
    for (size_t k = 0; k < g12->dim(); ++k) {
        if (g12->par[k] == Parity::odd) {
            v.op[k] = -v.op[k];
            break;
        }
    }
    CHECK(!verify_representation(v).ok);
}

TEST_CASE("the explicit 8x8 presentation of the thin Kac module") {
    // map (A, B, C) to the displayed 8x8 matrix; the printed version carries
    // one sign slip in the C block, corrected here to +c23 in row 3
    auto p3 = build_algebra(Kind::p, 3);
    auto embed = [&](const Mat& A, const Mat& B, const Mat& C) {
        Mat m(8, 8);
        Scalar tr = A(0, 0) + A(1, 1) + A(2, 2);
        m(0, 0) = tr;
        m(4, 4) = -tr;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                m(1 + i, 1 + j) = -A(j, i);
                m(5 + i, 5 + j) = A(i, j);
                m(5 + i, 1 + j) = B(i, j);
            }
        m(1, 6) = C(0, 1);
        m(1, 7) = C(0, 2);
        m(2, 5) = -C(0, 1);
        m(2, 7) = C(1, 2);
        m(3, 5) = -C(0, 2);
        m(3, 6) = -C(1, 2);
        m(4, 1) = C(1, 2);
        m(4, 2) = -C(0, 2);
        m(4, 3) = C(0, 1);
        m(5, 0) = C(1, 2);
        m(6, 0) = -C(0, 2);
        m(7, 0) = C(0, 1);
        return m;
    };
    Rep r;
    r.g = p3;
    r.vpar = {Parity::even, Parity::even, Parity::even, Parity::even,
              Parity::odd,  Parity::odd,  Parity::odd,  Parity::odd};
    Weight om = character_constants(p3)[0];
    r.vwt = {om, E(p3, 0, -1), E(p3, 1, -1), E(p3, 2, -1), -om, E(p3, 0), E(p3, 1), E(p3, 2)};
    for (size_t k = 0; k < p3->dim(); ++k) {
        const Mat& X = p3->basis[k];
        Mat A(3, 3), B(3, 3), C(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                A(i, j) = X(i, j);
                B(i, j) = X(i, 3 + j);
                C(i, j) = X(3 + i, j);
            }
        r.op.push_back(embed(A, B, C));
    }
    r.provenance = "p3-8x8-presentation";
    auto v = verify_representation(r);
    CHECK(v.ok);
    // and it is a thin Kac module: same superdimension and weight multiset
    auto nab = thin_kac_p(3, +1);
    CHECK(r.weight_decomposition() == nab.rep.weight_decomposition());
}
