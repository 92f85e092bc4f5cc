#include "doctest.h"

#include "bcfa/analysis.hpp"
#include "bcfa/random.hpp"

using namespace bcfa;

namespace {

RealVec v(std::initializer_list<long> xs) {
    RealVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

DConvexSet interval_pair(long lo1, long hi1, long lo2, long hi2, bool open) {
    return {RealPolytope::from_vertices({v({lo1}), v({hi1})}), RealPolytope::from_vertices({v({lo2}), v({hi2})}), open};
}

}  // namespace

TEST_CASE("extension: one-step interval in D^2 against the unit box") {
    auto box = RealPolytope::box(2, -1, 1);
    DConvexSet b(box, box, false);
    DVectorQ y{HyperbolicQ(1, 1), HyperbolicQ(0, 0)};
    auto f = extend_dominated({{y}, {HyperbolicQ(1, 1)}}, b, 2);
    CHECK(f.coeffs.coords[0] == HyperbolicQ(1, 1));
    // The box gauge is the max-norm; with f(e_1) = 1 the only dominated choice is 0.
    CHECK(f.coeffs.coords[1] == HyperbolicQ(0, 0));

    // Y = full space returns g.
    DVectorQ e1{HyperbolicQ(1, 1), HyperbolicQ(0, 0)}, e2{HyperbolicQ(0, 0), HyperbolicQ(1, 1)};
    auto full = extend_dominated({{e1, e2}, {HyperbolicQ(Rational(1, 2), 0), HyperbolicQ(0, Rational(-1, 3))}}, b, 2);
    CHECK(full.coeffs.coords[0] == HyperbolicQ(Rational(1, 2), 0));
    CHECK(full.coeffs.coords[1] == HyperbolicQ(0, Rational(-1, 3)));

    // Y = {0}: any dominated functional, verified by LP.
    auto zero = extend_dominated({{}, {}}, b, 2);
    for (int l = 1; l <= 2; ++l) CHECK(sgn(domination_gap(zero.coeffs.component(l), box)) <= 0);

    CHECK_THROWS_AS(extend_dominated({{y}, {HyperbolicQ(2, 1)}}, b, 2), DominationError);
    CHECK_THROWS_AS(extend_dominated({{y, y}, {HyperbolicQ(1, 1), HyperbolicQ(1, 1)}}, b, 2), DegenerateBasisError);
}

TEST_CASE("extension: the interval for a free direction is the classical one") {
    // q = l1 norm on R^2 (diamond), g(t, 0) = t. The second coefficient c is
    // admissible iff |c| <= 1; brute force over a grid of candidate c.
    auto diamond = RealPolytope::from_vertices({v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})});
    DConvexSet b(diamond, diamond, false);
    DVectorQ y{HyperbolicQ(1, 1), HyperbolicQ(0, 0)};
    auto f = extend_dominated({{y}, {HyperbolicQ(1, 1)}}, b, 2);
    CHECK(f.coeffs.coords[1] == HyperbolicQ(0, 0));  // midpoint of [-1, 1]
    for (int num = -8; num <= 8; ++num) {
        const Rational c(num, 4);
        const bool ok = sgn(domination_gap({Rational(1), c}, diamond)) <= 0;
        CHECK(ok == (abs(c) <= 1));
    }
}

TEST_CASE("separation: one-dimensional example") {
    auto a = interval_pair(-1, 1, -1, 1, true);
    DConvexSet b(RealPolytope::from_vertices({v({2})}), RealPolytope::from_vertices({v({3})}), false);
    auto cert = separate_hyperbolic(a, b);
    auto verdict = verify_certificate(cert, a, b);
    CHECK(verdict.valid);
    CHECK(verdict.strict_at_vertices);
    // f is a positive multiple of the identity with gamma / f = 2e1 + 3e2.
    const auto c = cert.f.coeffs.coords[0];
    CHECK(c.is_positive());
    CHECK(cert.gamma / c == HyperbolicQ(2, 3));
    CHECK(lp_separation_oracle(a, b).separable());

    // Mirrored instance negates f.
    auto am = interval_pair(-1, 1, -1, 1, true);
    DConvexSet bm(RealPolytope::from_vertices({v({-2})}), RealPolytope::from_vertices({v({-3})}), false);
    auto cm = separate_hyperbolic(am, bm);
    CHECK(cm.f.coeffs.coords[0] == HyperbolicQ(0, 0) - c);
}

TEST_CASE("separation: errors") {
    auto a = interval_pair(-1, 1, -1, 1, true);
    DConvexSet overlap(RealPolytope::from_vertices({v({0})}), RealPolytope::from_vertices({v({3})}), false);
    try {
        separate_hyperbolic(a, overlap);
        FAIL("expected NotDisjointError");
    } catch (const NotDisjointError& e) {
        CHECK(e.component() == 1);
        CHECK(e.witness() == v({0}));
    }
    CHECK_THROWS_AS(separate_hyperbolic(interval_pair(-1, 1, -1, 1, false), overlap), NotOpenError);
}

TEST_CASE("separation: random separated and overlapping instances") {
    Gen gen(11);
    for (int it = 0; it < 12; ++it) {
        const std::size_t n = 1 + gen.index(3);
        auto [a, b] = gen.separated_pair(n);
        auto cert = separate_hyperbolic(a, b);
        auto verdict = verify_certificate(cert, a, b);
        CHECK_MESSAGE(verdict.valid, verdict.reason);
        CHECK(verdict.strict_at_vertices);
        CHECK(lp_separation_oracle(a, b).separable());
        auto [oa, ob] = gen.overlapping_pair(n);
        CHECK_THROWS_AS(separate_hyperbolic(oa, ob), NotDisjointError);
        CHECK_FALSE(lp_separation_oracle(oa, ob).separable());
    }
}

TEST_CASE("separation: bicomplex form") {
    Gen gen(5);
    auto [a, b] = gen.separated_pair(2);
    auto s = separate_bicomplex(a, b);
    CHECK(hyperbolic_part(s.h) == s.certificate.f);
    CHECK(reconstruct(s.certificate.f, ReconstructAxis::j) == s.h);
    CHECK_FALSE(s.h.coeffs.is_zero());
}

TEST_CASE("hyperplanes") {
    DFunctionalQ g(DVectorQ{HyperbolicQ(2, 4)});
    auto h = hyperplane_normalize(g, HyperbolicQ(2, 4));
    CHECK(h.f.coeffs.coords[0] == HyperbolicQ(1, 1));
    CHECK(h.c == HyperbolicQ(1, 1));
    CHECK_THROWS_AS(hyperplane_normalize(g, HyperbolicQ(1, 0)), ZeroDivisorLevelError);
    CHECK_THROWS_AS(hyperplane_normalize(DFunctionalQ(DVectorQ{HyperbolicQ(0, 4)}), HyperbolicQ(1, 1)),
                    DegenerateFunctionalError);

    auto b = interval_pair(-1, 1, -1, 1, true);
    auto f = hyperplane_gauge_bound(b, {DFunctionalQ(DVectorQ{HyperbolicQ(1, 1)}), HyperbolicQ(2, 2)});
    CHECK(f.coeffs.coords[0] == HyperbolicQ(Rational(1, 2), Rational(1, 2)));
    CHECK_THROWS_AS(hyperplane_gauge_bound(b, {DFunctionalQ(DVectorQ{HyperbolicQ(1, 1)}), HyperbolicQ(Rational(1, 2), 2)}),
                    NotDisjointError);

    // Variety: a single point outside the closed box gives a hyperplane through it.
    auto box = interval_pair(-1, 1, -1, 1, false);
    DVectorQ x0{HyperbolicQ(3, 2), HyperbolicQ(0, 1)};
    DConvexSet box2(RealPolytope::box(2, -1, 1), RealPolytope::box(2, -1, 1), false);
    auto hv = variety_extend_hyperplane(x0, {}, box2);
    CHECK(hv.contains(x0));
    for (const auto& p : paired_vertices(box2)) CHECK(le(eval_d(hv.f, p), HyperbolicQ(1, 1)));
    DVectorQ m{HyperbolicQ(1, 0), HyperbolicQ(0, 0)};
    CHECK_THROWS_AS(variety_extend_hyperplane(DVectorQ{HyperbolicQ(3, 2), HyperbolicQ(0, 1)},
                                              {DVectorQ{HyperbolicQ(1, 1), HyperbolicQ(0, 1)}}, box2),
                    DegenerateVarietyError);
    (void)box;
    (void)m;
}

TEST_CASE("maps: examples") {
    using C = ComplexQ;
    auto diag = [](long a, long b) { return BCMapQ::from_components({{C(Rational(a))}}, {{C(Rational(b))}}); };
    auto ubp = ubp_bound({diag(2, 3), BCMapQ::identity(1)}, {6.0, 6.0});
    CHECK(ubp.m.a1() == doctest::Approx(2));
    CHECK(ubp.m.a2() == doctest::Approx(3));
    CHECK(ubp.delta.a1() == doctest::Approx(3));
    CHECK(ubp.delta.a2() == doctest::Approx(2));
    CHECK_THROWS_AS(ubp_bound({}, {1.0, 1.0}), EmptyFamilyError);

    auto om = omt_delta(diag(2, 3));
    CHECK(om.delta.a1() == doctest::Approx(2));
    CHECK(om.delta.a2() == doctest::Approx(3));
    CHECK_THROWS_AS(omt_delta(BCMapQ::zero(1, 1)), NotSurjectiveError);

    auto inv = inverse_map(diag(2, 4));
    CHECK(inv.inverse == BCMapQ::from_components({{C(Rational(1, 2))}}, {{C(Rational(1, 4))}}));
    CHECK(inv.bound.a1() == doctest::Approx(0.5));
    CHECK(inv.bound.a2() == doctest::Approx(0.25));
    try {
        inverse_map(diag(2, 0));
        FAIL("expected NotBijectiveError");
    } catch (const NotBijectiveError& e) {
        CHECK(e.component() == 2);
    }

    const BicomplexQ c(C(Rational(2), Rational(1)), C(Rational(-1), Rational(3)));
    auto t = map_from_graph({BCVectorQ{BicomplexQ::one(), c}}, 1);
    CHECK(t.entries[0][0] == c);
    CHECK_THROWS_AS(map_from_graph({BCVectorQ{BicomplexQ::zero(), BicomplexQ::one()}}, 1), NotAGraphError);
}
