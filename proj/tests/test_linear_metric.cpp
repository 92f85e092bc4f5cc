#include "doctest.h"

#include "bcfa/metric.hpp"
#include "bcfa/random.hpp"
#include "support/oracles.hpp"

using namespace bcfa;

namespace {

/// h(x) computed in the {1, i, j, k} basis.
oracle::Quad quad_value(const BCFunctionalQ& h, const BCVectorQ& x) {
    oracle::Quad acc;
    for (std::size_t m = 0; m < x.dim(); ++m) {
        const auto p = oracle::mul(oracle::from_bc(h.coeffs.coords[m]), oracle::from_bc(x.coords[m]));
        for (int t = 0; t < 4; ++t) acc.c[t] += p.c[t];
    }
    return acc;
}

/// g1 + k g4 read off the basis expansion, in idempotent coordinates.
HyperbolicQ quad_hyperbolic_part(const oracle::Quad& q) { return {q.c[0] + q.c[3], q.c[0] - q.c[3]}; }

BCFunctionalQ identity_functional() { return BCFunctionalQ(BCVectorQ{BicomplexQ::one()}); }

}  // namespace

TEST_CASE("linear: eval_d examples and D-linearity") {
    DFunctionalQ id(DVectorQ{HyperbolicQ(1, 1)});
    CHECK(eval_d(id, DVectorQ{HyperbolicQ(2, 3)}) == HyperbolicQ(2, 3));
    Gen gen(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + gen.index(4);
        auto f = gen.dfunctional(n);
        CHECK(eval_d(f, DVectorQ(n)) == HyperbolicQ());
        auto x = gen.dvector(n), y = gen.dvector(n);
        auto alpha = gen.hyperbolic();
        DVectorQ ax(n);
        for (std::size_t m = 0; m < n; ++m) ax.coords[m] = alpha * x.coords[m] + y.coords[m];
        CHECK(eval_d(f, ax) == alpha * eval_d(f, x) + eval_d(f, y));
        auto split = split_functional(f);
        CHECK(eval_split(split, x) == eval_d(f, x));
        CHECK(reassemble(split) == f);
    }
    auto zero = split_functional(DFunctionalQ(DVectorQ(2)));
    CHECK(zero.f1 == RealVec(2));
    CHECK(zero.f2 == RealVec(2));
}

TEST_CASE("linear: hyperbolic part of the identity at 1+2i+3j+4k") {
    // w1 = 1 + 2i, w2 = 3 + 4i.
    auto x = BCVectorQ{BicomplexQ::from_w(ComplexQ(1, 2), ComplexQ(3, 4))};
    const auto expected = HyperbolicQ::from_standard(1, 4);
    for (auto form : kAllFunctionalForms) CHECK(eval_hyperbolic_part(identity_functional(), x, form) == expected);
    CHECK(eval_d(hyperbolic_part(identity_functional()), x.realify()) == expected);
}

TEST_CASE("linear: the six hyperbolic-part derivations agree with the basis expansion") {
    Gen gen(12);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + gen.index(4);
        auto h = gen.bcfunctional(n);
        auto x = gen.bcvector(n);
        const auto expected = quad_hyperbolic_part(quad_value(h, x));
        const auto closed = hyperbolic_part(h);
        CHECK(eval_d(closed, x.realify()) == expected);
        for (auto form : kAllFunctionalForms) {
            CAPTURE(to_string(form));
            CHECK(eval_hyperbolic_part(h, x, form) == expected);
            CHECK(hyperbolic_part_via(h, form) == closed);
        }
    }
}

TEST_CASE("linear: reconstruction from the hyperbolic part") {
    Gen gen(13);
    CHECK(reconstruct(DFunctionalQ(DVectorQ(4)), ReconstructAxis::i) == BCFunctionalQ(BCVectorQ(2)));
    const BicomplexQ units[] = {BicomplexQ::unit_i(), BicomplexQ::unit_j(), BicomplexQ::unit_k()};
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + gen.index(3);
        auto h = gen.bcfunctional(n);
        const auto hd = hyperbolic_part(h);
        CHECK(reconstruct(hd, ReconstructAxis::i) == h);
        CHECK(reconstruct(hd, ReconstructAxis::j) == h);

        auto f = gen.dfunctional(2 * n);
        const auto hi = reconstruct(f, ReconstructAxis::i);
        CHECK(hi == reconstruct(f, ReconstructAxis::j));
        CHECK(hyperbolic_part(hi) == f);
        auto x = gen.bcvector(n);
        CHECK(eval_reconstructed(f, ReconstructAxis::i, x) == eval_bc(hi, x));
        CHECK(eval_reconstructed(f, ReconstructAxis::j, x) == eval_bc(hi, x));
        for (const auto& u : units) CHECK(eval_bc(hi, u * x) == u * eval_bc(hi, x));
        auto lambda = gen.bicomplex();
        CHECK(eval_bc(hi, lambda * x) == lambda * eval_bc(hi, x));
    }
}

TEST_CASE("linear: operator D-norm") {
    auto id = BCMapQ::identity(2);
    auto n = operator_dnorm(id);
    CHECK(n.a1() == doctest::Approx(1.0));
    CHECK(n.a2() == doctest::Approx(1.0));
    auto diag = BCMapQ::from_components({{ComplexQ(2)}}, {{ComplexQ(3)}});
    n = operator_dnorm(diag);
    CHECK(n.a1() == doctest::Approx(2.0));
    CHECK(n.a2() == doctest::Approx(3.0));
    n = operator_dnorm(BCMapQ::zero(2, 3));
    CHECK(n.a1() == 0.0);
    CHECK(n.a2() == 0.0);

    // ||T x|| <= ||T|| ||x|| on random samples, per component.
    Gen gen(14);
    for (int t = 0; t < 50; ++t) {
        auto map = gen.map(1 + gen.index(3), 1 + gen.index(3));
        const auto bound = operator_dnorm(map);
        for (int s = 0; s < 20; ++s) {
            const auto x = gen.bcvector(map.cols());
            const auto y = map.apply(x);
            const auto nx = to_double(dnorm(x).squared()), ny = to_double(dnorm(y).squared());
            CHECK(std::sqrt(ny.a1()) <= bound.a1() * std::sqrt(nx.a1()) + 1e-9);
            CHECK(std::sqrt(ny.a2()) <= bound.a2() * std::sqrt(nx.a2()) + 1e-9);
        }
    }
}

TEST_CASE("linear: composition and application agree") {
    Gen gen(15);
    for (int t = 0; t < 50; ++t) {
        auto a = gen.map(2, 3), b = gen.map(3, 2);
        auto x = gen.bcvector(2);
        CHECK((b * a).apply(gen.bcvector(3)).dim() == 3);
        CHECK((a * b).apply(x) == a.apply(b.apply(x)));
    }
}

TEST_CASE("metric: examples") {
    DVectorQ zero{HyperbolicQ(0, 0)}, p{HyperbolicQ(3, -4)};
    CHECK(dmetric(p, p).squared() == HyperbolicQ());
    CHECK(dmetric(zero, p) == DNorm<Rational>::from_value(HyperbolicQ(3, 4)));

    DBall<Rational> ball(DVectorQ{HyperbolicQ(0, 0)}, HyperbolicQ(1, 2));
    CHECK(ball_contains(ball, DVectorQ{HyperbolicQ(Rational(1, 2), Rational(3, 2))}));
    CHECK_FALSE(ball_contains(ball, DVectorQ{HyperbolicQ(1, 0)}));
    CHECK_FALSE(ball_contains(ball, DVectorQ{HyperbolicQ(0, -2)}));
    CHECK_THROWS_AS(DBall<Rational>(zero, HyperbolicQ(1, 0)), NonPositiveBoundError);
}

TEST_CASE("metric: axioms and norm identities on random vectors") {
    Gen gen(16);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + gen.index(3);
        auto x = gen.bcvector(n), y = gen.bcvector(n), z = gen.bcvector(n);
        CHECK(le_sum(dmetric(x, z), dmetric(x, y), dmetric(y, z)));
        CHECK(dmetric(x, y) == dmetric(y, x));
        CHECK(dmetric(x + z, y + z) == dmetric(x, y));
        CHECK(dnorm(x) == dmetric(x, BCVectorQ(n)));
        CHECK((dnorm(x).squared() == HyperbolicQ()) == x.is_zero());
        CHECK(le_sum(dnorm(x + y), dnorm(x), dnorm(y)));
        CHECK(dnorm(BicomplexQ(-1) * x) == dnorm(x));

        auto lambda = gen.bicomplex(), lambda0 = gen.bicomplex();
        auto lhs = dnorm(lambda * x - lambda0 * y);
        auto r1 = dnorm_k(lambda) * dnorm(x - y);
        auto r2 = dnorm_k(lambda - lambda0) * dnorm(y);
        CHECK(le_sum(lhs, r1, r2));
    }
}

TEST_CASE("metric: Baire witness on quadrant and single-rectangle covers") {
    const RectSet box(-1, 1, -1, 1);
    std::vector<RectSet> quadrants{{-1, 0, -1, 0}, {0, 1, -1, 0}, {-1, 0, 0, 1}, {0, 1, 0, 1}};
    auto w = baire_witness(quadrants, box);
    REQUIRE(w.index < quadrants.size());
    CHECK(w.radius.is_positive());
    CHECK(quadrants[w.index].contains_ball(w.center, w.radius));

    std::vector<RectSet> single{box};
    w = baire_witness(single, box);
    CHECK(w.index == 0);
    CHECK(w.radius.is_positive());
    CHECK(box.contains_ball(w.center, w.radius));

    std::vector<RectSet> gap{{-1, 0, -1, 1}, {Rational(1, 10), 1, -1, 1}};
    CHECK_THROWS_AS(baire_witness(gap, box), NotACoverError);
    auto hole = find_uncovered(gap, box);
    REQUIRE(hole);
    CHECK(box.contains(*hole));
    for (const auto& r : gap) CHECK_FALSE(r.contains(*hole));
    CHECK_FALSE(find_uncovered(quadrants, box));
}

TEST_CASE("metric: Baire witness on random covers and nested schedule") {
    Gen gen(17);
    const RectSet box(-2, 3, -1, 4);
    for (int t = 0; t < 50; ++t) {
        auto cover = gen.rectangle_cover(box, 1 + gen.index(4), 1 + gen.index(4));
        auto w = baire_witness(cover, box);
        REQUIRE(w.index < cover.size());
        CHECK(w.radius.is_positive());
        CHECK(cover[w.index].contains_ball(w.center, w.radius));
        for (std::size_t m = 0; m < w.steps.size(); ++m) {
            const auto& s = w.steps[m];
            CHECK(s.radius.is_positive());
            const Rational bound(1, 2L << m);
            CHECK(s.radius.a1() < bound);
            CHECK(s.radius.a2() < bound);
            CHECK_FALSE(cover[s.set_index].contains(s.point));
        }
        cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(gen.index(cover.size())));
        if (cover.empty()) continue;
        CHECK_THROWS_AS(baire_witness(cover, box), NotACoverError);
    }
}
