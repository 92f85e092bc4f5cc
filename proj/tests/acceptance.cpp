// Acceptance run: each criterion is checked at its stated size and
// tolerance against reference computations written here, and reported on
// one PASS/FAIL line. Exit status is 0 iff every criterion passes.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bcfa/random.hpp"
#include "support/oracles.hpp"

using namespace bcfa;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

// -- reference computations ------------------------------------------------------

oracle::Quad conj_quad(const oracle::Quad& q, int kind) {
    // dagger1: (a, -b, c, -d), dagger2: (a, b, -c, -d), dagger3: (a, -b, -c, d).
    static const int sign[3][4] = {{1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    oracle::Quad out;
    for (int t = 0; t < 4; ++t) out.c[t] = sign[kind - 1][t] * q.c[t];
    return out;
}

oracle::Quad quad(long a, long b, long c, long d) { return {{Rational(a), Rational(b), Rational(c), Rational(d)}}; }

Eigen::MatrixXcd to_eigen(const Matrix<ComplexQ>& m) {
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.empty() ? 0 : m.front().size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {m[i][j].re.get_d(), m[i][j].im.get_d()};
    return e;
}

/// Singular values from the eigenvalues of T^H T (ascending).
Eigen::VectorXd sigma_direct(const Eigen::MatrixXcd& t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t.adjoint() * t);
    return es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
}

Eigen::VectorXcd random_vector(Eigen::Index n, double radius, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd v(n);
    do {
        for (Eigen::Index k = 0; k < n; ++k) v(k) = {normal(rng), normal(rng)};
    } while (v.norm() == 0.0);
    return v * (radius / v.norm());
}

/// q_P(x) = max(0, max_i a_i.x / b_i) over the faces of P.
Rational face_gauge(const RealPolytope& p, const RealVec& x) {
    Rational q;
    for (const auto& h : p.halfspaces()) {
        Rational s;
        for (std::size_t k = 0; k < x.size(); ++k) s += h.a[k] * x[k];
        if (s / h.b > q) q = s / h.b;
    }
    return q;
}

Rational dot(const RealVec& a, const RealVec& b) {
    Rational s;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

BCMapQ scaled(const BCMapQ& t, const Rational& s) {
    auto e = t.entries;
    for (auto& row : e)
        for (auto& z : row) z = BicomplexQ(ComplexQ(s)) * z;
    return BCMapQ(e);
}

// -- criteria ------------------------------------------------------------------------

Outcome algebra() {
    Outcome out;
    Gen gen(101);
    const std::size_t cases = 10000;
    for (std::size_t t = 0; t < cases && out.pass; ++t) {
        const auto z = gen.bicomplex(), w = gen.bicomplex(), v = gen.bicomplex();
        const auto qz = oracle::from_bc(z), qw = oracle::from_bc(w);
        out.require(oracle::from_bc(z * w) == oracle::mul(qz, qw), "product differs from the basis table");
        out.require((z * w) * v == z * (w * v), "associativity");
        out.require(z * w == w * z, "commutativity");
        out.require(z * (w + v) == z * w + z * v, "distributivity");
        out.require(BicomplexQ::one() * z == z && z + (-z) == BicomplexQ::zero(), "identities");

        const auto d1 = conjugate(z, Conjugation::dagger1), d2 = conjugate(z, Conjugation::dagger2),
                   d3 = conjugate(z, Conjugation::dagger3);
        out.require(oracle::from_bc(d1) == conj_quad(qz, 1) && oracle::from_bc(d2) == conj_quad(qz, 2) &&
                        oracle::from_bc(d3) == conj_quad(qz, 3),
                    "conjugation differs from the basis sign table");
        out.require(conjugate(d2, Conjugation::dagger1) == d3 && conjugate(d1, Conjugation::dagger2) == d3,
                    "dagger1 o dagger2 != dagger3");
        out.require(conjugate(d1, Conjugation::dagger1) == z && conjugate(d2, Conjugation::dagger2) == z &&
                        conjugate(d3, Conjugation::dagger3) == z,
                    "conjugation is not an involution");
        const auto zz3 = oracle::mul(qz, conj_quad(qz, 3));
        out.require(oracle::from_bc(z * d3) == zz3 && oracle::from_bc(modulus(z, ModulusKind::k)) == zz3,
                    "Z Z^dagger3 differs from the basis product");
        const auto mod = BicomplexQ(HyperbolicQ(oracle::abs2(z.z1()), oracle::abs2(z.z2())));
        out.require(z * d3 == mod, "Z Z^dagger3 != |Z|_k^2");
        out.require(dnorm_k(z * w).squared() == dnorm_k(z).squared() * dnorm_k(w).squared(), "|ZW|_k != |Z|_k |W|_k");

        const auto u = gen.invertible_bicomplex();
        const auto inv = bc_inverse(u);
        out.require(u * inv == BicomplexQ::one() && oracle::mul(oracle::from_bc(u), oracle::from_bc(inv)) == quad(1, 0, 0, 0),
                    "Z Z^-1 != 1");
    }
    out.require(oracle::from_bc(BicomplexQ::unit_k()) == quad(0, 0, 0, 1), "k is not the basis element k");
    out.require(oracle::from_bc(BicomplexQ::e1() - BicomplexQ::e2()) == quad(0, 0, 0, 1), "k != e1 - e2");
    out.require(oracle::from_bc(BicomplexQ::e1()) == oracle::Quad{{Rational(1, 2), 0, 0, Rational(1, 2)}}, "e1 != (1+k)/2");
    if (out.pass) out.detail = "10^4 cases per law, exact";
    return out;
}

Outcome correspondence() {
    Outcome out;
    Gen gen(102);
    for (std::size_t t = 0; t < 1000 && out.pass; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto h = gen.bcfunctional(n);
        const auto x = gen.bcvector(n);
        oracle::Quad value;
        for (std::size_t m = 0; m < n; ++m) {
            const auto p = oracle::mul(oracle::from_bc(h.coeffs.coords[m]), oracle::from_bc(x.coords[m]));
            for (int k = 0; k < 4; ++k) value.c[k] += p.c[k];
        }
        const HyperbolicQ expected(value.c[0] + value.c[3], value.c[0] - value.c[3]);
        const auto hd = hyperbolic_part(h);
        out.require(eval_d(hd, x.realify()) == expected, "h_D differs from g1 + k g4");
        for (auto form : kAllFunctionalForms) {
            out.require(eval_hyperbolic_part(h, x, form) == expected, std::string("form ") + to_string(form) + " disagrees");
            out.require(hyperbolic_part_via(h, form) == hd, std::string("coefficients of ") + to_string(form) + " disagree");
        }
        out.require(reconstruct(hd, ReconstructAxis::i) == h, "h_D(x) - i h_D(ix) != h");
        out.require(reconstruct(hd, ReconstructAxis::j) == h, "h_D(x) - j h_D(jx) != h");
        const auto f = gen.dfunctional(2 * n);
        const auto hf = reconstruct(f, ReconstructAxis::i);
        out.require(hf == reconstruct(f, ReconstructAxis::j), "i- and j-reconstructions differ");
        out.require(hyperbolic_part(hf) == f, "hyperbolic part of the reconstruction != f");
    }
    if (out.pass) out.detail = "10^3 functionals, dims 1-4, six forms, both axes, exact";
    return out;
}

Outcome separation() {
    Outcome out;
    Gen gen(103);
    std::size_t agree = 0;
    for (std::size_t t = 0; t < 200 && out.pass; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto [a, b] = gen.separated_pair(n);
        try {
            const auto cert = separate_hyperbolic(a, b);
            for (int l = 1; l <= 2; ++l) {
                const RealVec fl = cert.f.coeffs.component(l);
                const Rational& gl = cert.gamma.component(l);
                for (const auto& v : a.component(l).vertices())
                    out.require(dot(fl, v) < gl, "f(a) <' gamma fails at a vertex of A");
                for (const auto& v : b.component(l).vertices())
                    out.require(dot(fl, v) >= gl, "gamma <=' f(b) fails at a vertex of B");
            }
            const bool oracle_ok = lp_separation_oracle(a, b).separable();
            out.require(oracle_ok, "LP oracle disagrees on a separable instance");
            agree += oracle_ok;
        } catch (const Error& e) {
            out.fail(std::string("separation raised ") + e.kind());
        }
        const auto [oa, ob] = gen.overlapping_pair(n);
        bool rejected = false;
        try {
            (void)separate_hyperbolic(oa, ob);
        } catch (const NotDisjointError&) {
            rejected = true;
        }
        const bool oracle_no = !lp_separation_oracle(oa, ob).separable();
        out.require(rejected && oracle_no, "overlapping instance not rejected by both");
        agree += rejected && oracle_no;
    }
    if (out.pass) out.detail = "200 separable + 200 overlapping instances, dims 1-3; oracle agreed in " + std::to_string(agree) + "/400";
    return out;
}

Outcome gauge() {
    Outcome out;
    Gen gen(104);
    double worst = 0.0;
    for (std::size_t t = 0; t < 500 && out.pass; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto b = gen.absorbing_set(n);
        const auto x = DVectorQ::from_components(gen.real_vector(n, 6, 2), gen.real_vector(n, 6, 2));
        const auto y = DVectorQ::from_components(gen.real_vector(n, 6, 2), gen.real_vector(n, 6, 2));
        for (int l = 1; l <= 2; ++l) {
            const auto p = with_both_representations(b.component(l));
            const RealVec xl = x.component(l);
            std::vector<double> xd;
            for (const auto& v : xl) xd.push_back(v.get_d());
            const double closed = gauge_from_faces(p.halfspaces(), xd);

            // Bisection on exact membership x in alpha P (vertex hull test).
            auto inside = [&](const Rational& alpha) {
                RealVec s(n);
                for (std::size_t k = 0; k < n; ++k) s[k] = xl[k] / alpha;
                return in_hull(p.vertices(), s);
            };
            Rational lo(0), hi(1);
            while (!inside(hi)) hi *= 2;
            for (int it = 0; it < 48; ++it) {
                const Rational mid = (lo + hi) / 2;
                (inside(mid) ? hi : lo) = mid;
            }
            const double bisect = Rational((lo + hi) / 2).get_d();
            worst = std::max(worst, std::fabs(closed - bisect));
            out.require(std::fabs(closed - bisect) <= 1e-9, "closed-form gauge differs from bisection");

            const auto exact_faces = gauge_from_faces(p.halfspaces(), xl);
            const auto exact_vertices = gauge_from_vertices(p.vertices(), xl);
            out.require(exact_vertices && *exact_vertices == exact_faces, "H-rep gauge differs from the V-rep LP gauge");
        }
        const auto qx = minkowski_gauge(b, x).value(), qy = minkowski_gauge(b, y).value();
        out.require(le(minkowski_gauge(b, x + y).value(), HyperbolicQ(qx + qy)), "q(x+y) <=' q(x) + q(y) fails");
        const auto lam = gen.positive_hyperbolic();
        DVectorQ lx(n);
        for (std::size_t k = 0; k < n; ++k) lx.coords[k] = lam * x.coords[k];
        out.require(minkowski_gauge(b, lx).value() == lam * qx, "q(lambda x) != lambda q(x)");
    }
    if (out.pass) {
        std::ostringstream d;
        d << "500 pairs, dims 1-3; max |closed - bisection| = " << worst;
        out.detail = d.str();
    }
    return out;
}

Outcome baire() {
    Outcome out;
    Gen gen(105);
    for (std::size_t t = 0; t < 50 && out.pass; ++t) {
        const Rational lo1 = gen.rational(), lo2 = gen.rational();
        const RectSet box(lo1, lo1 + gen.positive_rational(), lo2, lo2 + gen.positive_rational());
        const auto cover = gen.rectangle_cover(box, 1 + gen.index(5), 1 + gen.index(5));
        try {
            const auto w = baire_witness(cover, box);
            out.require(w.index < cover.size(), "index out of range");
            const auto& f = cover[w.index];
            const auto& c = w.center;
            const auto& r = w.radius;
            out.require(sgn(r.a1()) > 0 && sgn(r.a2()) > 0, "ball radius is not >' 0");
            out.require(f.lo1 <= c.a1() - r.a1() && c.a1() + r.a1() <= f.hi1 && f.lo2 <= c.a2() - r.a2() &&
                            c.a2() + r.a2() <= f.hi2,
                        "ball not contained in the rectangle");
        } catch (const Error& e) {
            out.fail(std::string("cover raised ") + e.kind());
        }

        auto punctured = gen.rectangle_cover(box, 1 + gen.index(5), 1 + gen.index(5));
        punctured.erase(punctured.begin() + static_cast<std::ptrdiff_t>(gen.index(punctured.size())));
        try {
            (void)baire_witness(punctured, box);
            out.fail("punctured cover accepted");
        } catch (const NotACoverError& e) {
            const HyperbolicQ p(e.witness_e1(), e.witness_e2());
            bool covered = false;
            for (const auto& r : punctured) covered = covered || r.contains(p);
            out.require(box.contains(p) && !covered, "NotACover witness is covered or outside the box");
        }
    }
    if (out.pass) out.detail = "50 covers, 50 punctured covers, exact containment";
    return out;
}

Outcome open_inverse_mapping() {
    Outcome out;
    Gen gen(106);
    std::mt19937_64 rng(1006);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (std::size_t t = 0; t < 100 && out.pass; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto tmap = gen.invertible_map(n);
        try {
            const auto delta = omt_delta(tmap).delta;
            const auto inv = inverse_map(tmap);
            out.require(tmap * inv.inverse == BCMapQ::identity(n) && inv.inverse * tmap == BCMapQ::identity(n), "T T^-1 != I");
            for (int l = 1; l <= 2; ++l) {
                const auto e = to_eigen(tmap.component(l));
                const auto sigma = sigma_direct(e);
                const double smin = sigma(0);
                const double dl = delta.component(l);
                const double tight = std::max(std::fabs(dl - smin), std::fabs(inv.bound.component(l) - 1.0 / smin));
                worst = std::max(worst, tight);
                out.require(tight <= 1e-6, "continuity bound not tight against direct sigma");
                const auto lu = e.partialPivLu();
                for (int s = 0; s < 1000; ++s) {
                    const double scale = s % 2 ? unit(rng) : 1.0 - 1e-6 * unit(rng) - 1e-9;
                    const auto y = random_vector(static_cast<Eigen::Index>(n), dl * scale, rng);
                    out.require(lu.solve(y).norm() < 1.0, "target in B(0, delta) has no preimage in B(0, 1)");
                }
                // Just beyond delta along the weakest direction the preimage leaves the unit ball.
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e * e.adjoint());
                const Eigen::VectorXcd y = es.eigenvectors().col(0) * (dl * (1 + 1e-6));
                out.require(lu.solve(y).norm() > 1.0, "delta is not sharp");
            }
        } catch (const Error& e) {
            out.fail(std::string("raised ") + e.kind());
        }
    }
    if (out.pass) {
        std::ostringstream d;
        d << "100 maps, 10^3 targets per component; max bound error = " << worst;
        out.detail = d.str();
    }
    return out;
}

Outcome closed_graph() {
    Outcome out;
    Gen gen(107);
    for (std::size_t t = 0; t < 100 && out.pass; ++t) {
        const std::size_t n = 1 + gen.index(3), m = 1 + gen.index(3);
        const auto tmap = gen.map(m, n);
        const auto basis = gen.graph_basis(tmap);
        try {
            out.require(map_from_graph(basis, n) == tmap, "reconstructed map differs");
        } catch (const Error& e) {
            out.fail(std::string("graph rejected: ") + e.kind());
        }
        const auto bad = gen.non_graph_basis(n, m);
        try {
            (void)map_from_graph(bad, n);
            out.fail("non-graph submodule accepted");
        } catch (const NotAGraphError&) {
        }
    }
    if (out.pass) out.detail = "100 graphs reconstructed exactly, 100 non-graphs rejected";
    return out;
}

Outcome uniform_boundedness() {
    Outcome out;
    Gen gen(108);
    std::mt19937_64 rng(1008);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t t = 0; t < 100 && out.pass; ++t) {
        const std::size_t n = 1 + gen.index(3), m = 1 + gen.index(3);
        MapFamily family;
        for (int k = static_cast<int>(gen.integer(1, 5)); k > 0; --k) family.push_back(gen.map(m, n));
        const HyperbolicD eps = to_double(gen.positive_hyperbolic());
        const auto bound = ubp_bound(family, eps);
        for (int l = 1; l <= 2; ++l) {
            std::vector<Eigen::MatrixXcd> mats;
            double mdirect = 0.0;
            std::size_t arg = 0;
            for (std::size_t f = 0; f < family.size(); ++f) {
                mats.push_back(to_eigen(family[f].component(l)));
                const double s = sigma_direct(mats.back()).maxCoeff();
                if (s > mdirect) mdirect = s, arg = f;
            }
            out.require(std::fabs(bound.m.component(l) - mdirect) <= 1e-9 * std::max(1.0, mdirect), "M differs from direct sigma");
            const double dl = bound.delta.component(l), el = eps.component(l);
            for (int s = 0; s < 1000; ++s) {
                const double scale = s % 2 ? unit(rng) : 1.0 - 1e-6 * unit(rng) - 1e-9;
                const auto x = random_vector(static_cast<Eigen::Index>(n), dl * scale, rng);
                for (const auto& a : mats) out.require((a * x).norm() < el, "||x|| <' delta but ||T x|| not <' eps");
            }
            if (mdirect > 1e-12) {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mats[arg].adjoint() * mats[arg]);
                const Eigen::VectorXcd x = es.eigenvectors().col(static_cast<Eigen::Index>(n) - 1) * (dl * (1 + 1e-6));
                out.require((mats[arg] * x).norm() > el, "delta is not sharp");
            }
        }
    }
    // Negative control: the family {2^s T0 : s <= S} needs M = 2^S ||T0||.
    const auto t0 = gen.map(2, 2);
    const auto base = ubp_bound({t0}, {1.0, 1.0});
    MapFamily grow;
    for (int s = 0; s <= 20 && out.pass; ++s) {
        grow.push_back(scaled(t0, Rational(1L << s)));
        const auto b = ubp_bound(grow, {1.0, 1.0});
        for (int l = 1; l <= 2; ++l) {
            const double expect = std::ldexp(base.m.component(l), s);
            out.require(std::fabs(b.m.component(l) - expect) <= 1e-9 * expect, "M does not grow like 2^s");
        }
    }
    if (out.pass) out.detail = "100 families x 10^3 samples; norm-2^s control grows M to 2^20 ||T0||";
    return out;
}

Outcome hyperplanes() {
    Outcome out;
    Gen gen(109);
    std::size_t grid_points = 0;
    for (std::size_t t = 0; t < 200 && out.pass; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto g = gen.nondegenerate_dfunctional(n);
        const auto c = gen.invertible_hyperbolic(), gamma = gen.invertible_hyperbolic();
        const auto h1 = hyperplane_normalize(g, c);
        const auto h2 = hyperplane_normalize(DFunctionalQ(gamma * g.coeffs), gamma * c);
        out.require(h1.f == h2.f && h1.c == h2.c, "rescaled hyperplane normalizes differently");
        for (int s = 0; s < 20; ++s) {
            RealVec x[2];
            for (int l = 1; l <= 2; ++l) {
                const RealVec gl = g.coeffs.component(l);
                x[l - 1] = gen.real_vector(n);
                if (s % 2 == 0) {
                    // Solve for one coordinate to land on {g = c}.
                    std::size_t m = 0;
                    while (sgn(gl[m]) == 0) ++m;
                    x[l - 1][m] = 0;
                    x[l - 1][m] = (c.component(l) - dot(gl, x[l - 1])) / gl[m];
                }
            }
            const auto p = DVectorQ::from_components(x[0], x[1]);
            const bool on = eval_d(g, p) == c;
            out.require(h1.contains(p) == on && h2.contains(p) == on && (s % 2 != 0 || on), "membership changed by rescaling");
        }
        for (const auto& bad : {HyperbolicQ(c.a1(), 0), HyperbolicQ(0, c.a2()), HyperbolicQ(0, 0)}) {
            try {
                (void)hyperplane_normalize(g, bad);
                out.fail("zero-divisor level accepted");
            } catch (const ZeroDivisorLevelError&) {
            }
        }

        const auto b = gen.absorbing_set(n, gen.coin());
        const auto plane = gen.disjoint_hyperplane(b);
        try {
            const auto f = hyperplane_gauge_bound(b, plane);
            const RealPolytope p[2] = {with_both_representations(b.p1), with_both_representations(b.p2)};
            auto sandwich = [&](int l, const RealVec& x) {
                RealVec neg(x.size());
                for (std::size_t k = 0; k < x.size(); ++k) neg[k] = -x[k];
                const Rational fx = dot(f.coeffs.component(l), x);
                return -face_gauge(p[l - 1], neg) <= fx && fx <= face_gauge(p[l - 1], x);
            };
            for (int l = 1; l <= 2; ++l)
                for (const auto& v : p[l - 1].vertices()) out.require(sandwich(l, v), "gauge sandwich fails at a vertex");
            const auto grid = sample_grid(b, 1000);
            grid_points += grid.size();
            for (const auto& x : grid)
                out.require(sandwich(1, x.component(1)) && sandwich(2, x.component(2)), "gauge sandwich fails on the grid");
        } catch (const Error& e) {
            out.fail(std::string("gauge bound raised ") + e.kind());
        }
    }
    if (out.pass)
        out.detail = "200 instances; sandwich at all vertices and " + std::to_string(grid_points / 200) + " grid points on average";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"algebra laws", algebra},
        {"hyperbolic part and reconstruction", correspondence},
        {"separation certificates", separation},
        {"Minkowski gauge", gauge},
        {"Baire nested balls", baire},
        {"open and inverse mapping", open_inverse_mapping},
        {"closed graph", closed_graph},
        {"uniform boundedness", uniform_boundedness},
        {"D-hyperplanes", hyperplanes},
    };
    const auto start = std::chrono::steady_clock::now();
    bool all = true;
    int index = 1;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("uncaught: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index++ << " (" << name << "): " << o.detail << " ["
                  << std::fixed << std::setprecision(2) << secs << "s]" << std::defaultfloat << "\n";
        all = all && o.pass;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "total " << std::fixed << std::setprecision(2) << total << "s" << (total < 60 ? "" : " (over 60s budget)") << "\n";
    return all ? 0 : 1;
}
