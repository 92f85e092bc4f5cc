#pragma once

// Seeded generators of random exact instances: scalars, vectors, maps,
// polytope pairs. Everything is reproducible from the seed.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bcfa/analysis.hpp"
#include "bcfa/convex.hpp"
#include "bcfa/linear.hpp"
#include "bcfa/metric.hpp"

namespace bcfa {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

    /// p/q with |p| <= num, 1 <= q <= den.
    Rational rational(long num = 9, long den = 4) {
        Rational r(integer(-num, num), integer(1, den));
        r.canonicalize();
        return r;
    }
    Rational nonzero_rational(long num = 9, long den = 4) {
        for (;;) {
            Rational r = rational(num, den);
            if (sgn(r) != 0) return r;
        }
    }
    Rational positive_rational(long num = 9, long den = 4) { return abs(nonzero_rational(num, den)); }

    ComplexQ complex() { return {rational(), rational()}; }
    ComplexQ nonzero_complex() {
        for (;;) {
            ComplexQ z = complex();
            if (!z.is_zero()) return z;
        }
    }
    HyperbolicQ hyperbolic() { return {rational(), rational()}; }
    HyperbolicQ invertible_hyperbolic() { return {nonzero_rational(), nonzero_rational()}; }
    HyperbolicQ positive_hyperbolic() { return {positive_rational(), positive_rational()}; }
    /// Occasionally zero divisors or zero, to exercise the null cone.
    BicomplexQ bicomplex() {
        switch (integer(0, 9)) {
            case 0: return BicomplexQ(complex(), ComplexQ());
            case 1: return BicomplexQ(ComplexQ(), complex());
            default: return BicomplexQ(complex(), complex());
        }
    }
    BicomplexQ invertible_bicomplex() { return BicomplexQ(nonzero_complex(), nonzero_complex()); }

    RealVec real_vector(std::size_t n, long num = 9, long den = 4) {
        RealVec v(n);
        for (auto& x : v) x = rational(num, den);
        return v;
    }
    DVectorQ dvector(std::size_t n) {
        DVectorQ v(n);
        for (auto& c : v.coords) c = hyperbolic();
        return v;
    }
    BCVectorQ bcvector(std::size_t n) {
        BCVectorQ v(n);
        for (auto& c : v.coords) c = bicomplex();
        return v;
    }
    DFunctionalQ dfunctional(std::size_t n) { return DFunctionalQ(dvector(n)); }
    /// Both components nonzero.
    DFunctionalQ nondegenerate_dfunctional(std::size_t n) {
        for (;;) {
            auto f = dfunctional(n);
            bool ok = true;
            for (int l = 1; l <= 2; ++l) {
                const auto c = f.coeffs.component(l);
                ok = ok && std::any_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) != 0; });
            }
            if (ok) return f;
        }
    }
    BCFunctionalQ bcfunctional(std::size_t n) { return BCFunctionalQ(bcvector(n)); }

    Matrix<ComplexQ> complex_matrix(std::size_t rows, std::size_t cols) {
        Matrix<ComplexQ> m(rows, std::vector<ComplexQ>(cols));
        for (auto& r : m)
            for (auto& z : r) z = complex();
        return m;
    }
    /// Square and invertible (exact rank test, resampled until full rank).
    Matrix<ComplexQ> invertible_complex_matrix(std::size_t n) {
        for (;;) {
            auto m = complex_matrix(n, n);
            if (rank(m) == n) return m;
        }
    }
    BCMapQ map(std::size_t rows, std::size_t cols) {
        return BCMapQ::from_components(complex_matrix(rows, cols), complex_matrix(rows, cols));
    }
    BCMapQ invertible_map(std::size_t n) {
        return BCMapQ::from_components(invertible_complex_matrix(n), invertible_complex_matrix(n));
    }

    /// Full-dimensional vertex cloud around `center` with half-width <= radius.
    std::vector<RealVec> vertex_cloud(const RealVec& center, const Rational& radius, std::size_t count) {
        const std::size_t n = center.size();
        for (;;) {
            std::vector<RealVec> pts;
            for (std::size_t i = 0; i < count; ++i) {
                RealVec p(n);
                for (std::size_t k = 0; k < n; ++k) p[k] = center[k] + radius * Rational(integer(-8, 8), 8);
                pts.push_back(std::move(p));
            }
            if (is_full_dimensional(pts, n)) return extreme_points(pts);
        }
    }
    /// A random full-dimensional V-rep polytope containing 0 in its interior.
    RealPolytope absorbing_polytope(std::size_t n) {
        for (;;) {
            auto p = RealPolytope::from_vertices(extreme_points(absorbing_candidates(n)));
            if (zero_in_interior(p)) return p;
        }
    }
    DConvexSet absorbing_set(std::size_t n, bool open = false) {
        return {absorbing_polytope(n), absorbing_polytope(n), open};
    }

    /// Axis points on both sides of 0 with small off-axis jitter, plus extras.
    std::vector<RealVec> absorbing_candidates(std::size_t n) {
        std::vector<RealVec> pts;
        for (std::size_t k = 0; k < n; ++k) {
            for (int s : {1, -1}) {
                RealVec p(n);
                p[k] = s * positive_rational(6, 2);
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k) p[j] = rational(2, 4);
                pts.push_back(std::move(p));
            }
        }
        for (int extra = static_cast<int>(integer(0, 3)); extra > 0; --extra) pts.push_back(real_vector(n, 4, 2));
        return pts;
    }

    /// A pair (A open, B) whose closures are disjoint in each component:
    /// both clouds sit on opposite sides of a random hyperplane.
    std::pair<DConvexSet, DConvexSet> separated_pair(std::size_t n) {
        RealPolytope pa[2], pb[2];
        for (int l = 0; l < 2; ++l) {
            RealVec dir(n);
            while (std::all_of(dir.begin(), dir.end(), [](const Rational& x) { return sgn(x) == 0; }))
                dir = real_vector(n, 3, 1);
            const RealVec base = real_vector(n, 4, 2);
            const Rational gap = positive_rational(2, 2);
            RealVec ca(n), cb(n);
            for (std::size_t k = 0; k < n; ++k) {
                ca[k] = base[k] - dir[k] * (gap + 2);
                cb[k] = base[k] + dir[k] * (gap + 2);
            }
            // Half-widths below the distance to the midplane keep the closures apart.
            Rational norm1;
            for (const auto& d : dir) norm1 += abs(d);
            Rational dist2;
            for (const auto& d : dir) dist2 += d * d;
            const Rational radius = (gap + 2) * dist2 / (norm1 * 2);
            pa[l] = RealPolytope::from_vertices(vertex_cloud(ca, radius, n + 2 + index(3)));
            pb[l] = RealPolytope::from_vertices(coin() ? std::vector<RealVec>{cb}
                                                       : vertex_cloud(cb, radius, n + 1 + index(3)));
        }
        return {DConvexSet(pa[0], pa[1], true), DConvexSet(pb[0], pb[1], false)};
    }

    /// A pair (A open, B) with a point of B inside A in at least one component.
    std::pair<DConvexSet, DConvexSet> overlapping_pair(std::size_t n) {
        auto [a, b] = separated_pair(n);
        const int l = coin() ? 1 : 2;
        const RealVec inside = centroid(a.component(l).vertices());
        auto bv = b.component(l).vertices();
        bv.push_back(inside);
        RealPolytope nb = RealPolytope::from_vertices(bv);
        return {a, l == 1 ? DConvexSet(nb, b.p2, false) : DConvexSet(b.p1, nb, false)};
    }

    /// A finite cover of `box` by closed rectangles (a jittered grid).
    std::vector<RectSet> rectangle_cover(const RectSet& box, std::size_t cells1, std::size_t cells2) {
        std::vector<Rational> cut1 = cuts(box.lo1, box.hi1, cells1), cut2 = cuts(box.lo2, box.hi2, cells2);
        std::vector<RectSet> cover;
        for (std::size_t i = 0; i < cells1; ++i)
            for (std::size_t j = 0; j < cells2; ++j) cover.emplace_back(cut1[i], cut1[i + 1], cut2[j], cut2[j + 1]);
        std::shuffle(cover.begin(), cover.end(), rng_);
        return cover;
    }

    /// A spanning set of the graph {(u, T u)}: the columns of an invertible
    /// map as domain vectors, plus a few random extras.
    std::vector<BCVectorQ> graph_basis(const BCMapQ& t) {
        const std::size_t n = t.cols();
        const auto u = invertible_map(n);
        std::vector<BCVectorQ> domain;
        for (std::size_t c = 0; c < n; ++c) {
            BCVectorQ x(n);
            for (std::size_t r = 0; r < n; ++r) x.coords[r] = u.entries[r][c];
            domain.push_back(std::move(x));
        }
        for (int extra = static_cast<int>(integer(0, 2)); extra > 0; --extra) domain.push_back(bcvector(n));
        std::shuffle(domain.begin(), domain.end(), rng_);
        std::vector<BCVectorQ> out;
        for (const auto& x : domain) out.push_back(concat(x, t.apply(x)));
        return out;
    }

    /// A submodule of BC^n x BC^m that is not a graph: either a graph basis
    /// with a vector (0, v), v != 0 added, or one missing a domain direction.
    std::vector<BCVectorQ> non_graph_basis(std::size_t n, std::size_t m) {
        auto basis = graph_basis(map(m, n));
        if (n > 1 && coin()) {
            // Keep n - 1 vectors: the projection to BC^n cannot be onto.
            basis.resize(n - 1);
            return basis;
        }
        BCVectorQ v(m);
        while (v.is_zero()) v = bcvector(m);
        basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(index(basis.size() + 1)), concat(BCVectorQ(n), v));
        return basis;
    }

    /// L = {g = c} with c beyond the image of the closure of B in both
    /// components, so L misses B.
    DHyperplane disjoint_hyperplane(const DConvexSet& b) {
        const auto g = nondegenerate_dfunctional(b.dim());
        Rational c[2];
        for (int l = 1; l <= 2; ++l) {
            const auto r = linear_range(b.component(l), g.coeffs.component(l));
            c[l - 1] = *r.max + positive_rational(3, 2);
        }
        return {g, {c[0], c[1]}};
    }

private:
    static BCVectorQ concat(const BCVectorQ& x, const BCVectorQ& y) {
        BCVectorQ out = x;
        out.coords.insert(out.coords.end(), y.coords.begin(), y.coords.end());
        return out;
    }

    std::vector<Rational> cuts(const Rational& lo, const Rational& hi, std::size_t cells) {
        std::vector<Rational> c{lo};
        for (std::size_t i = 1; i < cells; ++i) {
            Rational t(static_cast<long>(4 * i) + integer(-1, 1), static_cast<long>(4 * cells));
            c.push_back(lo + (hi - lo) * t);
        }
        c.push_back(hi);
        return c;
    }

    std::mt19937_64 rng_;
};

}  // namespace bcfa
