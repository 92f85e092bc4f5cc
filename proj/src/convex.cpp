#include "bcfa/convex.hpp"

#include <algorithm>

namespace bcfa {

namespace {

RealVec part(const DVectorQ& x, int l) { return x.component(l); }

const std::vector<RealVec>& vertices_of(const RealPolytope& p, std::optional<RealPolytope>& storage) {
    if (p.has_vertices()) return p.vertices();
    storage = with_both_representations(p);
    return storage->vertices();
}

/// Convex hull of 2D points, counter-clockwise (Andrew's monotone chain).
std::vector<ComplexQ> planar_hull(std::vector<ComplexQ> pts) {
    std::sort(pts.begin(), pts.end(), [](const ComplexQ& a, const ComplexQ& b) {
        return a.re < b.re || (a.re == b.re && a.im < b.im);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const ComplexQ& o, const ComplexQ& a, const ComplexQ& b) {
        return Rational((a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re));
    };
    std::vector<ComplexQ> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], p)) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

DConvexSet::DConvexSet(RealPolytope a, RealPolytope b, bool is_open)
    : p1(a.with_open(is_open)), p2(b.with_open(is_open)), open(is_open) {
    if (p1.dim() != p2.dim()) throw DimensionMismatch("components of different dimension");
}

HyperbolicQ GaugeValue::value() const {
    if (!finite()) throw NotAbsorbingError("gauge is infinite in a component");
    return {*q1, *q2};
}

bool contains(const DConvexSet& b, const DVectorQ& x) {
    return contains(b.p1, part(x, 1)) && contains(b.p2, part(x, 2));
}

bool contains_closure(const DConvexSet& b, const DVectorQ& x) {
    return contains_closure(b.p1, part(x, 1)) && contains_closure(b.p2, part(x, 2));
}

bool is_dconvex(std::span<const DVectorQ> points) {
    if (points.size() <= 1) return true;
    std::vector<RealVec> real;
    for (const auto& p : points) {
        RealVec v = part(p, 1);
        const RealVec w = part(p, 2);
        v.insert(v.end(), w.begin(), w.end());
        real.push_back(std::move(v));
    }
    const auto ext = extreme_points(real);
    const std::size_t n = points.front().dim();
    for (const auto& x : ext) {
        for (const auto& y : ext) {
            if (x == y) continue;
            RealVec mix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
            mix.insert(mix.end(), y.begin() + static_cast<std::ptrdiff_t>(n), y.end());
            if (!in_hull(ext, mix)) return false;
        }
    }
    return true;
}

DConvexSet dconvex_hull(std::span<const DVectorQ> points) {
    if (points.empty()) throw EmptyInputError("hull of no points");
    std::vector<RealVec> c1, c2;
    for (const auto& p : points) {
        if (p.dim() != points.front().dim()) throw DimensionMismatch("points of different dimension");
        c1.push_back(part(p, 1));
        c2.push_back(part(p, 2));
    }
    return {RealPolytope::from_vertices(extreme_points(c1)), RealPolytope::from_vertices(extreme_points(c2)), false};
}

bool is_dabsorbing(const DConvexSet& b) { return zero_in_interior(b.p1) && zero_in_interior(b.p2); }

GaugeValue minkowski_gauge(const DConvexSet& b, const DVectorQ& x) {
    if (x.dim() != b.dim()) throw DimensionMismatch("point has the wrong dimension");
    if (!is_dabsorbing(b)) throw NotAbsorbingError("0 is not interior to the set");
    return {gauge(b.p1, part(x, 1)), gauge(b.p2, part(x, 2))};
}

DConvexSet minkowski_diff_translate(const DConvexSet& a, const DConvexSet& b, const DVectorQ& a0, const DVectorQ& b0) {
    if (a.dim() != b.dim()) throw DimensionMismatch("sets of different dimension");
    if (!contains(a, a0)) throw MembershipError("a0 is not in A");
    if (!contains(b, b0)) throw MembershipError("b0 is not in B");
    std::optional<RealPolytope> sa, sb;
    std::vector<RealPolytope> comps;
    for (int l = 1; l <= 2; ++l) {
        const auto& va = vertices_of(a.component(l), sa);
        const auto& vb = vertices_of(b.component(l), sb);
        const RealVec x0a = part(a0, l), x0b = part(b0, l);
        std::vector<RealVec> g;
        for (const auto& u : va) {
            for (const auto& w : vb) {
                RealVec v(u.size());
                for (std::size_t k = 0; k < v.size(); ++k) v[k] = u[k] - w[k] + x0b[k] - x0a[k];
                g.push_back(std::move(v));
            }
        }
        comps.push_back(RealPolytope::from_vertices(extreme_points(g)));
    }
    return {comps[0], comps[1], a.open || b.open};
}

IntervalPair image_convex(const DFunctionalQ& f, const DConvexSet& a) {
    if (f.dim() != a.dim()) throw DimensionMismatch("functional and set of different dimension");
    IntervalPair out;
    out.open = a.open;
    for (int l = 1; l <= 2; ++l) {
        const RealVec c = f.coeffs.component(l);
        if (std::all_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) == 0; }))
            throw ConstantComponentError(l, "functional vanishes in this component");
        const auto r = linear_range(a.component(l), c);
        if (!r.min || !r.max) throw DegenerateSetError("image is unbounded");
        (l == 1 ? out.lo1 : out.lo2) = *r.min;
        (l == 1 ? out.hi1 : out.hi2) = *r.max;
    }
    return out;
}

ComplexRegion image_convex(const BCFunctionalQ& h, const DConvexSet& a) {
    const std::size_t n = h.dim();
    if (a.dim() != 2 * n) throw DimensionMismatch("set must live in the realification D^{2n}");
    ComplexRegion out;
    out.open = a.open;
    for (int l = 1; l <= 2; ++l) {
        const auto c = h.coeffs.component(l);
        if (std::all_of(c.begin(), c.end(), [](const ComplexQ& v) { return v.is_zero(); }))
            throw ConstantComponentError(l, "functional vanishes in this component");
        std::optional<RealPolytope> storage;
        std::vector<ComplexQ> img;
        for (const auto& v : vertices_of(a.component(l), storage)) {
            ComplexQ z;
            for (std::size_t m = 0; m < n; ++m) z = z + c[m] * ComplexQ(v[m], v[n + m]);
            img.push_back(z);
        }
        (l == 1 ? out.hull1 : out.hull2) = planar_hull(std::move(img));
    }
    return out;
}

}  // namespace bcfa
