#pragma once

// D-convex sets as idempotent pairs of real polytopes, their hyperbolic
// Minkowski gauges, hulls and translated Minkowski differences.

#include <optional>
#include <span>
#include <vector>

#include "bcfa/linear.hpp"
#include "bcfa/polytope.hpp"

namespace bcfa {

/// The set e1 P1 + e2 P2 in D^n. `open` applies to both components.
struct DConvexSet {
    RealPolytope p1, p2;
    bool open = false;

    DConvexSet() = default;
    DConvexSet(RealPolytope a, RealPolytope b, bool is_open);

    std::size_t dim() const { return p1.dim(); }
    const RealPolytope& component(int l) const { return l == 1 ? p1 : p2; }
};

/// Hyperbolic gauge value; a missing component means +infinity.
struct GaugeValue {
    std::optional<Rational> q1, q2;

    bool finite() const { return q1.has_value() && q2.has_value(); }
    /// Requires finite().
    HyperbolicQ value() const;
};

bool contains(const DConvexSet& b, const DVectorQ& x);
bool contains_closure(const DConvexSet& b, const DVectorQ& x);

/// conv(S) is closed under idempotent mixes e1 x + e2 y of its points.
bool is_dconvex(std::span<const DVectorQ> points);
/// Component hulls of the e1- and e2-parts (vertex lists pruned to extreme points).
DConvexSet dconvex_hull(std::span<const DVectorQ> points);

/// 0 lies in the interior of both components.
bool is_dabsorbing(const DConvexSet& b);
GaugeValue minkowski_gauge(const DConvexSet& b, const DVectorQ& x);

/// G = A - B + x0 with x0 = b0 - a0, as vertex lists; 0 lies in G.
DConvexSet minkowski_diff_translate(const DConvexSet& a, const DConvexSet& b, const DVectorQ& a0, const DVectorQ& b0);

/// Per-component interval [lo, hi] (open when `open`).
struct IntervalPair {
    Rational lo1, hi1, lo2, hi2;
    bool open = false;
};
IntervalPair image_convex(const DFunctionalQ& f, const DConvexSet& a);

/// Image of a BC-functional of a set in the realification D^{2n}: per
/// component the complex hull polygon (counter-clockwise, as (re, im)).
struct ComplexRegion {
    std::vector<ComplexQ> hull1, hull2;
    bool open = false;
};
ComplexRegion image_convex(const BCFunctionalQ& h, const DConvexSet& a);

}  // namespace bcfa
