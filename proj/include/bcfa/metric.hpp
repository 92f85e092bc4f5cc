#pragma once

// D-valued metric on coordinate modules and the constructive Baire
// procedure on the hyperbolic plane D.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bcfa/linear.hpp"
#include "bcfa/order.hpp"

namespace bcfa {

/// d_D(x, y) = e1 ||x1 - y1|| + e2 ||x2 - y2||, carried squared.
template <typename R>
DNorm<R> dmetric(const DVector<R>& x, const DVector<R>& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("metric on vectors of different dimension");
    return dnorm(x - y);
}

template <typename R>
DNorm<R> dmetric(const BCVector<R>& x, const BCVector<R>& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("metric on vectors of different dimension");
    return dnorm(x - y);
}

/// Open ball {y : d_D(center, y) <' radius}.
template <typename R>
struct DBall {
    DVector<R> center;
    Hyperbolic<R> radius;

    DBall(DVector<R> c, Hyperbolic<R> r) : center(std::move(c)), radius(std::move(r)) {
        if (!radius.is_positive()) throw NonPositiveBoundError("ball radius must satisfy r >' 0");
    }
};

template <typename R>
bool ball_contains(const DBall<R>& ball, const DVector<R>& y) {
    return lt(dmetric(ball.center, y), ball.radius);
}

/// Closed rectangle e1[lo1, hi1] + e2[lo2, hi2] in D.
struct RectSet {
    Rational lo1, hi1, lo2, hi2;

    RectSet(Rational l1, Rational h1, Rational l2, Rational h2);

    bool contains(const HyperbolicQ& p) const;
    /// The open ball B(center, radius) of D lies inside the rectangle.
    bool contains_ball(const HyperbolicQ& center, const HyperbolicQ& radius) const;
    bool is_degenerate() const { return lo1 == hi1 || lo2 == hi2; }
    HyperbolicQ center() const;

    friend bool operator==(const RectSet&, const RectSet&) = default;
};

/// One step of the nested-ball schedule: the point x_m chosen outside F_m
/// and the radius eps_m with B(x_m, eps_m) disjoint from F_m.
struct BaireStep {
    std::size_t set_index;
    HyperbolicQ point;
    HyperbolicQ radius;
};

struct BaireWitness {
    std::size_t index;              ///< the F_n containing the ball (0-based)
    HyperbolicQ center;
    HyperbolicQ radius;
    std::vector<BaireStep> steps;   ///< the nested balls built before termination
};

/// A point of `box` not covered by any rectangle, decided exactly.
std::optional<HyperbolicQ> find_uncovered(std::span<const RectSet> cover, const RectSet& box);

/// Runs the nested-ball construction over a finite closed cover of `box`:
/// starting from the open box, repeatedly take the half ball around the
/// last centre; either it lies in F_m (returned) or a point of it outside
/// F_m gives the next ball with radius below 1/2^m. Throws NotACoverError
/// when the rectangles leave part of the box uncovered.
BaireWitness baire_witness(std::span<const RectSet> cover, const RectSet& box);

}  // namespace bcfa
