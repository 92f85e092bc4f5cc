#pragma once

// Real polytopes: the components of D-convex sets.
//
// A polytope is carried by a vertex list (V-rep), a list of half-spaces
// a.x <= b with per-face strictness (H-rep), or both. Conversions between
// the two are exact and supported for dimension <= 3.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bcfa/errors.hpp"
#include "bcfa/lp.hpp"

namespace bcfa {

using RealVec = std::vector<Rational>;

struct Halfspace {
    RealVec a;
    Rational b;
    bool strict = false;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

class RealPolytope {
public:
    RealPolytope() = default;

    static RealPolytope from_vertices(std::vector<RealVec> vertices, bool open = false);
    static RealPolytope from_halfspaces(std::size_t dim, std::vector<Halfspace> faces, bool open = false);
    /// The whole of R^dim (no constraints).
    static RealPolytope whole_space(std::size_t dim) { return from_halfspaces(dim, {}, false); }
    /// Axis-aligned box [lo, hi]^dim.
    static RealPolytope box(std::size_t dim, const Rational& lo, const Rational& hi, bool open = false);

    std::size_t dim() const { return dim_; }
    bool open() const { return open_; }
    bool has_vertices() const { return vertices_.has_value(); }
    bool has_halfspaces() const { return faces_.has_value(); }
    const std::vector<RealVec>& vertices() const;
    const std::vector<Halfspace>& halfspaces() const;

    RealPolytope with_open(bool open) const {
        RealPolytope p(*this);
        p.open_ = open;
        return p;
    }

private:
    std::size_t dim_ = 0;
    bool open_ = false;
    std::optional<std::vector<RealVec>> vertices_;
    std::optional<std::vector<Halfspace>> faces_;

    friend RealPolytope with_both_representations(const RealPolytope& p);
};

// -- point sets --------------------------------------------------------------

/// x lies in the convex hull of `points` (exact LP).
bool in_hull(std::span<const RealVec> points, const RealVec& x);
/// x = sum lambda_j p_j with every lambda_j > 0 and sum lambda_j = 1.
bool in_relative_interior(std::span<const RealVec> points, const RealVec& x);
/// Affine hull of the points is all of R^dim.
bool is_full_dimensional(std::span<const RealVec> points, std::size_t dim);
/// The extreme points of the hull, deduplicated, in input order.
std::vector<RealVec> extreme_points(std::span<const RealVec> points);
RealVec centroid(std::span<const RealVec> points);

// -- polytope queries --------------------------------------------------------

/// Membership honouring openness (interior for open V-rep, strict faces).
bool contains(const RealPolytope& p, const RealVec& x);
/// Membership in the closure.
bool contains_closure(const RealPolytope& p, const RealVec& x);
bool zero_in_interior(const RealPolytope& p);

/// Adds the missing representation (dimension <= 3).
RealPolytope with_both_representations(const RealPolytope& p);

/// min / max of c.x over the closure, with attaining points; nullopt for an
/// unbounded side.
struct LinearRange {
    std::optional<Rational> min, max;
    RealVec argmin, argmax;
};
LinearRange linear_range(const RealPolytope& p, const RealVec& c);

/// Gauge from the faces: max(0, max_i a_i.x / b_i). Requires b_i > 0.
Rational gauge_from_faces(std::span<const Halfspace> faces, const RealVec& x);
/// Gauge from the vertices: min sum lambda s.t. sum lambda_j v_j = x,
/// lambda >= 0; nullopt when x is outside the cone (infinite gauge).
std::optional<Rational> gauge_from_vertices(std::span<const RealVec> vertices, const RealVec& x);
/// Float evaluation of the face formula.
double gauge_from_faces(std::span<const Halfspace> faces, const std::vector<double>& x);
/// Gauge of a polytope containing 0 in its interior (faces when available).
std::optional<Rational> gauge(const RealPolytope& p, const RealVec& x);

// -- LP building blocks ------------------------------------------------------

struct AffineExpr {
    lp::Terms terms;
    Rational constant;
};

/// Adds constraints forcing s >= q_P(y) (tight when s is minimized), where
/// y_k = exprs[k] and q_P is the gauge of P. Returns nothing; `s` must be a
/// nonnegative variable of `prog`.
void add_gauge_epigraph(lp::Program& prog, const RealPolytope& p, std::span<const AffineExpr> y, std::size_t s);

/// A point of the intersection of the two polytopes' closures, or of
/// interior(a) with b when `a_open` (nullopt when disjoint).
std::optional<RealVec> common_point(const RealPolytope& a, const RealPolytope& b, bool a_open);

}  // namespace bcfa
