#pragma once

// Constructive versions of the main theorems on finite-dimensional modules:
// dominated extension and hyperbolic/bicomplex separation, D-hyperplanes,
// uniform boundedness, open and inverse mapping, closed graph.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bcfa/convex.hpp"
#include "bcfa/linear.hpp"
#include "bcfa/order.hpp"

namespace bcfa {

// ---------------------------------------------------------------------------
// Dominated extension

/// A D-linear functional given by its values on a basis of a submodule Y.
struct SubspaceFunctional {
    std::vector<DVectorQ> basis;
    std::vector<HyperbolicQ> values;
};

/// Real extension in one component: f on R^n with f(basis_i) = values_i and
/// f <= q_P, where P contains 0 in its interior. The free directions take the
/// midpoint of the admissible interval, which keeps f < q_P off Y whenever
/// g < q_P on Y minus 0.
RealVec extend_component(const std::vector<RealVec>& basis, const std::vector<Rational>& values,
                         const RealPolytope& p, int component);

/// f on D^n with f = g on Y and f <=' q_B.
DFunctionalQ extend_dominated(const SubspaceFunctional& g, const DConvexSet& b, std::size_t n);

/// max over [-1,1]^n of f(y) - q_P(y) in one component (<= 0 iff f <= q_P).
Rational domination_gap(const RealVec& f, const RealPolytope& p);

// ---------------------------------------------------------------------------
// Separation

struct SeparationCheck {
    DVectorQ vertex;
    bool side_a = true;  ///< vertex of A (else of B)
    HyperbolicQ value;   ///< f(vertex)
};

struct SeparationTrace {
    DVectorQ a0, b0, x0;
    DConvexSet g;
    std::vector<HyperbolicQ> gauge_values;  ///< q_G(a - a0) at each A-side check
};

struct SeparationCertificate {
    DFunctionalQ f;
    HyperbolicQ gamma;
    SeparationTrace trace;
    std::vector<SeparationCheck> checks;
};

/// Vertices of the closure of a D-convex set as D-vectors: the i-th point
/// pairs the i-th vertex of each component (cycling the shorter list).
std::vector<DVectorQ> paired_vertices(const DConvexSet& s);

/// f(a) <' gamma <=' f(b) for a in open A, b in B.
SeparationCertificate separate_hyperbolic(const DConvexSet& a, const DConvexSet& b);

struct CertificateVerdict {
    bool valid = false;               ///< weak inequalities at all vertices, f nonzero per component, checks consistent
    bool strict_at_vertices = false;  ///< f(a) <' gamma also at the vertices of the closure of A
    std::string reason;
};
CertificateVerdict verify_certificate(const SeparationCertificate& cert, const DConvexSet& a, const DConvexSet& b);

/// Independent oracle: per component, whether some w strictly separates the
/// vertex sets (w.a + t <= c <= w.b with t > 0).
struct OracleVerdict {
    bool separable1 = false, separable2 = false;
    bool separable() const { return separable1 && separable2; }
};
OracleVerdict lp_separation_oracle(const DConvexSet& a, const DConvexSet& b);

struct BicomplexSeparation {
    BCFunctionalQ h;
    HyperbolicQ gamma;
    SeparationCertificate certificate;
};

/// Separation in BC^n, with A and B given in the realification D^{2n}.
BicomplexSeparation separate_bicomplex(const DConvexSet& a, const DConvexSet& b);

// ---------------------------------------------------------------------------
// Hyperplanes

struct DHyperplane {
    DFunctionalQ f;
    HyperbolicQ c;

    bool contains(const DVectorQ& x) const { return eval_d(f, x) == c; }
};

DHyperplane hyperplane_normalize(const DFunctionalQ& g, const HyperbolicQ& c);

/// Deterministic grid of about `target` points in the closed box of the set,
/// plus its vertices, used to sample the gauge sandwich.
std::vector<DVectorQ> sample_grid(const DConvexSet& s, std::size_t target);

/// Returns f with L = {f = 1}, -q_B(-x) <=' f(x) <=' q_B(x), B in {f <' 1}.
DFunctionalQ hyperplane_gauge_bound(const DConvexSet& b, const DHyperplane& l);

/// A hyperplane through x0 + span(basis_m) with f <=' q_B.
DHyperplane variety_extend_hyperplane(const DVectorQ& x0, const std::vector<DVectorQ>& basis_m, const DConvexSet& b);

// ---------------------------------------------------------------------------
// Maps

using MapFamily = std::vector<BCMapQ>;
using HyperbolicD = Hyperbolic<double>;

struct UBPBound {
    HyperbolicD m, delta;
};
/// Value used for delta in a component where every map vanishes.
inline constexpr double kUnboundedDelta = 1e12;

UBPBound ubp_bound(const MapFamily& family, const HyperbolicD& eps);
/// Samples x with ||x||_D <' delta and counts the x where some map gives
/// ||T x||_D not <' eps.
std::size_t ubp_failures(const MapFamily& family, const UBPBound& bound, const HyperbolicD& eps, std::size_t samples,
                         std::mt19937_64& rng);

struct OpenMapBound {
    HyperbolicD delta;
};
OpenMapBound omt_delta(const BCMapQ& t);
/// Samples y with ||y||_D <' radius and counts the y whose least-norm
/// preimage does not satisfy ||x||_D <' 1.
std::size_t omt_failures(const BCMapQ& t, const HyperbolicD& radius, std::size_t samples, std::mt19937_64& rng);
/// Least-norm preimage norm of a y of norm `scale * delta` along the
/// weakest singular direction, per component (tight at scale 1).
HyperbolicD omt_extremal_preimage_norm(const BCMapQ& t, const HyperbolicD& delta, double scale);

struct InverseResult {
    BCMapQ inverse;
    HyperbolicD bound;
};
InverseResult inverse_map(const BCMapQ& t);

/// T = p_Y p_X^{-1} for a submodule of BC^n x BC^m spanned by `basis`.
BCMapQ map_from_graph(const std::vector<BCVectorQ>& basis, std::size_t n);

// ---------------------------------------------------------------------------
// Sampling helpers (float)

/// Random complex vector of Euclidean norm exactly `radius` (up to rounding).
std::vector<std::complex<double>> random_complex_vector(std::size_t n, double radius, std::mt19937_64& rng);
double euclidean_norm(const std::vector<std::complex<double>>& v);
std::vector<std::complex<double>> mat_apply(const ComplexMatrixD& m, const std::vector<std::complex<double>>& v);

}  // namespace bcfa
