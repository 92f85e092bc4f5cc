#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "bcfa/analysis.hpp"
#include "bcfa/linalg.hpp"

namespace bcfa {

namespace {

using CVec = std::vector<std::complex<double>>;

/// Index `l - 1` of a component pair.
double comp(const HyperbolicD& h, int l) { return h.component(l); }

}  // namespace

std::vector<std::complex<double>> random_complex_vector(std::size_t n, double radius, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVec v(n);
    double norm = 0.0;
    while (norm == 0.0) {
        for (auto& z : v) z = {normal(rng), normal(rng)};
        norm = euclidean_norm(v);
    }
    for (auto& z : v) z *= radius / norm;
    return v;
}

double euclidean_norm(const std::vector<std::complex<double>>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

std::vector<std::complex<double>> mat_apply(const ComplexMatrixD& m, const std::vector<std::complex<double>>& v) {
    CVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

// ---------------------------------------------------------------------------
// Uniform boundedness

UBPBound ubp_bound(const MapFamily& family, const HyperbolicD& eps) {
    if (family.empty()) throw EmptyFamilyError("map family is empty");
    if (!(eps.a1() > 0 && eps.a2() > 0)) throw NonPositiveBoundError("eps must be >' 0");
    for (const auto& t : family)
        if (t.rows() != family.front().rows() || t.cols() != family.front().cols())
            throw DimensionMismatch("maps of the family differ in shape");
    double m[2] = {0.0, 0.0};
    for (const auto& t : family) {
        const auto n = operator_dnorm(t);
        m[0] = std::max(m[0], n.a1());
        m[1] = std::max(m[1], n.a2());
    }
    double d[2];
    for (int l = 0; l < 2; ++l) d[l] = m[l] <= 1e-12 ? kUnboundedDelta : comp(eps, l + 1) / m[l];
    return {{m[0], m[1]}, {d[0], d[1]}};
}

std::size_t ubp_failures(const MapFamily& family, const UBPBound& bound, const HyperbolicD& eps, std::size_t samples,
                         std::mt19937_64& rng) {
    if (family.empty()) throw EmptyFamilyError("map family is empty");
    const std::size_t n = family.front().cols();
    std::vector<std::array<ComplexMatrixD, 2>> mats;
    for (const auto& t : family) mats.push_back({to_complex_double(t.component(1)), to_complex_double(t.component(2))});
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t failures = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        bool ok = true;
        for (int l = 1; l <= 2; ++l) {
            const CVec x = random_complex_vector(n, comp(bound.delta, l) * unit(rng), rng);
            for (const auto& m : mats)
                if (!(euclidean_norm(mat_apply(m[l - 1], x)) < comp(eps, l))) ok = false;
        }
        if (!ok) ++failures;
    }
    return failures;
}

// ---------------------------------------------------------------------------
// Open mapping

OpenMapBound omt_delta(const BCMapQ& t) {
    double d[2];
    for (int l = 1; l <= 2; ++l) {
        const auto tl = t.component(l);
        if (t.rows() == 0 || rank(tl) != t.rows())
            throw NotSurjectiveError(l, "map is not onto");
        const auto sv = singular_values(to_complex_double(tl));
        const double sigma = sv.size() >= t.rows() ? sv[t.rows() - 1] : 0.0;
        if (sigma <= 1e-12) throw NotSurjectiveError(l, "smallest singular value is numerically zero");
        d[l - 1] = sigma;
    }
    return {{d[0], d[1]}};
}

std::size_t omt_failures(const BCMapQ& t, const HyperbolicD& radius, std::size_t samples, std::mt19937_64& rng) {
    const ComplexMatrixD p[2] = {pseudo_inverse(to_complex_double(t.component(1))),
                                 pseudo_inverse(to_complex_double(t.component(2)))};
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t failures = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        bool ok = true;
        for (int l = 1; l <= 2; ++l) {
            const CVec y = random_complex_vector(t.rows(), comp(radius, l) * unit(rng), rng);
            if (!(euclidean_norm(mat_apply(p[l - 1], y)) < 1.0)) ok = false;
        }
        if (!ok) ++failures;
    }
    return failures;
}

HyperbolicD omt_extremal_preimage_norm(const BCMapQ& t, const HyperbolicD& delta, double scale) {
    double out[2];
    for (int l = 1; l <= 2; ++l) {
        const auto m = to_complex_double(t.component(l));
        Eigen::MatrixXcd e(static_cast<Eigen::Index>(t.rows()), static_cast<Eigen::Index>(t.cols()));
        for (std::size_t i = 0; i < t.rows(); ++i)
            for (std::size_t j = 0; j < t.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j];
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeFullU);
        const Eigen::VectorXcd u = svd.matrixU().col(static_cast<Eigen::Index>(t.rows()) - 1);
        CVec y(t.rows());
        for (std::size_t i = 0; i < t.rows(); ++i) y[i] = u(static_cast<Eigen::Index>(i)) * (scale * comp(delta, l));
        out[l - 1] = euclidean_norm(mat_apply(pseudo_inverse(m), y));
    }
    return {out[0], out[1]};
}

// ---------------------------------------------------------------------------
// Inverse mapping

InverseResult inverse_map(const BCMapQ& t) {
    if (t.rows() != t.cols() || t.rows() == 0) throw NotBijectiveError(1, "map is not square");
    Matrix<ComplexQ> inv[2];
    for (int l = 1; l <= 2; ++l) {
        auto r = invert(t.component(l));
        if (!r) throw NotBijectiveError(l, "component matrix is singular");
        inv[l - 1] = std::move(*r);
    }
    InverseResult out{BCMapQ::from_components(inv[0], inv[1]), {}};
    out.bound = operator_dnorm(out.inverse);
    return out;
}

// ---------------------------------------------------------------------------
// Closed graph

BCMapQ map_from_graph(const std::vector<BCVectorQ>& basis, std::size_t n) {
    if (basis.empty()) throw NotAGraphError(1, "empty spanning set");
    const std::size_t total = basis.front().dim();
    if (n == 0 || total <= n) throw DimensionMismatch("graph vectors must have more than n coordinates");
    const std::size_t m = total - n;
    for (const auto& b : basis)
        if (b.dim() != total) throw DimensionMismatch("graph vectors differ in dimension");

    Matrix<ComplexQ> t[2];
    for (int l = 1; l <= 2; ++l) {
        Matrix<ComplexQ> u, v, uv;
        for (const auto& b : basis) {
            auto c = b.component(l);
            uv.push_back(c);
            u.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
            v.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(n), c.end());
        }
        const std::size_t ru = rank(u);
        if (ru != n) throw NotAGraphError(l, "projection to the domain is not onto");
        if (rank(uv) != ru) throw NotAGraphError(l, "projection to the domain is not one-to-one");
        auto ut = transpose(u);
        const auto rows = rref(ut);
        Matrix<ComplexQ> us, vs;
        for (auto r : rows) {
            us.push_back(u[r]);
            vs.push_back(v[r]);
        }
        // T us^T = vs^T, so T = vs^T (us^T)^{-1}.
        auto inv = invert(transpose(us));
        if (!inv) throw std::logic_error("selected domain rows are singular");
        t[l - 1] = matmul(transpose(vs), *inv);
    }
    BCMapQ map = BCMapQ::from_components(t[0], t[1]);
    for (const auto& b : basis) {
        BCVectorQ x(n), y(m);
        for (std::size_t k = 0; k < n; ++k) x.coords[k] = b.coords[k];
        for (std::size_t k = 0; k < m; ++k) y.coords[k] = b.coords[n + k];
        if (!(map.apply(x) == y)) throw std::logic_error("reconstructed map misses a graph vector");
    }
    return map;
}

}  // namespace bcfa
