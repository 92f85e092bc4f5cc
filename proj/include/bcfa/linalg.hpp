#pragma once

// Dense exact linear algebra over a field (Rational or Complex<Rational>)
// and float spectral helpers for complex matrices.

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bcfa/scalar.hpp"

namespace bcfa {

template <typename F>
using Matrix = std::vector<std::vector<F>>;

namespace detail {

inline bool field_is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool field_is_zero(double a) { return RealTraits<double>::is_zero(a); }
template <typename R>
bool field_is_zero(const Complex<R>& a) {
    return a.is_zero();
}

}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <typename F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && detail::field_is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const F inv = F(1) / m[r][c];
        for (auto& v : m[r]) v = v * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || detail::field_is_zero(m[i][c])) continue;
            const F factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Solves A x = b for square nonsingular A; nullopt when singular.
template <typename F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    const std::size_t n = a.size();
    Matrix<F> aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    auto piv = rref(aug);
    if (piv.size() != n || (n > 0 && piv.back() != n - 1)) return std::nullopt;
    std::vector<F> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

/// Inverse of a square matrix; nullopt when singular.
template <typename F>
std::optional<Matrix<F>> invert(const Matrix<F>& a) {
    const std::size_t n = a.size();
    Matrix<F> aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? F(1) : F(0));
    }
    auto piv = rref(aug);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
    Matrix<F> inv(n, std::vector<F>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

template <typename F>
Matrix<F> transpose(const Matrix<F>& a) {
    if (a.empty()) return {};
    Matrix<F> t(a.front().size(), std::vector<F>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

template <typename F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b.front().size() : 0;
    Matrix<F> c(n, std::vector<F>(m, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][l] * b[l][j];
    return c;
}

template <typename F>
std::vector<F> matvec(const Matrix<F>& a, const std::vector<F>& x) {
    std::vector<F> y(a.size(), F(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] = y[i] + a[i][j] * x[j];
    return y;
}

using ComplexMatrixD = Matrix<std::complex<double>>;

/// Singular values in decreasing order (Jacobi SVD).
std::vector<double> singular_values(const ComplexMatrixD& m);
/// Spectral norm; 0 for an empty matrix.
double spectral_norm(const ComplexMatrixD& m);
/// Moore-Penrose pseudo-inverse.
ComplexMatrixD pseudo_inverse(const ComplexMatrixD& m);

template <typename R>
ComplexMatrixD to_complex_double(const Matrix<Complex<R>>& m) {
    ComplexMatrixD out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& z : m[i])
            out[i].emplace_back(RealTraits<R>::to_double(z.re), RealTraits<R>::to_double(z.im));
    return out;
}

}  // namespace bcfa
