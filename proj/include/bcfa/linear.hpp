#pragma once

// Coordinate modules D^n and BC^n, their linear functionals and maps.
//
// Everything is stored in idempotent coordinates, so D-/BC-linearity is
// structural: a functional is a coefficient vector, a map a matrix.
//
// BC^n is also a D-module of rank 2n. A BC-vector x = u + i v with
// u, v in D^n is identified with the D-vector (u, v); D-linear functionals
// on BC^n (such as the hyperbolic part h_D of a BC-linear h) are
// DLinearFunctional objects on that realification.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bcfa/errors.hpp"
#include "bcfa/linalg.hpp"
#include "bcfa/scalar.hpp"

namespace bcfa {

// ---------------------------------------------------------------------------
// Vectors

template <typename R>
struct DVector {
    std::vector<Hyperbolic<R>> coords;

    DVector() = default;
    explicit DVector(std::size_t n) : coords(n) {}
    explicit DVector(std::vector<Hyperbolic<R>> c) : coords(std::move(c)) {}
    DVector(std::initializer_list<Hyperbolic<R>> c) : coords(c) {}

    /// x = e1 x1 + e2 x2 from the two real component vectors.
    static DVector from_components(const std::vector<R>& x1, const std::vector<R>& x2) {
        if (x1.size() != x2.size()) throw DimensionMismatch("component vectors differ in length");
        DVector v(x1.size());
        for (std::size_t m = 0; m < x1.size(); ++m) v.coords[m] = Hyperbolic<R>(x1[m], x2[m]);
        return v;
    }
    static DVector basis(std::size_t n, std::size_t m) {
        DVector v(n);
        v.coords[m] = Hyperbolic<R>(R(1));
        return v;
    }

    std::size_t dim() const { return coords.size(); }
    std::vector<R> component(int l) const {
        std::vector<R> out;
        out.reserve(coords.size());
        for (const auto& c : coords) out.push_back(c.component(l));
        return out;
    }
    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    DVector operator-() const {
        DVector r(*this);
        for (auto& c : r.coords) c = -c;
        return r;
    }
    DVector& operator+=(const DVector& o) {
        check_dim(o);
        for (std::size_t m = 0; m < dim(); ++m) coords[m] += o.coords[m];
        return *this;
    }
    DVector& operator-=(const DVector& o) {
        check_dim(o);
        for (std::size_t m = 0; m < dim(); ++m) coords[m] -= o.coords[m];
        return *this;
    }
    friend DVector operator+(DVector a, const DVector& b) { return a += b; }
    friend DVector operator-(DVector a, const DVector& b) { return a -= b; }
    friend DVector operator*(const Hyperbolic<R>& s, DVector v) {
        for (auto& c : v.coords) c = s * c;
        return v;
    }
    friend bool operator==(const DVector& a, const DVector& b) { return a.coords == b.coords; }

private:
    void check_dim(const DVector& o) const {
        if (o.dim() != dim()) throw DimensionMismatch("D-vectors of different dimension");
    }
};

template <typename R>
struct BCVector {
    std::vector<Bicomplex<R>> coords;

    BCVector() = default;
    explicit BCVector(std::size_t n) : coords(n) {}
    explicit BCVector(std::vector<Bicomplex<R>> c) : coords(std::move(c)) {}
    BCVector(std::initializer_list<Bicomplex<R>> c) : coords(c) {}

    static BCVector from_components(const std::vector<Complex<R>>& x1, const std::vector<Complex<R>>& x2) {
        if (x1.size() != x2.size()) throw DimensionMismatch("component vectors differ in length");
        BCVector v(x1.size());
        for (std::size_t m = 0; m < x1.size(); ++m) v.coords[m] = Bicomplex<R>(x1[m], x2[m]);
        return v;
    }
    static BCVector basis(std::size_t n, std::size_t m) {
        BCVector v(n);
        v.coords[m] = Bicomplex<R>::one();
        return v;
    }

    std::size_t dim() const { return coords.size(); }
    std::vector<Complex<R>> component(int l) const {
        std::vector<Complex<R>> out;
        out.reserve(coords.size());
        for (const auto& c : coords) out.push_back(c.component(l));
        return out;
    }
    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    /// x = u + i v  ->  (u, v) in D^{2n}.
    DVector<R> realify() const {
        DVector<R> out(2 * dim());
        for (std::size_t m = 0; m < dim(); ++m) {
            const auto& z = coords[m];
            out.coords[m] = Hyperbolic<R>(z.z1().re, z.z2().re);
            out.coords[dim() + m] = Hyperbolic<R>(z.z1().im, z.z2().im);
        }
        return out;
    }
    static BCVector from_realified(const DVector<R>& d) {
        if (d.dim() % 2 != 0) throw DimensionMismatch("realified vector must have even dimension");
        const std::size_t n = d.dim() / 2;
        BCVector out(n);
        for (std::size_t m = 0; m < n; ++m) {
            const auto& u = d.coords[m];
            const auto& v = d.coords[n + m];
            out.coords[m] = Bicomplex<R>(Complex<R>(u.a1(), v.a1()), Complex<R>(u.a2(), v.a2()));
        }
        return out;
    }

    BCVector& operator+=(const BCVector& o) {
        check_dim(o);
        for (std::size_t m = 0; m < dim(); ++m) coords[m] += o.coords[m];
        return *this;
    }
    BCVector& operator-=(const BCVector& o) {
        check_dim(o);
        for (std::size_t m = 0; m < dim(); ++m) coords[m] -= o.coords[m];
        return *this;
    }
    friend BCVector operator+(BCVector a, const BCVector& b) { return a += b; }
    friend BCVector operator-(BCVector a, const BCVector& b) { return a -= b; }
    friend BCVector operator*(const Bicomplex<R>& s, BCVector v) {
        for (auto& c : v.coords) c = s * c;
        return v;
    }
    friend bool operator==(const BCVector& a, const BCVector& b) { return a.coords == b.coords; }

private:
    void check_dim(const BCVector& o) const {
        if (o.dim() != dim()) throw DimensionMismatch("BC-vectors of different dimension");
    }
};

/// ||x||_D = e1 ||x1|| + e2 ||x2|| (Euclidean components).
template <typename R>
DNorm<R> dnorm(const DVector<R>& x) {
    R s1(0), s2(0);
    for (const auto& c : x.coords) {
        s1 += c.a1() * c.a1();
        s2 += c.a2() * c.a2();
    }
    return DNorm<R>::from_squared({s1, s2});
}

template <typename R>
DNorm<R> dnorm(const BCVector<R>& x) {
    R s1(0), s2(0);
    for (const auto& c : x.coords) {
        s1 += c.z1().norm2();
        s2 += c.z2().norm2();
    }
    return DNorm<R>::from_squared({s1, s2});
}

// ---------------------------------------------------------------------------
// Functionals

template <typename R>
struct RealFunctionalPair {
    std::vector<R> f1, f2;
};

template <typename R>
struct ComplexFunctionalPair {
    std::vector<Complex<R>> f1, f2;
};

/// f(x) = sum_m coeffs_m x_m on D^n.
template <typename R>
struct DLinearFunctional {
    DVector<R> coeffs;

    DLinearFunctional() = default;
    explicit DLinearFunctional(DVector<R> c) : coeffs(std::move(c)) {}

    std::size_t dim() const { return coeffs.dim(); }
    bool is_zero() const { return coeffs.is_zero(); }
    /// Takes at least one invertible value: both component functionals nonzero.
    bool takes_invertible_value() const {
        bool c1 = false, c2 = false;
        for (const auto& c : coeffs.coords) {
            c1 = c1 || !RealTraits<R>::is_zero(c.a1());
            c2 = c2 || !RealTraits<R>::is_zero(c.a2());
        }
        return c1 && c2;
    }

    friend bool operator==(const DLinearFunctional& a, const DLinearFunctional& b) { return a.coeffs == b.coeffs; }
};

template <typename R>
Hyperbolic<R> eval_d(const DLinearFunctional<R>& f, const DVector<R>& x) {
    if (f.dim() != x.dim()) throw DimensionMismatch("functional and vector dimensions differ");
    Hyperbolic<R> acc;
    for (std::size_t m = 0; m < x.dim(); ++m) acc += f.coeffs.coords[m] * x.coords[m];
    return acc;
}

/// Real dot product used by component functionals.
template <typename R>
R dot(const std::vector<R>& a, const std::vector<R>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
    R acc(0);
    for (std::size_t m = 0; m < a.size(); ++m) acc += a[m] * b[m];
    return acc;
}

template <typename R>
RealFunctionalPair<R> split_functional(const DLinearFunctional<R>& f) {
    return {f.coeffs.component(1), f.coeffs.component(2)};
}

template <typename R>
DLinearFunctional<R> reassemble(const RealFunctionalPair<R>& p) {
    return DLinearFunctional<R>(DVector<R>::from_components(p.f1, p.f2));
}

/// e1 f1(x1) + e2 f2(x2), evaluated through the component functionals.
template <typename R>
Hyperbolic<R> eval_split(const RealFunctionalPair<R>& p, const DVector<R>& x) {
    return {dot(p.f1, x.component(1)), dot(p.f2, x.component(2))};
}

/// h(x) = sum_m coeffs_m x_m on BC^n.
template <typename R>
struct BCLinearFunctional {
    BCVector<R> coeffs;

    BCLinearFunctional() = default;
    explicit BCLinearFunctional(BCVector<R> c) : coeffs(std::move(c)) {}

    std::size_t dim() const { return coeffs.dim(); }
    friend bool operator==(const BCLinearFunctional& a, const BCLinearFunctional& b) { return a.coeffs == b.coeffs; }
};

template <typename R>
Bicomplex<R> eval_bc(const BCLinearFunctional<R>& h, const BCVector<R>& x) {
    if (h.dim() != x.dim()) throw DimensionMismatch("functional and vector dimensions differ");
    Bicomplex<R> acc;
    for (std::size_t m = 0; m < x.dim(); ++m) acc += h.coeffs.coords[m] * x.coords[m];
    return acc;
}

template <typename R>
ComplexFunctionalPair<R> split_functional(const BCLinearFunctional<R>& h) {
    return {h.coeffs.component(1), h.coeffs.component(2)};
}

template <typename R>
BCLinearFunctional<R> reassemble(const ComplexFunctionalPair<R>& p) {
    return BCLinearFunctional<R>(BCVector<R>::from_components(p.f1, p.f2));
}

// ---------------------------------------------------------------------------
// Hyperbolic part and its six derivations

/// How the BC-valued h is decomposed before its hyperbolic part is read off.
enum class FunctionalForm {
    real_quad,       ///< h = g1 + i g2 + j g3 + k g4,   h_D = g1 + k g4
    cj_pair,         ///< h = f1 + j f2 (C(i)),          h_D = Re f1 + k Im f2
    idempotent_pair, ///< h = e1 f1 + e2 f2 (C(i)),      h_D = e1 Re f1 + e2 Re f2
    ck_pair,         ///< h = f1 + k f2 (C(i)),          h_D = Re f1 + k Re f2
    d_pair_i,        ///< h = f1 + i f2 (D),             h_D = f1
    d_pair_j,        ///< h = f1 + j f2 (D),             h_D = f1
};

inline constexpr std::array<FunctionalForm, 6> kAllFunctionalForms = {
    FunctionalForm::real_quad, FunctionalForm::cj_pair,  FunctionalForm::idempotent_pair,
    FunctionalForm::ck_pair,   FunctionalForm::d_pair_i, FunctionalForm::d_pair_j,
};

inline const char* to_string(FunctionalForm f) {
    switch (f) {
        case FunctionalForm::real_quad: return "real-quad";
        case FunctionalForm::cj_pair: return "Cj-pair";
        case FunctionalForm::idempotent_pair: return "idempotent-pair";
        case FunctionalForm::ck_pair: return "Ck-pair";
        case FunctionalForm::d_pair_i: return "D-pair-i";
        case FunctionalForm::d_pair_j: return "D-pair-j";
    }
    return "?";
}

/// The hyperbolic part of one BC value under a given decomposition.
template <typename R>
Hyperbolic<R> hyperbolic_part_of_value(const Bicomplex<R>& value, FunctionalForm form) {
    switch (form) {
        case FunctionalForm::real_quad: {
            const auto q = real_quad(value);
            return Hyperbolic<R>::from_standard(q.g1, q.g4);
        }
        case FunctionalForm::cj_pair: {
            const auto p = cj_pair(value);
            return Hyperbolic<R>::from_standard(p.first.re, p.second.im);
        }
        case FunctionalForm::idempotent_pair:
            return {value.z1().re, value.z2().re};
        case FunctionalForm::ck_pair: {
            const auto p = ck_pair(value);
            return Hyperbolic<R>::from_standard(p.first.re, p.second.re);
        }
        case FunctionalForm::d_pair_i:
            return di_pair(value).first;
        case FunctionalForm::d_pair_j:
            return dj_pair(value).first;
    }
    throw std::logic_error("unknown functional form");
}

/// h_D(x) evaluated pointwise through the given decomposition of h(x).
template <typename R>
Hyperbolic<R> eval_hyperbolic_part(const BCLinearFunctional<R>& h, const BCVector<R>& x, FunctionalForm form) {
    return hyperbolic_part_of_value(eval_bc(h, x), form);
}

/// h_D as a D-linear functional on the realification D^{2n}, derived by
/// evaluating the chosen decomposition on the D-basis {e_m, i e_m}.
template <typename R>
DLinearFunctional<R> hyperbolic_part_via(const BCLinearFunctional<R>& h, FunctionalForm form) {
    const std::size_t n = h.dim();
    DVector<R> coeffs(2 * n);
    const Bicomplex<R> i = Bicomplex<R>::unit_i();
    for (std::size_t m = 0; m < n; ++m) {
        const BCVector<R> em = BCVector<R>::basis(n, m);
        coeffs.coords[m] = eval_hyperbolic_part(h, em, form);
        coeffs.coords[n + m] = eval_hyperbolic_part(h, i * em, form);
    }
    return DLinearFunctional<R>(std::move(coeffs));
}

/// h_D(x) = e1 Re H1(x1) + e2 Re H2(x2) where h = e1 H1 + e2 H2. With
/// c = a + i b (a, b in D), h_D has realified coefficients (a, -b).
template <typename R>
DLinearFunctional<R> hyperbolic_part(const BCLinearFunctional<R>& h) {
    const std::size_t n = h.dim();
    DVector<R> coeffs(2 * n);
    for (std::size_t m = 0; m < n; ++m) {
        const auto& c = h.coeffs.coords[m];
        coeffs.coords[m] = Hyperbolic<R>(c.z1().re, c.z2().re);
        coeffs.coords[n + m] = Hyperbolic<R>(-c.z1().im, -c.z2().im);
    }
    return DLinearFunctional<R>(std::move(coeffs));
}

enum class ReconstructAxis { i, j };

/// The BC-linear h with hyperbolic part f: h(x) = f(x) - i f(ix) or
/// h(x) = f(x) - j f(jx). `f` acts on the realification D^{2n}.
template <typename R>
BCLinearFunctional<R> reconstruct(const DLinearFunctional<R>& f, ReconstructAxis axis) {
    if (f.dim() % 2 != 0) throw DimensionMismatch("a D-functional on BC^n has 2n coefficients");
    const std::size_t n = f.dim() / 2;
    const Bicomplex<R> unit = axis == ReconstructAxis::i ? Bicomplex<R>::unit_i() : Bicomplex<R>::unit_j();
    BCVector<R> coeffs(n);
    for (std::size_t m = 0; m < n; ++m) {
        const BCVector<R> em = BCVector<R>::basis(n, m);
        const Bicomplex<R> fx(eval_d(f, em.realify()));
        const Bicomplex<R> fux(eval_d(f, (unit * em).realify()));
        coeffs.coords[m] = fx - unit * fux;
    }
    return BCLinearFunctional<R>(std::move(coeffs));
}

/// h(x) = f(x) - u f(u x) evaluated pointwise, for checking BC-linearity
/// of the reconstruction independently of its coefficients.
template <typename R>
Bicomplex<R> eval_reconstructed(const DLinearFunctional<R>& f, ReconstructAxis axis, const BCVector<R>& x) {
    const Bicomplex<R> unit = axis == ReconstructAxis::i ? Bicomplex<R>::unit_i() : Bicomplex<R>::unit_j();
    return Bicomplex<R>(eval_d(f, x.realify())) - unit * Bicomplex<R>(eval_d(f, (unit * x).realify()));
}

// ---------------------------------------------------------------------------
// Maps

/// An n -> m BC-linear map stored as an m x n matrix of BC scalars.
template <typename R>
struct BCLinearMap {
    Matrix<Bicomplex<R>> entries;

    BCLinearMap() = default;
    explicit BCLinearMap(Matrix<Bicomplex<R>> e) : entries(std::move(e)) {
        for (const auto& row : entries)
            if (row.size() != cols()) throw DimensionMismatch("ragged BC matrix");
    }

    static BCLinearMap identity(std::size_t n) {
        Matrix<Bicomplex<R>> e(n, std::vector<Bicomplex<R>>(n));
        for (std::size_t i = 0; i < n; ++i) e[i][i] = Bicomplex<R>::one();
        return BCLinearMap(std::move(e));
    }
    static BCLinearMap zero(std::size_t rows, std::size_t cols) {
        return BCLinearMap(Matrix<Bicomplex<R>>(rows, std::vector<Bicomplex<R>>(cols)));
    }
    /// T = e1 T1 + e2 T2.
    static BCLinearMap from_components(const Matrix<Complex<R>>& t1, const Matrix<Complex<R>>& t2) {
        if (t1.size() != t2.size()) throw DimensionMismatch("component matrices differ in shape");
        Matrix<Bicomplex<R>> e(t1.size());
        for (std::size_t i = 0; i < t1.size(); ++i) {
            if (t1[i].size() != t2[i].size()) throw DimensionMismatch("component matrices differ in shape");
            for (std::size_t j = 0; j < t1[i].size(); ++j) e[i].emplace_back(t1[i][j], t2[i][j]);
        }
        return BCLinearMap(std::move(e));
    }

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }

    Matrix<Complex<R>> component(int l) const {
        Matrix<Complex<R>> out(rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& z : entries[i]) out[i].push_back(z.component(l));
        return out;
    }

    BCVector<R> apply(const BCVector<R>& x) const {
        if (x.dim() != cols()) throw DimensionMismatch("map domain dimension differs from vector");
        BCVector<R> y(rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) y.coords[i] += entries[i][j] * x.coords[j];
        return y;
    }

    friend BCLinearMap operator*(const BCLinearMap& a, const BCLinearMap& b) {
        if (a.cols() != b.rows()) throw DimensionMismatch("map composition shape mismatch");
        return BCLinearMap(matmul(a.entries, b.entries));
    }
    friend bool operator==(const BCLinearMap& a, const BCLinearMap& b) { return a.entries == b.entries; }
};

/// e1 ||T1|| + e2 ||T2|| with spectral component norms (float).
template <typename R>
Hyperbolic<double> operator_dnorm(const BCLinearMap<R>& t) {
    return {spectral_norm(to_complex_double(t.component(1))), spectral_norm(to_complex_double(t.component(2)))};
}

using DVectorQ = DVector<Rational>;
using BCVectorQ = BCVector<Rational>;
using DFunctionalQ = DLinearFunctional<Rational>;
using BCFunctionalQ = BCLinearFunctional<Rational>;
using BCMapQ = BCLinearMap<Rational>;

}  // namespace bcfa
