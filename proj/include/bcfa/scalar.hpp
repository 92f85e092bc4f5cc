#pragma once

// Hyperbolic (D) and bicomplex (BC) scalars.
//
// Both are stored in idempotent coordinates: a hyperbolic number is
// e1*a1 + e2*a2 with real a1, a2, and a bicomplex number is e1*z1 + e2*z2
// with z1, z2 in C(i). With e1 = (1+k)/2, e2 = (1-k)/2 every ring operation
// acts componentwise. The classical coordinates (beta1 + k*beta2 for D,
// w1 + j*w2 for BC) are conversion views.

#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "bcfa/errors.hpp"
#include "bcfa/real.hpp"

namespace bcfa {

inline bool sqrt_le_sum(double a, double b, double c) {
    return std::sqrt(a) <= std::sqrt(b) + std::sqrt(c) + RealTraits<double>::eps;
}

// ---------------------------------------------------------------------------
// C(i)

template <typename R>
struct Complex {
    R re{0};
    R im{0};

    Complex() = default;
    Complex(R r) : re(std::move(r)), im(0) {}
    Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    static Complex unit_i() { return Complex(R(0), R(1)); }

    Complex conj() const { return Complex(re, -im); }
    /// |z|^2, always exact.
    R norm2() const { return re * re + im * im; }
    bool is_zero() const { return RealTraits<R>::is_zero(re) && RealTraits<R>::is_zero(im); }

    Complex operator-() const { return Complex(-re, -im); }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        R r = re * o.re - im * o.im;
        R i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        R d = o.norm2();
        if (RealTraits<R>::is_zero(d)) throw ZeroError("complex division by zero");
        R r = (re * o.re + im * o.im) / d;
        R i = (im * o.re - re * o.im) / d;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) {
        return RealTraits<R>::eq(a.re, b.re) && RealTraits<R>::eq(a.im, b.im);
    }
    friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
        return os << format_real(z.re) << (RealTraits<R>::sign(z.im) < 0 ? "" : "+") << format_real(z.im) << "i";
    }
};

// ---------------------------------------------------------------------------
// D

template <typename R>
class Hyperbolic {
public:
    Hyperbolic() : a1_(0), a2_(0) {}
    /// Real embedding: r = e1*r + e2*r.
    Hyperbolic(R r) : a1_(r), a2_(std::move(r)) {}
    Hyperbolic(R a1, R a2) : a1_(std::move(a1)), a2_(std::move(a2)) {}

    static Hyperbolic e1() { return {R(1), R(0)}; }
    static Hyperbolic e2() { return {R(0), R(1)}; }
    static Hyperbolic k() { return {R(1), R(-1)}; }
    /// From beta1 + k*beta2: a1 = beta1 + beta2, a2 = beta1 - beta2.
    static Hyperbolic from_standard(const R& beta1, const R& beta2) { return {beta1 + beta2, beta1 - beta2}; }

    const R& a1() const { return a1_; }
    const R& a2() const { return a2_; }
    const R& component(int l) const { return l == 1 ? a1_ : a2_; }
    R beta1() const { return (a1_ + a2_) / R(2); }
    R beta2() const { return (a1_ - a2_) / R(2); }

    bool is_zero() const { return RealTraits<R>::is_zero(a1_) && RealTraits<R>::is_zero(a2_); }
    bool is_invertible() const { return !RealTraits<R>::is_zero(a1_) && !RealTraits<R>::is_zero(a2_); }
    /// alpha in D+ (both components nonnegative).
    bool is_nonnegative() const { return RealTraits<R>::sign(a1_) >= 0 && RealTraits<R>::sign(a2_) >= 0; }
    /// alpha >' 0 (both components strictly positive).
    bool is_positive() const { return RealTraits<R>::sign(a1_) > 0 && RealTraits<R>::sign(a2_) > 0; }

    Hyperbolic abs() const { return {RealTraits<R>::abs(a1_), RealTraits<R>::abs(a2_)}; }
    Hyperbolic inverse() const {
        if (is_zero()) throw ZeroError("inverse of hyperbolic zero");
        if (!is_invertible()) throw NullConeError("hyperbolic zero divisor has no inverse");
        return {R(1) / a1_, R(1) / a2_};
    }

    Hyperbolic operator-() const { return {-a1_, -a2_}; }
    Hyperbolic& operator+=(const Hyperbolic& o) { a1_ += o.a1_; a2_ += o.a2_; return *this; }
    Hyperbolic& operator-=(const Hyperbolic& o) { a1_ -= o.a1_; a2_ -= o.a2_; return *this; }
    Hyperbolic& operator*=(const Hyperbolic& o) { a1_ *= o.a1_; a2_ *= o.a2_; return *this; }
    Hyperbolic& operator/=(const Hyperbolic& o) { return *this *= o.inverse(); }
    friend Hyperbolic operator+(Hyperbolic a, const Hyperbolic& b) { return a += b; }
    friend Hyperbolic operator-(Hyperbolic a, const Hyperbolic& b) { return a -= b; }
    friend Hyperbolic operator*(Hyperbolic a, const Hyperbolic& b) { return a *= b; }
    friend Hyperbolic operator/(Hyperbolic a, const Hyperbolic& b) { return a /= b; }
    friend bool operator==(const Hyperbolic& a, const Hyperbolic& b) {
        return RealTraits<R>::eq(a.a1_, b.a1_) && RealTraits<R>::eq(a.a2_, b.a2_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Hyperbolic& h) {
        return os << "e1*" << format_real(h.a1_) << " + e2*" << format_real(h.a2_);
    }

private:
    R a1_, a2_;
};

template <typename R>
Hyperbolic<double> to_double(const Hyperbolic<R>& h) {
    return {RealTraits<R>::to_double(h.a1()), RealTraits<R>::to_double(h.a2())};
}

// ---------------------------------------------------------------------------
// BC

/// The four real coordinates of Z = g1 + i g2 + j g3 + k g4.
template <typename R>
struct RealQuad {
    R g1, g2, g3, g4;
};

/// Pair of C(i) numbers under a fixed second unit: Z = first + u*second.
template <typename R>
struct ComplexPair {
    Complex<R> first, second;
};

/// Pair of hyperbolic numbers under a fixed second unit: Z = first + u*second.
template <typename R>
struct HyperbolicPair {
    Hyperbolic<R> first, second;
};

template <typename R>
class Bicomplex {
public:
    Bicomplex() = default;
    Bicomplex(R r) : z1_(r), z2_(std::move(r)) {}
    Bicomplex(Complex<R> z) : z1_(z), z2_(std::move(z)) {}
    Bicomplex(Complex<R> z1, Complex<R> z2) : z1_(std::move(z1)), z2_(std::move(z2)) {}
    Bicomplex(const Hyperbolic<R>& h) : z1_(h.a1()), z2_(h.a2()) {}

    static Bicomplex zero() { return {}; }
    static Bicomplex one() { return Bicomplex(R(1)); }
    static Bicomplex unit_i() { return Bicomplex(Complex<R>::unit_i()); }
    /// j = e1*(-i) + e2*i
    static Bicomplex unit_j() { return {Complex<R>(R(0), R(-1)), Complex<R>(R(0), R(1))}; }
    /// k = ij = e1 - e2
    static Bicomplex unit_k() { return {Complex<R>(R(1)), Complex<R>(R(-1))}; }
    static Bicomplex e1() { return {Complex<R>(R(1)), Complex<R>(R(0))}; }
    static Bicomplex e2() { return {Complex<R>(R(0)), Complex<R>(R(1))}; }

    /// Z = w1 + j w2, so z1 = w1 - i w2 and z2 = w1 + i w2.
    static Bicomplex from_w(const Complex<R>& w1, const Complex<R>& w2) {
        const Complex<R> iw2 = Complex<R>::unit_i() * w2;
        return {w1 - iw2, w1 + iw2};
    }
    static Bicomplex from_real_quad(const RealQuad<R>& q) {
        return from_w(Complex<R>(q.g1, q.g2), Complex<R>(q.g3, q.g4));
    }

    const Complex<R>& z1() const { return z1_; }
    const Complex<R>& z2() const { return z2_; }
    const Complex<R>& component(int l) const { return l == 1 ? z1_ : z2_; }

    /// w1 = (z1 + z2)/2
    Complex<R> w1() const { return (z1_ + z2_) * Complex<R>(R(1) / R(2)); }
    /// w2 = i (z1 - z2)/2
    Complex<R> w2() const { return Complex<R>::unit_i() * (z1_ - z2_) * Complex<R>(R(1) / R(2)); }

    bool is_zero() const { return z1_.is_zero() && z2_.is_zero(); }
    /// Nonzero element of the null cone: exactly one idempotent component vanishes.
    bool is_zero_divisor() const { return z1_.is_zero() != z2_.is_zero(); }
    bool is_invertible() const { return !z1_.is_zero() && !z2_.is_zero(); }
    /// Both idempotent components are real, i.e. Z lies in D.
    bool is_hyperbolic() const { return RealTraits<R>::is_zero(z1_.im) && RealTraits<R>::is_zero(z2_.im); }
    Hyperbolic<R> hyperbolic_value() const { return {z1_.re, z2_.re}; }

    Bicomplex operator-() const { return {-z1_, -z2_}; }
    Bicomplex& operator+=(const Bicomplex& o) { z1_ += o.z1_; z2_ += o.z2_; return *this; }
    Bicomplex& operator-=(const Bicomplex& o) { z1_ -= o.z1_; z2_ -= o.z2_; return *this; }
    Bicomplex& operator*=(const Bicomplex& o) {
#ifdef BCFA_MUTATE_BC_MUL
        // Fault injection for the verification suites: swapped components.
        Complex<R> a = z2_ * o.z2_;
        Complex<R> b = z1_ * o.z1_;
        z1_ = std::move(a);
        z2_ = std::move(b);
#else
        z1_ *= o.z1_;
        z2_ *= o.z2_;
#endif
        return *this;
    }
    friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
    friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
    friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
    friend bool operator==(const Bicomplex& a, const Bicomplex& b) { return a.z1_ == b.z1_ && a.z2_ == b.z2_; }
    friend std::ostream& operator<<(std::ostream& os, const Bicomplex& z) {
        return os << "e1*(" << z.z1_ << ") + e2*(" << z.z2_ << ")";
    }

private:
    Complex<R> z1_, z2_;
};

template <typename R>
Bicomplex<R> bc_mul(const Bicomplex<R>& a, const Bicomplex<R>& b) {
    return a * b;
}

template <typename R>
Bicomplex<R> bc_from_w(const Complex<R>& w1, const Complex<R>& w2) {
    return Bicomplex<R>::from_w(w1, w2);
}

// ---------------------------------------------------------------------------
// Conjugations and moduli

enum class Conjugation { dagger1, dagger2, dagger3 };
enum class ModulusKind { i, j, k };

/// dagger1: conj w1 + j conj w2, dagger2: w1 - j w2, dagger3: conj w1 - j conj w2.
template <typename R>
Bicomplex<R> conjugate(const Bicomplex<R>& z, Conjugation kind) {
    switch (kind) {
        case Conjugation::dagger1: return {z.z2().conj(), z.z1().conj()};
        case Conjugation::dagger2: return {z.z2(), z.z1()};
        case Conjugation::dagger3: return {z.z1().conj(), z.z2().conj()};
    }
    return z;
}

/// |Z|^2_i = Z Z^dagger2, |Z|^2_j = Z Z^dagger1, |Z|^2_k = Z Z^dagger3.
template <typename R>
Bicomplex<R> modulus(const Bicomplex<R>& z, ModulusKind kind) {
    switch (kind) {
        case ModulusKind::i: return z * conjugate(z, Conjugation::dagger2);
        case ModulusKind::j: return z * conjugate(z, Conjugation::dagger1);
        case ModulusKind::k: return z * conjugate(z, Conjugation::dagger3);
    }
    return z;
}

/// The D-valued norm e1|z1| + e2|z2|, carried by its square so that the
/// exact backend never needs an irrational square root. Comparisons and
/// products act on the squares.
template <typename R>
class DNorm {
public:
    DNorm() = default;
    static DNorm from_squared(Hyperbolic<R> squared) { return DNorm(std::move(squared)); }
    static DNorm from_value(const Hyperbolic<R>& v) {
        Hyperbolic<R> a = v.abs();
        return DNorm(a * a);
    }

    const Hyperbolic<R>& squared() const { return sq_; }

    /// The norm itself when both components have rational square roots.
    std::optional<Hyperbolic<R>> value() const {
        if constexpr (RealTraits<R>::backend == Backend::exact) {
            auto r1 = exact_sqrt(sq_.a1());
            auto r2 = exact_sqrt(sq_.a2());
            if (!r1 || !r2) return std::nullopt;
            return Hyperbolic<R>(*r1, *r2);
        } else {
            return Hyperbolic<R>(std::sqrt(sq_.a1()), std::sqrt(sq_.a2()));
        }
    }
    Hyperbolic<double> approx() const {
        return {std::sqrt(RealTraits<R>::to_double(sq_.a1())), std::sqrt(RealTraits<R>::to_double(sq_.a2()))};
    }

    bool is_zero() const { return sq_.is_zero(); }

    friend DNorm operator*(const DNorm& a, const DNorm& b) { return DNorm(a.sq_ * b.sq_); }
    /// Scaling by a hyperbolic factor's absolute value.
    friend DNorm operator*(const Hyperbolic<R>& lambda, const DNorm& n) { return from_value(lambda) * n; }
    friend bool operator==(const DNorm& a, const DNorm& b) { return a.sq_ == b.sq_; }

    /// a <=' b
    friend bool le(const DNorm& a, const DNorm& b) {
        return RealTraits<R>::le(a.sq_.a1(), b.sq_.a1()) && RealTraits<R>::le(a.sq_.a2(), b.sq_.a2());
    }
    /// a <' b
    friend bool lt(const DNorm& a, const DNorm& b) {
        return RealTraits<R>::lt(a.sq_.a1(), b.sq_.a1()) && RealTraits<R>::lt(a.sq_.a2(), b.sq_.a2());
    }
    /// a <=' b + c
    friend bool le_sum(const DNorm& a, const DNorm& b, const DNorm& c) {
        return sqrt_le_sum(a.sq_.a1(), b.sq_.a1(), c.sq_.a1()) && sqrt_le_sum(a.sq_.a2(), b.sq_.a2(), c.sq_.a2());
    }
    /// a <' r for a hyperbolic bound r >' 0.
    friend bool lt(const DNorm& a, const Hyperbolic<R>& r) { return lt(a, from_value(r)) && r.is_positive(); }

private:
    explicit DNorm(Hyperbolic<R> sq) : sq_(std::move(sq)) {}
    Hyperbolic<R> sq_;
};

/// |Z|_k = e1|z1| + e2|z2|
template <typename R>
DNorm<R> dnorm_k(const Bicomplex<R>& z) {
    return DNorm<R>::from_squared({z.z1().norm2(), z.z2().norm2()});
}

/// Z^{-1} = e1/z1 + e2/z2, defined off the null cone.
template <typename R>
Bicomplex<R> bc_inverse(const Bicomplex<R>& z) {
    if (z.is_zero()) throw ZeroError("inverse of bicomplex zero");
    if (z.is_zero_divisor()) throw NullConeError("bicomplex zero divisor lies in the null cone");
    const Complex<R> one(R(1));
    return {one / z.z1(), one / z.z2()};
}

// ---------------------------------------------------------------------------
// Views used by the representations of BC-valued functionals.

template <typename R>
RealQuad<R> real_quad(const Bicomplex<R>& z) {
    const Complex<R> w1 = z.w1();
    const Complex<R> w2 = z.w2();
    return {w1.re, w1.im, w2.re, w2.im};
}

/// Z = f1 + j f2 with f1, f2 in C(i) (the w-coordinates).
template <typename R>
ComplexPair<R> cj_pair(const Bicomplex<R>& z) {
    return {z.w1(), z.w2()};
}

/// Z = f1 + k f2 with f1, f2 in C(i); since j = -ik, f2 = -i w2.
template <typename R>
ComplexPair<R> ck_pair(const Bicomplex<R>& z) {
    return {z.w1(), Complex<R>(R(0), R(-1)) * z.w2()};
}

/// Z = f1 + i f2 with f1, f2 in D: f1 = g1 + k g4, f2 = g2 - k g3.
template <typename R>
HyperbolicPair<R> di_pair(const Bicomplex<R>& z) {
    const auto q = real_quad(z);
    return {Hyperbolic<R>::from_standard(q.g1, q.g4), Hyperbolic<R>::from_standard(q.g2, -q.g3)};
}

/// Z = f1 + j f2 with f1, f2 in D: f1 = g1 + k g4, f2 = g3 - k g2.
template <typename R>
HyperbolicPair<R> dj_pair(const Bicomplex<R>& z) {
    const auto q = real_quad(z);
    return {Hyperbolic<R>::from_standard(q.g1, q.g4), Hyperbolic<R>::from_standard(q.g3, -q.g2)};
}

template <typename R>
Bicomplex<R> to_bicomplex(const Hyperbolic<R>& h) {
    return Bicomplex<R>(h);
}

template <typename R>
Bicomplex<double> to_double(const Bicomplex<R>& z) {
    auto d = [](const Complex<R>& c) {
        return Complex<double>(RealTraits<R>::to_double(c.re), RealTraits<R>::to_double(c.im));
    };
    return {d(z.z1()), d(z.z2())};
}

using HyperbolicQ = Hyperbolic<Rational>;
using BicomplexQ = Bicomplex<Rational>;
using ComplexQ = Complex<Rational>;

}  // namespace bcfa
