#pragma once

// Independent reference computations used by the tests. They work in the
// classical basis {1, i, j, k} or with plain real/complex arithmetic, never
// through the idempotent representation used by the library.

#include <array>
#include <cmath>
#include <vector>

#include "bcfa/scalar.hpp"

namespace oracle {

using bcfa::Rational;

/// a + b i + c j + d k with i^2 = j^2 = -1, k^2 = 1, ij = ji = k.
struct Quad {
    std::array<Rational, 4> c;

    friend bool operator==(const Quad&, const Quad&) = default;
};

inline Quad mul(const Quad& x, const Quad& y) {
    // Table of basis products as (sign, index) over {1, i, j, k}.
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    static const int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    Quad out;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) out.c[index[p][q]] += sign[p][q] * x.c[p] * y.c[q];
    return out;
}

/// Z = w1 + j w2 with w1 = a + b i, w2 = c + d i, so Z = a + b i + c j + d k.
inline Quad from_bc(const bcfa::BicomplexQ& z) {
    const auto w1 = z.w1(), w2 = z.w2();
    return {{w1.re, w1.im, w2.re, w2.im}};
}

/// |z|^2 for a complex number, written out.
inline Rational abs2(const bcfa::ComplexQ& z) { return z.re * z.re + z.im * z.im; }

}  // namespace oracle
