#pragma once

// Real backends for every scalar in the library.
//
// Two carriers are supported: `Rational` (GMP mpq, exact and lossless) and
// `double` (binary float compared under a fixed tolerance). Code that must
// work with either goes through `RealTraits<R>`.

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace bcfa {

using Rational = mpq_class;

enum class Backend { exact, floating };

template <typename R>
struct RealTraits;

template <>
struct RealTraits<Rational> {
    static constexpr Backend backend = Backend::exact;
    static constexpr const char* name = "exact";

    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static bool eq(const Rational& a, const Rational& b) { return a == b; }
    static bool lt(const Rational& a, const Rational& b) { return a < b; }
    static bool le(const Rational& a, const Rational& b) { return a <= b; }
    static int sign(const Rational& a) { return sgn(a); }
    static Rational abs(const Rational& a) { return ::abs(a); }
    static double to_double(const Rational& a) { return a.get_d(); }
    static Rational from_int(long v) { return Rational(v); }
};

template <>
struct RealTraits<double> {
    static constexpr Backend backend = Backend::floating;
    static constexpr const char* name = "float";
    // Module-level tolerance for the float backend.
    static constexpr double eps = 1e-9;

    static bool is_zero(double a) { return std::fabs(a) <= eps; }
    static bool eq(double a, double b) { return std::fabs(a - b) <= eps; }
    static bool lt(double a, double b) { return !eq(a, b) && a < b; }
    static bool le(double a, double b) { return eq(a, b) || a < b; }
    static int sign(double a) { return is_zero(a) ? 0 : (a < 0 ? -1 : 1); }
    static double abs(double a) { return std::fabs(a); }
    static double to_double(double a) { return a; }
    static double from_int(long v) { return static_cast<double>(v); }
};

/// Parses "p/q", an integer, or a decimal literal ("-1.25", "3e-2") exactly.
/// Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Lowest-terms "p/q" (or "p" for integers).
std::string format_rational(const Rational& q);

inline std::string format_real(const Rational& q) { return format_rational(q); }
/// Shortest round-trip decimal.
std::string format_real(double v);

/// Exact square root when `q` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Decides sqrt(a) <= sqrt(b) + sqrt(c) exactly for nonnegative a, b, c.
bool sqrt_le_sum(const Rational& a, const Rational& b, const Rational& c);

}  // namespace bcfa
