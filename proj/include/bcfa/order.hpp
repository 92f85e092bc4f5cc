#pragma once

// The partial order <=' on D and finite D-suprema/infima.

#include <span>
#include <vector>

#include "bcfa/errors.hpp"
#include "bcfa/scalar.hpp"

namespace bcfa {

enum class OrderResult { less, equal, greater, incomparable };

inline const char* to_string(OrderResult r) {
    switch (r) {
        case OrderResult::less: return "less";
        case OrderResult::equal: return "equal";
        case OrderResult::greater: return "greater";
        case OrderResult::incomparable: return "incomparable";
    }
    return "?";
}

/// alpha <=' gamma  (gamma - alpha in D+)
template <typename R>
bool le(const Hyperbolic<R>& alpha, const Hyperbolic<R>& gamma) {
    return RealTraits<R>::le(alpha.a1(), gamma.a1()) && RealTraits<R>::le(alpha.a2(), gamma.a2());
}

/// alpha <' gamma: both component inequalities strict.
template <typename R>
bool lt_strict(const Hyperbolic<R>& alpha, const Hyperbolic<R>& gamma) {
    return RealTraits<R>::lt(alpha.a1(), gamma.a1()) && RealTraits<R>::lt(alpha.a2(), gamma.a2());
}

template <typename R>
OrderResult compare(const Hyperbolic<R>& alpha, const Hyperbolic<R>& gamma) {
    if (alpha == gamma) return OrderResult::equal;
    if (le(alpha, gamma)) return OrderResult::less;
    if (le(gamma, alpha)) return OrderResult::greater;
    return OrderResult::incomparable;
}

template <typename R>
using HyperbolicSet = std::vector<Hyperbolic<R>>;

/// sup_D A = e1 sup A1 + e2 sup A2.
template <typename R>
Hyperbolic<R> sup_d(std::span<const Hyperbolic<R>> set) {
    if (set.empty()) throw EmptySetError("sup_D of an empty set");
    R s1 = set.front().a1(), s2 = set.front().a2();
    for (const auto& a : set.subspan(1)) {
        if (a.a1() > s1) s1 = a.a1();
        if (a.a2() > s2) s2 = a.a2();
    }
    return {s1, s2};
}

/// inf_D A = e1 inf A1 + e2 inf A2.
template <typename R>
Hyperbolic<R> inf_d(std::span<const Hyperbolic<R>> set) {
    if (set.empty()) throw EmptySetError("inf_D of an empty set");
    R s1 = set.front().a1(), s2 = set.front().a2();
    for (const auto& a : set.subspan(1)) {
        if (a.a1() < s1) s1 = a.a1();
        if (a.a2() < s2) s2 = a.a2();
    }
    return {s1, s2};
}

template <typename R>
Hyperbolic<R> sup_d(const std::vector<Hyperbolic<R>>& set) {
    return sup_d(std::span<const Hyperbolic<R>>(set));
}
template <typename R>
Hyperbolic<R> inf_d(const std::vector<Hyperbolic<R>>& set) {
    return inf_d(std::span<const Hyperbolic<R>>(set));
}

/// True iff every element's componentwise absolute value is <' bound.
template <typename R>
bool is_d_bounded(std::span<const Hyperbolic<R>> set, const Hyperbolic<R>& bound) {
    if (!bound.is_positive()) throw NonPositiveBoundError("D-bound must satisfy M >' 0");
    for (const auto& a : set)
        if (!lt_strict(a.abs(), bound)) return false;
    return true;
}

template <typename R>
bool is_d_bounded(const std::vector<Hyperbolic<R>>& set, const Hyperbolic<R>& bound) {
    return is_d_bounded(std::span<const Hyperbolic<R>>(set), bound);
}

}  // namespace bcfa
