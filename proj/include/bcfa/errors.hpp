#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bcfa/real.hpp"

namespace bcfa {

/// Root of every error the library raises on a violated precondition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    /// Stable machine-readable tag, used by the CLI and the JSON reports.
    virtual const char* kind() const noexcept = 0;
};

#define BCFA_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                       \
        using Error::Error;                                       \
        const char* kind() const noexcept override { return #Name; } \
    };

BCFA_DEFINE_ERROR(ZeroError)
BCFA_DEFINE_ERROR(NullConeError)
BCFA_DEFINE_ERROR(EmptySetError)
BCFA_DEFINE_ERROR(NonPositiveBoundError)
BCFA_DEFINE_ERROR(DimensionMismatch)
BCFA_DEFINE_ERROR(EmptyInputError)
BCFA_DEFINE_ERROR(NotAbsorbingError)
BCFA_DEFINE_ERROR(MembershipError)
BCFA_DEFINE_ERROR(DominationError)
BCFA_DEFINE_ERROR(DegenerateBasisError)
BCFA_DEFINE_ERROR(DegenerateSetError)
BCFA_DEFINE_ERROR(NotOpenError)
BCFA_DEFINE_ERROR(ZeroDivisorLevelError)
BCFA_DEFINE_ERROR(DegenerateFunctionalError)
BCFA_DEFINE_ERROR(DegenerateVarietyError)
BCFA_DEFINE_ERROR(EmptyFamilyError)
BCFA_DEFINE_ERROR(SchemaError)
BCFA_DEFINE_ERROR(UnsupportedDimensionError)

#undef BCFA_DEFINE_ERROR

/// An error tied to one idempotent component (1 or 2).
class ComponentError : public Error {
public:
    ComponentError(int component, const std::string& what)
        : Error(what + " (component e" + std::to_string(component) + ")"), component_(component) {}
    int component() const noexcept { return component_; }

private:
    int component_;
};

#define BCFA_DEFINE_COMPONENT_ERROR(Name)                             \
    class Name : public ComponentError {                              \
    public:                                                           \
        using ComponentError::ComponentError;                         \
        const char* kind() const noexcept override { return #Name; }  \
    };

BCFA_DEFINE_COMPONENT_ERROR(ConstantComponentError)
BCFA_DEFINE_COMPONENT_ERROR(NotSurjectiveError)
BCFA_DEFINE_COMPONENT_ERROR(NotBijectiveError)
BCFA_DEFINE_COMPONENT_ERROR(NotAGraphError)

#undef BCFA_DEFINE_COMPONENT_ERROR

/// Two sets meet in one idempotent component; `witness` is a common point
/// of that component (real coordinates).
class NotDisjointError : public ComponentError {
public:
    NotDisjointError(int component, std::vector<Rational> witness, const std::string& what)
        : ComponentError(component, what), witness_(std::move(witness)) {}
    const char* kind() const noexcept override { return "NotDisjointError"; }
    const std::vector<Rational>& witness() const noexcept { return witness_; }

private:
    std::vector<Rational> witness_;
};

/// A finite family of rectangles leaves a point of the bounding box uncovered.
class NotACoverError : public Error {
public:
    NotACoverError(Rational w1, Rational w2, const std::string& what)
        : Error(what), w1_(std::move(w1)), w2_(std::move(w2)) {}
    const char* kind() const noexcept override { return "NotACoverError"; }
    const Rational& witness_e1() const noexcept { return w1_; }
    const Rational& witness_e2() const noexcept { return w2_; }

private:
    Rational w1_, w2_;
};

}  // namespace bcfa
