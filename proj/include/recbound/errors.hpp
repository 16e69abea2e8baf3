#pragma once

#include <stdexcept>
#include <string>

namespace recbound {

/// Base class of every error the library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

/// Factorization request above the configured degree cap.
struct DegreeCapExceeded : Error {
    using Error::Error;
};

/// Window passed to algebraic_from_root holds zero or several roots.
struct AmbiguousWindow : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// Binary field operation on elements of different number fields.
struct GeneratorMismatch : Error {
    using Error::Error;
};

struct ZeroArgument : Error {
    using Error::Error;
};

/// Dominant root complex, non-simple, or moduli tied/inseparable.
struct NoDominantRoot : Error {
    using Error::Error;
};

struct ZeroDominantCoefficient : Error {
    using Error::Error;
};

struct NoCommonBase : Error {
    using Error::Error;
};

struct HintInvalid : Error {
    using Error::Error;
};

struct HypothesesViolated : Error {
    using Error::Error;
};

}  // namespace recbound
