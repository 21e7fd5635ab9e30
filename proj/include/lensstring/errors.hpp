#pragma once

#include <stdexcept>
#include <string>

namespace lensstring {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched group order or coefficient modulus between operands.
struct DimensionError : Error {
    using Error::Error;
};

/// Illegal coefficient coercion (target modulus must divide the source one).
struct ModulusError : Error {
    using Error::Error;
};

/// Argument outside its mathematical domain (l = 0, gcd(k,n) != 1, m < 0, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Inversion failed; `certificate` describes the singular stage of the
/// circulant linear system.
struct NotInvertibleError : Error {
    explicit NotInvertibleError(const std::string& msg, std::string cert)
        : Error(msg), certificate(std::move(cert)) {}
    std::string certificate;
};

/// Torsion expression whose polynomial division leaves a remainder.
struct InvalidTorsionExpression : Error {
    using Error::Error;
};

/// Operation requested outside the degrees this library computes.
struct NotImplementedError : Error {
    using Error::Error;
};

}  // namespace lensstring
