#pragma once

#include <stdexcept>
#include <string>

namespace changhee {

// Base for every error raised by the library. Identity failures are never
// errors; they are reported as data (see identities.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidScale : public Error {
public:
    InvalidScale() : Error("subst_lambda_scaled: scale factor must be nonzero") {}
};

class NonUnit : public Error {
public:
    NonUnit() : Error("egf_reciprocal: constant term is not a nonzero rational") {}
};

class OrderMismatch : public Error {
public:
    OrderMismatch(std::size_t a, std::size_t b)
        : Error("series order mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class CompositionDomain : public Error {
public:
    explicit CompositionDomain(const std::string& where)
        : Error(where + ": inner series must have zero constant term") {}
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

// Two independent routes for the same sequence disagreed.
class CrossCheckFailure : public Error {
public:
    using Error::Error;
};

class NonIntegralTarget : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace changhee
