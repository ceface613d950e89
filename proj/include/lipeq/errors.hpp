#pragma once

#include <stdexcept>
#include <string>

namespace lipeq {

// Domain errors thrown by the library. All derive from Error so callers can
// distinguish library failures from programming errors (std::logic_error etc.).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivideByZero : Error {
    DivideByZero() : Error("division by the zero polynomial") {}
};

struct NotDivisible : Error {
    NotDivisible() : Error("polynomial division leaves a nonzero remainder") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct RootCountNotOne : Error {
    explicit RootCountNotOne(int n)
        : Error("interval contains " + std::to_string(n) + " roots, expected exactly 1") {}
};

struct UnsupportedIndex : Error {
    explicit UnsupportedIndex(long long n)
        : Error("cyclotomic index " + std::to_string(n) + " out of supported range") {}
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct BadOrdering : Error {
    using Error::Error;
};

struct ExceptionalContractViolated : Error {
    using Error::Error;
};

struct KraftViolation : Error {
    using Error::Error;
};

struct ValueAbsent : Error {
    using Error::Error;
};

struct PatternAbsent : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct CertificateError : Error {
    using Error::Error;
};

}  // namespace lipeq
