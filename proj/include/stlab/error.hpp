#pragma once

#include <stdexcept>
#include <string>

namespace stlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingMismatch : Error {
    using Error::Error;
};

struct NonUnit : Error {
    using Error::Error;
};

struct Unsupported : Error {
    using Error::Error;
};

struct PreconditionFailed : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InsufficientExponent : Error {
    using Error::Error;
};

struct NotSymbolProduct : Error {
    using Error::Error;
};

struct CertificateMissing : Error {
    using Error::Error;
};

}  // namespace stlab
