#pragma once

#include <stdexcept>
#include <string>

namespace hdiff {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCoprime : Error {
    using Error::Error;
};

struct BoundTooLarge : Error {
    using Error::Error;
};

struct NotPrime : Error {
    using Error::Error;
};

struct NotMersennePrime : Error {
    using Error::Error;
};

/* Raised when an input exceeds the range an exact routine supports
   (e.g. primality beyond 64 bits). */
struct OutOfRange : Error {
    using Error::Error;
};

struct DecodeError : Error {
    DecodeError(std::string where, const std::string& what)
        : Error(where.empty() ? what : where + ": " + what), location(std::move(where)) {}
    std::string location;
};

} // namespace hdiff
