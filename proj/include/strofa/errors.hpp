#pragma once

#include <stdexcept>
#include <string>

namespace strofa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EncodingError : Error {
    using Error::Error;
};

// Unreadable file, or a malformed record in strict mode.
struct LoadError : Error {
    using Error::Error;
};

struct NoVowelError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct EmptyLineError : Error {
    using Error::Error;
};

struct EmptyPoemError : Error {
    using Error::Error;
};

// Brute-force enumeration would exceed the configured cap.
struct CapError : Error {
    using Error::Error;
};

// Zero-variance or mismatched inputs to a statistic.
struct DegenerateInputError : Error {
    using Error::Error;
};

}  // namespace strofa
