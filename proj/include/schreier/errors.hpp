#pragma once

#include <stdexcept>
#include <string>

namespace schreier {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration/support/generator cap was exceeded. Raise the cap in the
/// config if the instance is genuinely wanted.
struct CapExceeded : Error {
    using Error::Error;
};

/// The supplied prefix is too short to complete the requested block(s).
struct PrefixExhausted : Error {
    using Error::Error;
};

/// Niceness pre-check failed on the relevant truncation.
struct NotNice : Error {
    using Error::Error;
};

struct MalformedDecomposition : Error {
    using Error::Error;
};

struct EmptyFamily : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Precondition violation on a domain value (e.g. left subtraction with
/// g > x, fundamental sequence of a successor).
struct DomainError : Error {
    using Error::Error;
};

} // namespace schreier
