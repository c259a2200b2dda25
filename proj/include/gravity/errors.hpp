#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gravity {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vector was required to lie in the span of a basis but does not.
// When raised from a composition pipeline this signals a violated
// mathematical invariant upstream (a composite leaving ker Delta).
struct NotInSpan : Error {
    using Error::Error;
};

struct AmbientMismatch : Error {
    using Error::Error;
};

// w(a,a) is not a generator.
struct InvalidGenerator : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct LabelOutOfRange : Error {
    using Error::Error;
};

// Residues are only defined on Delta*-closed classes.
struct NotDeltaClosed : Error {
    using Error::Error;
};

struct ZeroScalar : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t at) : Error(what), offset(at) {}
};

}  // namespace gravity
