#pragma once

#include <stdexcept>
#include <string>

namespace skewhad {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAUnit : Error {
    using Error::Error;
};

// Thrown when some H-orbit equals its own negation; such (n, H) cannot carry
// the negation-paired indexing and therefore no skew block of this form.
struct SelfNegativeOrbit : Error {
    using Error::Error;
};

struct ModulusMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct OrderMismatch : Error {
    using Error::Error;
};

struct InfeasibleCardinals : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace skewhad
