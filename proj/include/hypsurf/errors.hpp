#pragma once

#include <stdexcept>
#include <string>

namespace hypsurf {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic between values living in different quadratic fields.
struct FieldMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

// An operation received structurally sound data that violates its domain
// (duplicate circle positions, non-vertex start point, ...).
struct DomainError : Error {
    using Error::Error;
};

// Surface-level geometry problems: invalid nets, bad cuts, bad shears.
struct GeometryError : Error {
    using Error::Error;
};

struct GluingError : Error {
    using Error::Error;
};

struct InvolutionError : Error {
    using Error::Error;
};

struct NotHyperellipticError : Error {
    using Error::Error;
};

// Block construction preconditions (rational twist parameter, n out of range).
struct BlockError : Error {
    using Error::Error;
};

// Diagram construction / realization preconditions.
struct DiagramError : Error {
    using Error::Error;
};

struct CertificateError : Error {
    using Error::Error;
};

}  // namespace hypsurf
