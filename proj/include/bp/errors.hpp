#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structure-function validation failed. For monotonicity violations the
// witness pair (subset_a ⊂ subset_b with φ(subset_a) > φ(subset_b)) is kept;
// for endpoint violations both witnesses equal the offending subset.
struct NotSemicoherent : Error {
    std::uint32_t witness_a = 0;
    std::uint32_t witness_b = 0;
    NotSemicoherent(const std::string& msg, std::uint32_t a, std::uint32_t b)
        : Error(msg), witness_a(a), witness_b(b) {}
};

struct SizeMismatch : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position = 0;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariable : ParseError {
    using ParseError::ParseError;
};

// j was supplied as a member of A where the ordering functions require j ∉ A.
struct JInA : Error {
    using Error::Error;
};

struct TooManyComponents : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    double achieved_error = 0.0;
    QuadratureFailure(const std::string& msg, double achieved)
        : Error(msg), achieved_error(achieved) {}
};

struct IncompleteTable : Error {
    using Error::Error;
};

struct InconsistentTable : Error {
    using Error::Error;
};

struct TiedLifetimes : Error {
    using Error::Error;
};

struct TieRejectionOverflow : Error {
    using Error::Error;
};

struct MethodUnavailable : Error {
    using Error::Error;
};

struct NotADistribution : Error {
    using Error::Error;
};

// System-spec file problems (missing/ill-typed fields, block mismatches).
struct SpecError : Error {
    using Error::Error;
};

}  // namespace bp
