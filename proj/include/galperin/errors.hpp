#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace galperin {

/// Base class for all library errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (mass ratio, flags).
struct ParseError : Error {
    using Error::Error;
};

/// Argument outside an operation's domain (alpha > 1 at the predictor,
/// irrational sqrt(alpha) in the exact field, absent trace).
struct DomainError : Error {
    using Error::Error;
};

/// Exact backend refused the mass ratio under the feasibility cutoff.
struct CutoffError : Error {
    using Error::Error;
};

/// A run exceeded its budget (event cap or exact-numerator digit cap).
/// Carries the number of collisions completed before the stop.
struct ResourceError : Error {
    ResourceError(const std::string& what, std::uint64_t events)
        : Error(what), events_reached(events) {}
    std::uint64_t events_reached;
};

/// Non-finite value appeared in the floating-point field.
struct NumericError : Error {
    NumericError(const std::string& what, std::uint64_t events)
        : Error(what), events_reached(events) {}
    std::uint64_t events_reached;
};

/// The boundary guard could not separate 2*pi/theta from an integer even at
/// maximum escalated precision. Carries the enclosing interval.
struct AmbiguousBoundaryError : DomainError {
    AmbiguousBoundaryError(const std::string& what, double lo, double hi)
        : DomainError(what), lower(lo), upper(hi) {}
    double lower;
    double upper;
};

}  // namespace galperin
