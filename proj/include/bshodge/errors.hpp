#pragma once

#include <stdexcept>
#include <string>

namespace bshodge {

/// Base class for all engine errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input (zero polynomial where nonzero required, signature
/// mismatch, missing Groebner basis, ...).
struct invalid_input : error {
    using error::error;
};

/// Expression or config text that does not match the grammar.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// A stated hypothesis fails or a required assertion is missing
/// (root window violated, no Euler field at the bound, incomplete
/// annihilator detected by root sanity, ...).
struct hypothesis_violation : error {
    using error::error;
};

/// A truncated oracle computation did not stabilise at the given budget.
struct budget_inconclusive : error {
    using error::error;
};

/// Two routes that must agree disagreed, or a certificate failed to
/// verify. Always a bug or a silent hypothesis failure; never ignored.
struct internal_inconsistency : error {
    using error::error;
};

}  // namespace bshodge
