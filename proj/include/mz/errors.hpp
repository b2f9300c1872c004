#pragma once

#include <stdexcept>
#include <string>

namespace mz {

// Construction preconditions and arithmetic failures are reported by type so
// callers can tell a caller bug (invalid_argument) from a broken identity
// (NonExactDivision is fatal for the family constructions).

struct VariableMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonExactDivision : std::domain_error {
    using std::domain_error::domain_error;
};

struct ZeroPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonzeroConstantRequired : std::domain_error {
    using std::domain_error::domain_error;
};

struct PrimeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct LeadingCoefficientVanishes : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleEncountered : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoFixedPointMatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Timeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mz
