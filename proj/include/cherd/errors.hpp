#pragma once

#include <stdexcept>
#include <string>

namespace cherd {

// Thrown when an exact polynomial division leaves a nonzero remainder.
// Upstream this usually means a violated identity, not a bad input.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by RatFunc::to_poly when the denominator is not a unit.
struct NotPolynomial : std::runtime_error {
    explicit NotPolynomial(const std::string& what) : std::runtime_error(what) {}
};

struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// A paper identity that the code verifies on the fly failed to hold.
struct IdentityViolation : std::logic_error {
    explicit IdentityViolation(const std::string& what) : std::logic_error(what) {}
};

// A defining relation of the algebra failed as a matrix identity.
struct RelationViolation : std::logic_error {
    explicit RelationViolation(const std::string& what) : std::logic_error(what) {}
};

// The graded character solve has no nonnegative integer solution.
struct InconsistentSystem : std::logic_error {
    explicit InconsistentSystem(const std::string& what) : std::logic_error(what) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A validated data file fails one of its named invariants.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& check, const std::string& detail)
        : std::runtime_error(check + ": " + detail), check_name(check) {}
    std::string check_name;
};

struct MissingData : std::runtime_error {
    explicit MissingData(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cherd
