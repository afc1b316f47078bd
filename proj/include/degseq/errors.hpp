#pragma once

#include <stdexcept>
#include <string>

namespace degseq {

struct EmptySequence : std::invalid_argument {
    EmptySequence() : std::invalid_argument("degree sequence is empty") {}
};

struct NonPositiveDegree : std::invalid_argument {
    explicit NonPositiveDegree(long long value)
        : std::invalid_argument("degree sequence contains non-positive entry " +
                                std::to_string(value)) {}
};

struct OddTotalDegree : std::invalid_argument {
    explicit OddTotalDegree(long long total)
        : std::invalid_argument("total degree " + std::to_string(total) + " is odd") {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& where)
        : std::domain_error("division by zero in " + where) {}
};

// Thrown when a method's preconditions fail and evaluation was not forced.
// `inequality` spells out the first check that failed, e.g. "M2 <= M1^(9/8)".
struct HypothesisViolation : std::runtime_error {
    std::string inequality;
    explicit HypothesisViolation(std::string ineq)
        : std::runtime_error("hypothesis violated: " + ineq), inequality(std::move(ineq)) {}
};

struct OracleTooLarge : std::length_error {
    explicit OracleTooLarge(long long m1, long long limit)
        : std::length_error("exhaustive enumeration requires M1 <= " + std::to_string(limit) +
                            ", got M1 = " + std::to_string(m1)) {}
};

// A switching specification that is inconsistent with the pairing it is
// applied to (wrong multiplicity, points not in the stated bins, aux pairs
// overlapping the target pairs, ...).  Distinct from a condition violation:
// a mismatched switch is malformed, a violating one is well-formed but bad.
struct SwitchMismatch : std::invalid_argument {
    explicit SwitchMismatch(const std::string& what)
        : std::invalid_argument("switch does not match pairing: " + what) {}
};

struct InvalidSignature : std::invalid_argument {
    explicit InvalidSignature(const std::string& what)
        : std::invalid_argument("invalid signature matrix: " + what) {}
};

struct InvalidFamilyParams : std::invalid_argument {
    explicit InvalidFamilyParams(const std::string& what)
        : std::invalid_argument("invalid family parameters: " + what) {}
};

// Malformed input from the outside world (sequence files, CLI expressions).
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace degseq
