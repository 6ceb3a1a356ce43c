#pragma once

#include <stdexcept>
#include <string>

namespace dicyclic {

/// Invalid group parameter, or elements of different groups mixed together.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the domain of an operation (e.g. fixed points of the identity).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A signature whose Riemann-Hurwitz genus is negative or non-integral.
class InadmissibleSignature : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bounded search ran out of candidates without finding a witness.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Point sampling failed to find admissible points within its retry budget.
class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction produced data violating its own invariants. Signals a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace dicyclic
