#pragma once
#include <stdexcept>
#include <string>

namespace elastica {

/// Argument outside the domain of a function.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Integral or series diverges at the requested argument (e.g. K(1)).
struct DivergenceError : std::domain_error {
    explicit DivergenceError(const std::string& what) : std::domain_error(what) {}
};

/// Operation is not defined on the stratum of the given covector.
struct UnsupportedStratum : std::domain_error {
    explicit UnsupportedStratum(const std::string& what) : std::domain_error(what) {}
};

/// Iterative method ran out of iterations or failed to bracket.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace elastica
