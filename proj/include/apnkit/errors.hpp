#pragma once

#include <stdexcept>
#include <string>

namespace apnkit {

// Argument outside an operation's stated domain.
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// gcd(a, m) != 1, so no modular inverse exists.
struct NotInvertibleError : std::domain_error {
    explicit NotInvertibleError(const std::string& msg) : std::domain_error(msg) {}
};

// A family constraint admits no integral exponent for the given parameters.
struct NoSolutionError : std::domain_error {
    explicit NoSolutionError(const std::string& msg) : std::domain_error(msg) {}
};

// Input exceeds a guard that keeps exhaustive sweeps desk-sized.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace apnkit
