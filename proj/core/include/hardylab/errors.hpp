#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition.
struct ParameterError : Error {
    using Error::Error;
};

/// Point outside the domain, or evaluation on the ridge set.
struct DomainError : Error {
    using Error::Error;
};

/// Non-integrable exponent combination detected before quadrature.
struct DivergenceError : Error {
    using Error::Error;
};

/// Quadrature or eigen iteration failed to converge.
struct NumericError : Error {
    double achieved = 0.0;
    NumericError(const std::string& what, double achieved_err)
        : Error(what), achieved(achieved_err) {}
    explicit NumericError(const std::string& what) : Error(what) {}
};

/// Unknown registry id or violated registry hypothesis.
struct RegistryError : Error {
    using Error::Error;
};

/// Malformed experiment configuration.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace hardylab
