#ifndef SEQACC_ERRORS_HPP
#define SEQACC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seqacc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical degeneracy: division by an exact zero, zero remainder
/// estimate, vanishing denominator in a scalar-level computation,
/// non-convergent quadrature.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(what) {}
};

/// Malformed or insufficient input data: window too short for the
/// requested order, missing terms, unparsable values.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// Invalid configuration: bad parameter combinations, out-of-range
/// transformation parameters.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace seqacc

#endif
