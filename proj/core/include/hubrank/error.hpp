#pragma once

#include <stdexcept>
#include <string>

namespace hubrank {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input data (files, streams).
class InputError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied parameter is outside its valid range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An iterative method failed to converge or produced non-finite values.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace hubrank
