#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad file syntax, out-of-range endpoints, self-loops,
/// invalid generator parameters.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

/// An operation was called outside its contract (e.g. disconnected input
/// where a connected graph is required, complete graph where a separator
/// is required).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// The input graph is not in the class an operation needs (non-chordal,
/// non-split, non-quasi-threshold).
class ClassificationError : public Error {
public:
    explicit ClassificationError(const std::string& msg) : Error(msg) {}
};

/// The eigensolver failed to converge or to meet its residual bound.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

} // namespace chordal
