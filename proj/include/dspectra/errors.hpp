#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dspectra {

// Base class for all library errors. Subclasses map 1:1 onto the failure
// modes the CLI turns into exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A size/count argument is out of its documented range (n < 3 for cycles, ...).
class SizeError : public Error {
public:
    using Error::Error;
};

// Operation needs at least one edge (line graph, incidence, subdivision).
class NoEdgesError : public Error {
public:
    using Error::Error;
};

class EmptyListError : public Error {
public:
    using Error::Error;
};

// Distances are undefined on a disconnected graph.
class DisconnectedError : public Error {
public:
    using Error::Error;
};

// Eigensolver failed to reach tolerance inside its sweep budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Polynomial root finder produced a root with a non-negligible imaginary part.
class ComplexRootError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

// Spectral data fails its internal consistency requirements (sigma_1 vs row sum).
class AlignmentError : public Error {
public:
    using Error::Error;
};

// A closed-form route was requested for inputs that violate its preconditions.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// No closed-form template covers the construction, or the template disagrees
// with the measured distances.
class TemplateMismatchError : public Error {
public:
    using Error::Error;
};

class FamilySizeError : public Error {
public:
    using Error::Error;
};

// Syntax error in the graph expression language.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t offset, std::string expected)
        : Error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_ = 0;
    std::string expected_;
};

} // namespace dspectra
