#pragma once

#include <stdexcept>
#include <string>

namespace nel {

/// Failure categories shared by every module. The CLI maps them onto exit codes.
enum class ErrorKind {
    Structural,     ///< incompatible shapes or grids
    Domain,         ///< argument outside the mathematical domain of an operation
    Precondition,   ///< inputs fail a documented residual/consistency check
    Computational,  ///< solver failure, non-convergence, blow-up
    Validation,     ///< configuration or command-line problem
    Io              ///< file system or format problem
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& what) : Error(ErrorKind::Structural, what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class ComputationalError : public Error {
public:
    explicit ComputationalError(const std::string& what) : Error(ErrorKind::Computational, what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace nel
