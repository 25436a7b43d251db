#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootform {

/// Base of all library errors. `name()` is a stable identifier (the CLI
/// prints it and maps it onto an exit code).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Mathematical obstruction or domain violation: the input is readable but
/// the requested construction does not apply to it. CLI exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input: shape mismatches, unparsable files, bad argument lists.
/// CLI exit code 1.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// ---- concrete domain errors -------------------------------------------------

class NotSymmetricError : public DomainError {
public:
    explicit NotSymmetricError(const std::string& what = "matrix is not symmetric")
        : DomainError("NotSymmetric", what) {}
};

class NotOrthogonalError : public DomainError {
public:
    explicit NotOrthogonalError(const std::string& what = "matrix is not orthogonal")
        : DomainError("NotOrthogonal", what) {}
};

class NotInvolutoryError : public DomainError {
public:
    explicit NotInvolutoryError(const std::string& what = "matrix is not involutory")
        : DomainError("NotInvolutory", what) {}
};

class NotIdempotentError : public DomainError {
public:
    explicit NotIdempotentError(const std::string& what = "matrix is not idempotent")
        : DomainError("NotIdempotent", what) {}
};

class SingularError : public DomainError {
public:
    explicit SingularError(std::size_t pivot_index)
        : DomainError("Singular",
                      "matrix is singular (pivot " + std::to_string(pivot_index) + " below threshold)"),
          pivot_index_(pivot_index) {}

    std::size_t pivot_index() const noexcept { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

class NoConvergenceError : public DomainError {
public:
    explicit NoConvergenceError(std::size_t sweeps)
        : DomainError("NoConvergence",
                      "Jacobi iteration did not converge within " + std::to_string(sweeps) + " sweeps"),
          sweeps_(sweeps) {}

    std::size_t sweeps() const noexcept { return sweeps_; }

private:
    std::size_t sweeps_;
};

/// A negative eigenvalue (or -1 canonical block) occurs an odd number of
/// times; none of the real-root constructions applies.
class OddNegativeMultiplicityError : public DomainError {
public:
    OddNegativeMultiplicityError(double eigenvalue, std::size_t count)
        : DomainError("OddNegativeMultiplicity",
                      "eigenvalue " + std::to_string(eigenvalue) + " has odd multiplicity " +
                          std::to_string(count)),
          eigenvalue_(eigenvalue), count_(count) {}

    double eigenvalue() const noexcept { return eigenvalue_; }
    std::size_t count() const noexcept { return count_; }

private:
    double eigenvalue_;
    std::size_t count_;
};

/// An eigenvalue sits on the fence of the negativity threshold; its sign
/// cannot be decided at the configured pair tolerance.
class ClusterAmbiguousError : public DomainError {
public:
    explicit ClusterAmbiguousError(double eigenvalue)
        : DomainError("ClusterAmbiguous",
                      "eigenvalue " + std::to_string(eigenvalue) +
                          " is indistinguishable from the negativity threshold"),
          eigenvalue_(eigenvalue) {}

    double eigenvalue() const noexcept { return eigenvalue_; }

private:
    double eigenvalue_;
};

class SingularBlockError : public DomainError {
public:
    explicit SingularBlockError(char which)
        : DomainError("SingularBlock", std::string("block '") + which + "' is singular"),
          which_(which) {}

    char which() const noexcept { return which_; } // 'a' or 'd'

private:
    char which_;
};

class SingularSchurError : public DomainError {
public:
    explicit SingularSchurError(char which)
        : DomainError("SingularSchur",
                      std::string("Schur complement for '") + which + "' is singular"),
          which_(which) {}

    char which() const noexcept { return which_; } // 's' or 't'

private:
    char which_;
};

class DegenerateParametersError : public DomainError {
public:
    explicit DegenerateParametersError(const std::string& what)
        : DomainError("DegenerateParameters", what) {}
};

// ---- concrete input errors --------------------------------------------------

class DimensionMismatchError : public InvalidInput {
public:
    explicit DimensionMismatchError(const std::string& what)
        : InvalidInput("DimensionMismatch", what) {}
};

class ParseError : public InvalidInput {
public:
    explicit ParseError(const std::string& what) : InvalidInput("ParseError", what) {}
};

} // namespace rootform
