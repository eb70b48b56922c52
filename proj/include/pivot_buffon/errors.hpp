#pragma once

#include <stdexcept>
#include <string>

namespace pivot_buffon {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map the whole family onto one exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A needle with a + b == 0.
class DegenerateNeedleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The hit-probability formulas are only valid when a + b <= d.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// An iterative numerical method hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A result drifted outside the tolerance that the formulas guarantee.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

class InvalidConfigError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Expected counts are too small for the chi-square approximation.
class InsufficientCountsError : public Error {
public:
    using Error::Error;
};

/// A category with zero probability was passed to the three-category test.
class CategoryCollapseError : public Error {
public:
    using Error::Error;
};

}  // namespace pivot_buffon
