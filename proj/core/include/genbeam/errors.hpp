#ifndef GENBEAM_ERRORS_HPP
#define GENBEAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace genbeam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument or parameter lies outside the documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A square root argument fell on the closed negative real axis.
class BranchCutError : public Error {
public:
    using Error::Error;
};

/// A series or continued fraction did not converge within its term budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace genbeam

#endif // GENBEAM_ERRORS_HPP
