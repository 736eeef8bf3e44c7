#pragma once

#include <stdexcept>
#include <string>

namespace manakov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments or malformed data (CLI exit code 2).
struct InvalidInputError : Error {
    using Error::Error;
};

struct InvalidProfileError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct RangeError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct DomainError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct ResolutionError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct PoleError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct StabilityError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// Numerical failures (CLI exit code 3).
struct NumericalError : Error {
    using Error::Error;
};

struct SingularMatrixError : NumericalError {
    double abs_det;
    SingularMatrixError(const std::string& msg, double abs_det_)
        : NumericalError(msg), abs_det(abs_det_) {}
};

struct NonGenericDataError : NumericalError {
    double min_abs_det;
    NonGenericDataError(const std::string& msg, double min_abs_det_)
        : NumericalError(msg), min_abs_det(min_abs_det_) {}
};

struct AccuracyError : NumericalError {
    double best_value_re;
    double best_value_im;
    double error_estimate;
    AccuracyError(const std::string& msg, double re, double im, double err)
        : NumericalError(msg), best_value_re(re), best_value_im(im), error_estimate(err) {}
};

}  // namespace manakov
