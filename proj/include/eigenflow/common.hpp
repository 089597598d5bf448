#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigenflow {

using Complex = std::complex<double>;

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations: bad degree, unknown family, malformed input.
struct InvalidArgument : Error {
    using Error::Error;
};

// Parameter outside its declared range (e.g. homotopy t outside [0,1]).
struct RangeError : Error {
    using Error::Error;
};

// Evaluation at a point where the map is undefined (z = 0, z = center).
struct SingularityError : Error {
    using Error::Error;
};

// Iterative solve did not reach tolerance; carries the worst residual seen.
struct ConvergenceError : Error {
    double worst_residual;
    ConvergenceError(const std::string& msg, double worst)
        : Error(msg), worst_residual(worst) {}
};

// Least-squares failure; carries the best parameters found so far.
struct FitError : Error {
    std::vector<double> best_params;
    double best_sse;
    FitError(const std::string& msg, std::vector<double> params, double sse)
        : Error(msg), best_params(std::move(params)), best_sse(sse) {}
};

}  // namespace eigenflow
