#pragma once

#include <stdexcept>
#include <string>

namespace splitkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments, dimension mismatches, observables incompatible with a
// problem kind, and similar caller mistakes.
struct InvalidInputError : Error {
    using Error::Error;
};

// An iterative kernel failed to converge within its cap.
struct NumericError : Error {
    NumericError(const std::string& msg, int iterations_done)
        : Error(msg), iterations(iterations_done) {}
    int iterations = 0;
};

// An eigenvalue sits too close to the closed negative real axis, so the
// principal logarithm is not defined (the step size is too large for
// backward-error analysis).
struct BranchCutError : Error {
    using Error::Error;
};

// Eigenvalue clustering is ambiguous: some eigenvalue falls in the dead zone
// between cluster_tol and 10*cluster_tol.
struct ClusteringError : Error {
    using Error::Error;
};

struct CatalogError : Error {
    using Error::Error;
};

struct GenerationError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct FitError : Error {
    using Error::Error;
};

struct UnsupportedError : Error {
    using Error::Error;
};

} // namespace splitkit
