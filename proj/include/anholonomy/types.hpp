#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace anholonomy {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 10;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Tolerance below which two eigenangles (circular distance) count as degenerate.
inline constexpr double kDegeneracyTol = 1e-8;

/// Residual bound every EigenSystem must satisfy: max |U v - e^{i theta} v|.
inline constexpr double kEigResidualTol = 1e-10;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotUnitaryError : Error {
    using Error::Error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

struct NoConvergenceError : Error {
    using Error::Error;
};

struct OutOfRangeError : Error {
    using Error::Error;
};

/// Best squared overlap at a continuation step fell below the match floor.
struct AmbiguousMatchError : Error {
    using Error::Error;
};

/// Two eigenangles collided within tolerance at a grid point.
struct DegeneracyEncounteredError : Error {
    DegeneracyEncounteredError(const std::string& msg, double lambda, int grid_index)
        : Error(msg), lambda(lambda), grid_index(grid_index) {}
    double lambda;
    int grid_index;
};

struct NonBijectiveError : Error {
    using Error::Error;
};

struct ZeroEntryError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace anholonomy
