#pragma once

#include <vector>

#include "anholonomy/types.hpp"

namespace anholonomy {

/// Eigendecomposition of a unitary matrix.
///
/// Column k of `vectors` is the (orthonormal) eigenvector paired with
/// `angles[k]`; angles live in [0, 2*pi) and are sorted ascending.
/// `degenerate[k]` is set when angle k sits within kDegeneracyTol
/// (circular distance) of another eigenangle; the basis is still
/// orthonormal in that case, but gauge-dependent quantities derived
/// from single columns are meaningless and callers must check the flag.
struct EigenSystem {
    Eigen::Index dim = 0;
    std::vector<double> angles;
    ComplexMatrix vectors;
    double residual = 0.0;  // max |U v - e^{i theta} v| over all columns
    std::vector<bool> degenerate;
    bool any_degenerate = false;
};

ComplexMatrix identity(Eigen::Index dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Kronecker product, row-major convention: the LEFT factor is the most
/// significant index block, so kron(A, B)(i_a*rows_b + i_b, j_a*cols_b + j_b)
/// = A(i_a, j_a) * B(i_b, j_b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max absolute entry (the entrywise infinity norm used throughout).
double linf_norm(const ComplexMatrix& a);

/// ||U^dag U - I||_inf
double unitarity_error(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// ||A - A^dag||_inf
double hermiticity_error(const ComplexMatrix& a);

/// Eigendecomposition of a unitary matrix.
///
/// Checks ||u^dag u - I||_inf < tol up front (NotUnitaryError otherwise),
/// then diagonalizes via the Hermitian split C = (u + u^dag)/2,
/// S = (u - u^dag)/(2i): C is diagonalized first and clusters of nearly
/// equal cos(theta) are resolved by diagonalizing S restricted to the
/// cluster. This keeps the basis orthonormal even across exact spectral
/// degeneracies. Eigenvector phases are fixed canonically: the
/// largest-magnitude entry of each column is rotated to be real positive,
/// ties broken by lowest row index.
///
/// Throws NoConvergenceError when the residual contract (kEigResidualTol)
/// cannot be met, which signals pathological input.
EigenSystem eig_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// exp(-i * scale * h) for Hermitian h, computed by eigendecomposition
/// (h = V D V^dag  =>  exp(-i s h) = V exp(-i s D) V^dag).
/// Throws NotHermitianError when ||h - h^dag||_inf >= 1e-10.
ComplexMatrix expm_minus_i(const ComplexMatrix& h, double scale);

/// Reduce an angle to [0, 2*pi).
double wrap_angle(double theta);

/// Signed circular distance from b to a, in (-pi, pi].
double circular_distance(double a, double b);

}  // namespace anholonomy
