#pragma once

#include <string>
#include <utility>
#include <vector>

#include "anholonomy/qmatrix.hpp"
#include "anholonomy/spectrum.hpp"
#include "anholonomy/tracker.hpp"
#include "anholonomy/types.hpp"

namespace anholonomy {

/// Non-Abelian gauge connection A with entries i<m'; lambda| d/dlambda |m; lambda>
/// in the analytic eigenvector gauge. For this circuit family A is Hermitian,
/// lambda-independent and has zero diagonal (the gauge is parallel), so the
/// holonomy matrix is the single exponential exp(-2*pi*i*A); the diagonal is
/// nevertheless computed and checked so a gauge change fails loudly.
struct GaugeConnection {
    int n_qubits = 1;
    ComplexMatrix matrix;
    std::string gauge_note;
    /// ||(A_raw - A_raw^dag)/2||_inf before Hermitization (finite-difference
    /// route only; zero for the analytic construction).
    double antihermitian_residual = 0.0;
};

/// The two commuting pieces of the connection at recursion level n:
/// first = the top-qubit part Y (x) 1 / 2^{n+1}, second = the conjugated
/// embedding of the (n-1)-qubit connection.
std::pair<ComplexMatrix, ComplexMatrix> connection_components(int n_qubits);

/// Connection built by the level-by-level recursion from A(1) = Y/4.
GaugeConnection connection_analytic(int n_qubits);

/// Connection from central finite differences of the analytic eigenvectors:
/// A(m',m) = i <m'; lambda| (|m; lambda+h> - |m; lambda-h>) / (2h),
/// Hermitized as (A + A^dag)/2 with the discarded anti-Hermitian part
/// recorded as a diagnostic. With richardson set, the O(h^2) error is
/// cancelled by combining steps h and h/2.
GaugeConnection connection_fd(int n_qubits, double lambda, double h = 1e-5,
                              bool richardson = false);

/// M(C) = exp(-2*pi*i * A) for the lambda-independent analytic connection.
ComplexMatrix holonomy_analytic(int n_qubits);

/// Holonomy from the discrete parallel transport of a tracked flow spanning
/// at least one full cycle: M(m', m) = <reference_m' | transported track m>.
ComplexMatrix holonomy_numeric(const SpectralFlow& flow);

/// Product of holonomy entries along the permutation orbit of m0
/// (2^N factors, one full traversal). Throws ZeroEntryError when an orbit
/// entry has magnitude below 0.5, which signals a wrong permutation or
/// broken transport. Start-point independent for a single-cycle permutation.
Complex gamma_mp_from_holonomy(const Label& m0, const ComplexMatrix& holonomy,
                               const std::vector<unsigned>& image);
Complex gamma_mp_from_holonomy(const Label& m0, const ComplexMatrix& holonomy,
                               const PermutationRecord& perm);

}  // namespace anholonomy
