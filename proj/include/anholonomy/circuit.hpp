#pragma once

#include <functional>

#include "anholonomy/qmatrix.hpp"
#include "anholonomy/types.hpp"

namespace anholonomy {

/// A parametric family of unitaries lambda -> U(lambda) on n_qubits.
///
/// Builders are pure functions of lambda; the families used here satisfy
/// builder(lambda + 2*pi) == builder(lambda) entrywise, which is a tested
/// property, not something enforced by range reduction inside the builder.
struct CircuitSpec {
    int n_qubits = 1;
    std::function<ComplexMatrix(double)> builder;

    Eigen::Index dim() const { return Eigen::Index{1} << n_qubits; }

    /// The recursive n-qubit family built by build_circuit.
    static CircuitSpec standard(int n_qubits);

    /// Two non-interacting copies of the one-qubit circuit,
    /// lambda -> u(lambda) (x) u(lambda). Its spectrum is degenerate for
    /// every lambda, which destroys the anholonomy (negative control).
    static CircuitSpec noninteracting_pair();

    /// lambda-independent family (useful as a trivial control).
    static CircuitSpec constant(int n_qubits, ComplexMatrix u);
};

/// |y> = (|0> - i|1>)/sqrt(2), the -1 eigenvector of Pauli Y.
ComplexVector ket_y();

/// Phase-shift gate about the y axis: exp(i*lambda*|y><y|).
/// Closed form I + (e^{i lambda} - 1)|y><y| since |y><y| is a rank-1 projector.
ComplexMatrix phase_shift(double lambda);

/// Controlled unitary with the control axis along y:
/// (1 - |y><y|) (x) 1 + |y><y| (x) u. The control qubit is the most
/// significant tensor factor. Throws NotUnitaryError for non-unitary u.
ComplexMatrix controlled_y(const ComplexMatrix& u);

/// D[u] = controlled_y(u) * (Z (x) 1): appends a control qubit on top.
ComplexMatrix d_op(const ComplexMatrix& u);

/// The recursive n-qubit circuit:
///   U(1, lambda) = phase_shift(lambda) * Z
///   U(n, lambda) = D[U(n-1, lambda)]
///
/// Qubit ordering: the qubit added last (at recursion level n) is the MOST
/// significant tensor factor, so the quantum-number tuple (n_N, ..., n_1)
/// concatenates to the binary expansion of the principal quantum number m.
/// Requires 1 <= n <= kMaxQubits.
ComplexMatrix build_circuit(int n_qubits, double lambda);

}  // namespace anholonomy
