#include "anholonomy/circuit.hpp"

#include <cmath>
#include <utility>

namespace anholonomy {

ComplexVector ket_y() {
    ComplexVector v(2);
    const double s = 1.0 / std::sqrt(2.0);
    v << Complex(s, 0), Complex(0, -s);
    return v;
}

ComplexMatrix phase_shift(double lambda) {
    const ComplexVector y = ket_y();
    const ComplexMatrix proj = y * y.adjoint();
    return ComplexMatrix::Identity(2, 2) + (std::exp(Complex(0, lambda)) - 1.0) * proj;
}

ComplexMatrix controlled_y(const ComplexMatrix& u) {
    if (!is_unitary(u, 1e-10))
        throw NotUnitaryError("controlled_y: control target is not unitary");
    const ComplexVector y = ket_y();
    const ComplexMatrix proj = y * y.adjoint();
    const ComplexMatrix rest = ComplexMatrix::Identity(2, 2) - proj;
    return kron(rest, ComplexMatrix::Identity(u.rows(), u.rows())) + kron(proj, u);
}

ComplexMatrix d_op(const ComplexMatrix& u) {
    return controlled_y(u) * kron(pauli_z(), ComplexMatrix::Identity(u.rows(), u.rows()));
}

ComplexMatrix build_circuit(int n_qubits, double lambda) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw OutOfRangeError("build_circuit: n_qubits must be in [1, " +
                              std::to_string(kMaxQubits) + "]");
    ComplexMatrix u = phase_shift(lambda) * pauli_z();
    for (int level = 2; level <= n_qubits; ++level) u = d_op(u);
    return u;
}

CircuitSpec CircuitSpec::standard(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw OutOfRangeError("CircuitSpec::standard: n_qubits must be in [1, " +
                              std::to_string(kMaxQubits) + "]");
    return {n_qubits, [n_qubits](double lambda) { return build_circuit(n_qubits, lambda); }};
}

CircuitSpec CircuitSpec::noninteracting_pair() {
    return {2, [](double lambda) {
                const ComplexMatrix u = build_circuit(1, lambda);
                return kron(u, u);
            }};
}

CircuitSpec CircuitSpec::constant(int n_qubits, ComplexMatrix u) {
    if (!is_unitary(u, 1e-10))
        throw NotUnitaryError("CircuitSpec::constant: matrix is not unitary");
    return {n_qubits, [m = std::move(u)](double) { return m; }};
}

}  // namespace anholonomy
