#include "anholonomy/holonomy.hpp"

#include <cmath>

namespace anholonomy {

namespace {

const char* kGaugeNote =
    "analytic one-body eigenvector gauge (real vectors, zero-diagonal connection)";

ComplexMatrix quantum_number_diagonal(int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    ComplexMatrix j = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index m = 0; m < dim; ++m) j(m, m) = static_cast<double>(m);
    return j;
}

}  // namespace

std::pair<ComplexMatrix, ComplexMatrix> connection_components(int n_qubits) {
    if (n_qubits < 2 || n_qubits > kMaxQubits)
        throw OutOfRangeError("connection_components: n_qubits must be in [2, " +
                              std::to_string(kMaxQubits) + "]");
    const Eigen::Index half = Eigen::Index{1} << (n_qubits - 1);
    const ComplexMatrix top =
        kron(pauli_y(), ComplexMatrix::Identity(half, half)) / std::pow(2.0, n_qubits + 1);

    const ComplexMatrix a_prev = connection_analytic(n_qubits - 1).matrix;
    const double scale = kPi / std::pow(2.0, n_qubits);
    // W = exp(+i * pi * 2^-n * Y (x) J_D)
    const ComplexMatrix w = expm_minus_i(kron(pauli_y(), quantum_number_diagonal(n_qubits - 1)),
                                         -scale);
    const ComplexMatrix lower = w * kron(ComplexMatrix::Identity(2, 2), a_prev) * w.adjoint();
    return {top, lower};
}

GaugeConnection connection_analytic(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw OutOfRangeError("connection_analytic: n_qubits must be in [1, " +
                              std::to_string(kMaxQubits) + "]");
    GaugeConnection conn;
    conn.n_qubits = n_qubits;
    conn.gauge_note = kGaugeNote;
    if (n_qubits == 1) {
        conn.matrix = pauli_y() / 4.0;
        return conn;
    }
    const auto [top, lower] = connection_components(n_qubits);
    conn.matrix = top + lower;
    return conn;
}

GaugeConnection connection_fd(int n_qubits, double lambda, double h, bool richardson) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw OutOfRangeError("connection_fd: n_qubits must be in [1, " +
                              std::to_string(kMaxQubits) + "]");
    if (h < 1e-7 || h > 1e-2)
        throw OutOfRangeError("connection_fd: h must be in [1e-7, 1e-2]");

    auto central = [&](double step) {
        const ComplexMatrix basis = analytic_basis(n_qubits, lambda);
        const ComplexMatrix plus = analytic_basis(n_qubits, lambda + step);
        const ComplexMatrix minus = analytic_basis(n_qubits, lambda - step);
        return ComplexMatrix(Complex(0, 1) * basis.adjoint() * (plus - minus) / (2.0 * step));
    };

    ComplexMatrix raw = central(h);
    if (richardson) raw = (4.0 * central(h / 2.0) - raw) / 3.0;

    GaugeConnection conn;
    conn.n_qubits = n_qubits;
    conn.gauge_note = kGaugeNote;
    conn.antihermitian_residual = linf_norm((raw - raw.adjoint()) / 2.0);
    conn.matrix = (raw + raw.adjoint()) / 2.0;
    return conn;
}

ComplexMatrix holonomy_analytic(int n_qubits) {
    return expm_minus_i(connection_analytic(n_qubits).matrix, kTwoPi);
}

ComplexMatrix holonomy_numeric(const SpectralFlow& flow) {
    return extract_cycle(flow).holonomy;
}

Complex gamma_mp_from_holonomy(const Label& m0, const ComplexMatrix& holonomy,
                               const std::vector<unsigned>& image) {
    const unsigned size = m0.size();
    if (holonomy.rows() != static_cast<Eigen::Index>(size) ||
        holonomy.cols() != static_cast<Eigen::Index>(size) || image.size() != size)
        throw OutOfRangeError("gamma_mp_from_holonomy: dimension mismatch");

    Complex product(1.0, 0.0);
    unsigned m = m0.m;
    for (unsigned step = 0; step < size; ++step) {
        const unsigned next = image.at(m);
        const Complex entry = holonomy(next, m);
        if (std::abs(entry) < 0.5)
            throw ZeroEntryError("gamma_mp_from_holonomy: orbit entry |M(" +
                                 std::to_string(next) + "," + std::to_string(m) + ")| = " +
                                 std::to_string(std::abs(entry)) +
                                 " < 0.5 (wrong permutation or broken transport)");
        product *= entry;
        m = next;
    }
    return product;
}

Complex gamma_mp_from_holonomy(const Label& m0, const ComplexMatrix& holonomy,
                               const PermutationRecord& perm) {
    return gamma_mp_from_holonomy(m0, holonomy, perm.image);
}

}  // namespace anholonomy
