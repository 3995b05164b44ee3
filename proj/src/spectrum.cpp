#include "anholonomy/spectrum.hpp"

#include <cmath>

namespace anholonomy {

Label::Label(int n_qubits, unsigned m) : n_qubits(n_qubits), m(m) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw OutOfRangeError("Label: n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                              "]");
    if (m >= (1u << n_qubits))
        throw OutOfRangeError("Label: m = " + std::to_string(m) + " out of range for " +
                              std::to_string(n_qubits) + " qubits");
}

std::vector<int> Label::bits() const {
    std::vector<int> out(n_qubits);
    for (int j = n_qubits; j >= 1; --j) out[n_qubits - j] = bit(j);
    return out;
}

double eigenangle(int n_qubits, const Label& label, double lambda) {
    return eigenangle(n_qubits, label.m, lambda);
}

double eigenangle(int n_qubits, unsigned m, double lambda) {
    return (kTwoPi * m + lambda) / static_cast<double>(1u << n_qubits);
}

ComplexVector one_body_eigenvector(int n, double theta) {
    const double c = std::cos(theta / 4.0);
    const double s = std::sin(theta / 4.0);
    ComplexVector v(2);
    if (n == 0)
        v << Complex(c, 0), Complex(s, 0);
    else
        v << Complex(-s, 0), Complex(c, 0);
    return v;
}

ComplexVector eigenvector(int n_qubits, const Label& label, double lambda) {
    ComplexVector v = one_body_eigenvector(label.bit(1), lambda);
    for (int j = 2; j <= n_qubits; ++j) {
        const unsigned m_below = label.m & ((1u << (j - 1)) - 1u);
        const double theta = eigenangle(j - 1, m_below, lambda);
        v = kron(one_body_eigenvector(label.bit(j), theta), v);
    }
    return v;
}

ComplexVector eigenvector(int n_qubits, unsigned m, double lambda) {
    return eigenvector(n_qubits, Label(n_qubits, m), lambda);
}

ComplexMatrix analytic_basis(int n_qubits, double lambda) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    ComplexMatrix basis(dim, dim);
    for (unsigned m = 0; m < static_cast<unsigned>(dim); ++m)
        basis.col(m) = eigenvector(n_qubits, m, lambda);
    return basis;
}

Successor successor(const Label& label) {
    const unsigned size = label.size();
    const unsigned next = (label.m + 1u) % size;
    const int winding = (label.m == size - 1u) ? 1 : 0;
    return {Label(label.n_qubits, next), winding};
}

Successor successor_bitwise(const Label& label) {
    // N = 1: s(n) = !n, r(n) = n.
    if (label.n_qubits == 1) return {Label(1, label.m ^ 1u), static_cast<int>(label.m & 1u)};

    const int n_top = label.bit(label.n_qubits);
    const unsigned low_mask = (1u << (label.n_qubits - 1)) - 1u;
    const Successor below = successor_bitwise(Label(label.n_qubits - 1, label.m & low_mask));
    // The top quantum number flips exactly when the lower ones all wind,
    // and the full label winds when the top bit is also set.
    const int flip = below.winding;
    const unsigned top_out = static_cast<unsigned>(n_top ^ flip);
    const unsigned next = (top_out << (label.n_qubits - 1)) | below.next.m;
    return {Label(label.n_qubits, next), n_top & below.winding};
}

PermutationRecord permutation_record(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw OutOfRangeError("permutation_record: n_qubits must be in [1, " +
                              std::to_string(kMaxQubits) + "]");
    const unsigned size = 1u << n_qubits;
    PermutationRecord rec;
    rec.n_qubits = n_qubits;
    rec.image.resize(size);
    rec.windings.resize(size);
    for (unsigned m = 0; m < size; ++m) {
        const Successor s = successor(Label(n_qubits, m));
        rec.image[m] = s.next.m;
        rec.windings[m] = s.winding;
    }
    return rec;
}

int sigma_phase(int n_qubits, const Label& label) {
    return sigma_phase(n_qubits, label.m);
}

int sigma_phase(int n_qubits, unsigned m) {
    int sign = (m & 1u) ? -1 : 1;  // sigma(1, n) = (-1)^n
    for (int level = 2; level <= n_qubits; ++level) {
        const unsigned mask = (1u << level) - 1u;
        if ((m & mask) == mask) sign = -sign;  // r at this level is 1
    }
    return sign;
}

int predict_gamma_mp(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw OutOfRangeError("predict_gamma_mp: n_qubits must be in [1, " +
                              std::to_string(kMaxQubits) + "]");
    int product = 1;
    for (unsigned m = 0; m < (1u << n_qubits); ++m) product *= sigma_phase(n_qubits, m);
    return product;
}

}  // namespace anholonomy
