#pragma once

#include <vector>

#include "anholonomy/qmatrix.hpp"
#include "anholonomy/types.hpp"

namespace anholonomy {

/// Quantum-number tuple (n_N, ..., n_1) identified with the principal
/// quantum number m = sum_j 2^{j-1} n_j. Bit j (1-indexed, j=1 least
/// significant) is the quantum number of the qubit added at recursion
/// level j; the top bit n_N belongs to the most significant tensor factor.
struct Label {
    int n_qubits = 1;
    unsigned m = 0;

    Label() = default;
    Label(int n_qubits, unsigned m);

    unsigned size() const { return 1u << n_qubits; }
    int bit(int j) const { return static_cast<int>((m >> (j - 1)) & 1u); }
    std::vector<int> bits() const;  // (n_N, ..., n_1), most significant first
};

struct Successor {
    Label next;
    int winding = 0;
};

/// Permutation of labels after one 2*pi cycle, with winding numbers.
struct PermutationRecord {
    int n_qubits = 1;
    std::vector<unsigned> image;  // m -> s(m)
    std::vector<int> windings;    // m -> r(m)
};

/// Closed-form eigenangle (2*pi*m + lambda) / 2^n. Deliberately NOT reduced
/// mod 2*pi: the winding relation
///   angle(n, m, lambda + 2*pi) == angle(n, s(m), lambda) + 2*pi*r(m)
/// is directly observable on the unreduced values.
double eigenangle(int n_qubits, const Label& label, double lambda);
double eigenangle(int n_qubits, unsigned m, double lambda);

/// One-body eigenvector at parameter theta:
///   n=0: ( cos(theta/4), sin(theta/4))
///   n=1: (-sin(theta/4), cos(theta/4))
ComplexVector one_body_eigenvector(int n, double theta);

/// Closed-form eigenvector of the n-qubit circuit, built factor by factor;
/// the phase convention is inherited from the one-body vectors (this is the
/// gauge in which the diagonal of the connection vanishes).
ComplexVector eigenvector(int n_qubits, const Label& label, double lambda);
ComplexVector eigenvector(int n_qubits, unsigned m, double lambda);

/// All 2^n eigenvectors as columns, column m = eigenvector(n, m, lambda).
ComplexMatrix analytic_basis(int n_qubits, double lambda);

/// Successor map: arithmetic form s(m) = (m+1) mod 2^N with winding
/// r(m) = 1 iff every bit of m is set.
Successor successor(const Label& label);

/// Successor map evaluated by the bitwise recursion (top bit flips iff all
/// lower bits are set, lower bits evolve as the (N-1)-qubit system).
/// Equivalent to `successor`; kept separate so the equivalence is testable.
Successor successor_bitwise(const Label& label);

/// Full permutation + windings for all 2^n labels (single 2^n-cycle).
PermutationRecord permutation_record(int n_qubits);

/// Geometric phase factor sigma(m) in {+1, -1}, evaluated by the recursion
///   sigma(N, m) = (-1)^{r(N, m)} * sigma(N-1, m mod 2^{N-1}),
///   sigma(1, n) = (-1)^n.
int sigma_phase(int n_qubits, const Label& label);
int sigma_phase(int n_qubits, unsigned m);

/// Product of sigma_phase over all 2^n labels; the Manini-Pistolesi
/// invariant predicted analytically (equals -1 for every n).
int predict_gamma_mp(int n_qubits);

}  // namespace anholonomy
