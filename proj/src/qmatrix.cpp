#include "anholonomy/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace anholonomy {

ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() {
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
}

ComplexMatrix pauli_y() {
    ComplexMatrix y(2, 2);
    y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return y;
}

ComplexMatrix pauli_z() {
    ComplexMatrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double linf_norm(const ComplexMatrix& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

double unitarity_error(const ComplexMatrix& u) {
    return linf_norm(u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols()));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    return u.rows() == u.cols() && unitarity_error(u) < tol;
}

double hermiticity_error(const ComplexMatrix& a) {
    return linf_norm(a - a.adjoint());
}

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t -= kTwoPi;  // fmod/rounding can land exactly on 2*pi
    return t;
}

double circular_distance(double a, double b) {
    double d = std::fmod(a - b, kTwoPi);
    if (d > kPi) d -= kTwoPi;
    if (d <= -kPi) d += kTwoPi;
    return d;
}

namespace {

// Rotate each column so its largest-magnitude entry is real positive,
// ties broken by lowest row index.
void canonical_phases(ComplexMatrix& v) {
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < v.rows(); ++i) {
            double m = std::abs(v(i, k));
            if (m > best) {
                best = m;
                imax = i;
            }
        }
        if (best > 0.0) v.col(k) *= std::conj(v(imax, k)) / best;
    }
}

}  // namespace

EigenSystem eig_unitary(const ComplexMatrix& u, double tol) {
    if (u.rows() != u.cols())
        throw NotUnitaryError("eig_unitary: matrix is not square");
    if (!u.allFinite())
        throw NotUnitaryError("eig_unitary: matrix has non-finite entries");
    const double uerr = unitarity_error(u);
    if (uerr >= tol)
        throw NotUnitaryError("eig_unitary: ||u^dag u - I||_inf = " + std::to_string(uerr) +
                              " exceeds tol " + std::to_string(tol));

    const Eigen::Index n = u.rows();
    const ComplexMatrix cos_part = (u + u.adjoint()) / 2.0;
    const ComplexMatrix sin_part = (u - u.adjoint()) / Complex(0, 2);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(cos_part);
    if (solver.info() != Eigen::Success)
        throw NoConvergenceError("eig_unitary: Hermitian eigensolver failed");
    ComplexMatrix vecs = solver.eigenvectors();
    Eigen::VectorXd cvals = solver.eigenvalues();

    // Eigenvalues of cos_part fold theta and 2*pi - theta onto the same
    // value; resolve clusters of nearly equal cos(theta) with sin_part.
    // The tolerance is generous: members of a cluster are separated again by
    // their sines (mirror pairs have opposite sines), while values left
    // outside a cluster are far enough apart that the first-stage vectors
    // already meet the residual contract.
    const double cluster_tol = 1e-4;
    Eigen::Index lo = 0;
    while (lo < n) {
        Eigen::Index hi = lo + 1;
        while (hi < n && cvals[hi] - cvals[hi - 1] < cluster_tol) ++hi;
        if (hi - lo > 1) {
            const auto block = vecs.middleCols(lo, hi - lo);
            ComplexMatrix small = block.adjoint() * sin_part * block;
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> sub((small + small.adjoint()) / 2.0);
            if (sub.info() != Eigen::Success)
                throw NoConvergenceError("eig_unitary: cluster eigensolver failed");
            vecs.middleCols(lo, hi - lo) = block * sub.eigenvectors();
        }
        lo = hi;
    }

    // Rayleigh quotients give the eigenvalues; one GEMM serves both the
    // quotient and the residual check.
    const ComplexMatrix uv = u * vecs;
    std::vector<double> angles(n);
    double residual = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex z = vecs.col(k).dot(uv.col(k));
        angles[k] = wrap_angle(std::atan2(z.imag(), z.real()));
        residual = std::max(residual, (uv.col(k) - z * vecs.col(k)).cwiseAbs().maxCoeff());
    }
    if (residual >= kEigResidualTol) {
        char msg[128];
        std::snprintf(msg, sizeof(msg),
                      "eig_unitary: residual %.3e exceeds %.1e (pathological input?)",
                      residual, kEigResidualTol);
        throw NoConvergenceError(msg);
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return angles[a] < angles[b]; });

    EigenSystem es;
    es.dim = n;
    es.angles.resize(n);
    es.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        es.angles[k] = angles[order[k]];
        es.vectors.col(k) = vecs.col(order[k]);
    }
    canonical_phases(es.vectors);
    es.residual = residual;

    es.degenerate.assign(n, false);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double next = es.angles[(k + 1) % n];
        if (std::abs(circular_distance(next, es.angles[k])) < kDegeneracyTol) {
            es.degenerate[k] = true;
            es.degenerate[(k + 1) % n] = true;
        }
    }
    es.any_degenerate =
        std::any_of(es.degenerate.begin(), es.degenerate.end(), [](bool f) { return f; });
    return es;
}

ComplexMatrix expm_minus_i(const ComplexMatrix& h, double scale) {
    if (h.rows() != h.cols())
        throw NotHermitianError("expm_minus_i: matrix is not square");
    if (!h.allFinite())
        throw NotHermitianError("expm_minus_i: matrix has non-finite entries");
    if (hermiticity_error(h) >= 1e-10)
        throw NotHermitianError("expm_minus_i: ||h - h^dag||_inf = " +
                                std::to_string(hermiticity_error(h)));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((h + h.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success)
        throw NoConvergenceError("expm_minus_i: eigensolver failed");
    const auto& v = solver.eigenvectors();
    ComplexVector phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        phases[k] = std::exp(Complex(0, -scale * solver.eigenvalues()[k]));
    return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace anholonomy
