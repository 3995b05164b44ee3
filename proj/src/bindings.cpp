#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anholonomy/circuit.hpp"
#include "anholonomy/holonomy.hpp"
#include "anholonomy/qmatrix.hpp"
#include "anholonomy/spectrum.hpp"
#include "anholonomy/tracker.hpp"
#include "anholonomy/types.hpp"

namespace py = pybind11;
using namespace anholonomy;

namespace {

SweepOptions make_options(int steps, int cycles, double lambda0, bool store_vectors,
                          bool allow_degenerate) {
    SweepOptions o;
    o.steps_per_cycle = steps;
    o.cycles = cycles;
    o.lambda0 = lambda0;
    o.store_vectors = store_vectors;
    o.allow_degenerate = allow_degenerate;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Recursive N-qubit circuits with eigenvalue and eigenspace anholonomy";

    py::register_exception<NotUnitaryError>(m, "NotUnitaryError");
    py::register_exception<NotHermitianError>(m, "NotHermitianError");
    py::register_exception<NoConvergenceError>(m, "NoConvergenceError");
    py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_ValueError);
    py::register_exception<AmbiguousMatchError>(m, "AmbiguousMatchError");
    py::register_exception<DegeneracyEncounteredError>(m, "DegeneracyEncounteredError");
    py::register_exception<NonBijectiveError>(m, "NonBijectiveError");
    py::register_exception<ZeroEntryError>(m, "ZeroEntryError");

    // gates and matrix kernel
    m.def("ket_y", &ket_y, "|y> = (|0> - i|1>)/sqrt(2)");
    m.def("pauli_x", &pauli_x);
    m.def("pauli_y", &pauli_y);
    m.def("pauli_z", &pauli_z);
    m.def("phase_shift", &phase_shift, py::arg("lam"),
          "Phase-shift gate exp(i*lam*|y><y|)");
    m.def("controlled_y", &controlled_y, py::arg("u"),
          "Controlled unitary with the control axis along y (control = top factor)");
    m.def("d_op", &d_op, py::arg("u"), "D[u] = controlled_y(u) * (Z (x) 1)");
    m.def("build_circuit", &build_circuit, py::arg("n_qubits"), py::arg("lam"),
          "The recursive n-qubit circuit U(n, lam)");
    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("expm_minus_i", &expm_minus_i, py::arg("h"), py::arg("scale"),
          "exp(-1j*scale*h) for Hermitian h");
    m.def("unitarity_error", &unitarity_error, py::arg("u"));

    py::class_<EigenSystem>(m, "EigenSystem")
        .def_readonly("dim", &EigenSystem::dim)
        .def_readonly("angles", &EigenSystem::angles)
        .def_readonly("vectors", &EigenSystem::vectors)
        .def_readonly("residual", &EigenSystem::residual)
        .def_readonly("degenerate", &EigenSystem::degenerate)
        .def_readonly("any_degenerate", &EigenSystem::any_degenerate);
    m.def("eig_unitary", &eig_unitary, py::arg("u"), py::arg("tol") = 1e-10,
          "Eigenangles in [0, 2*pi) (sorted) and orthonormal eigenvectors of a unitary");

    // closed-form spectrum
    m.def(
        "eigenangle",
        [](int n, unsigned mm, double lam) { return eigenangle(n, mm, lam); },
        py::arg("n_qubits"), py::arg("m"), py::arg("lam"),
        "Closed-form eigenangle (2*pi*m + lam)/2^n, not reduced mod 2*pi");
    m.def(
        "eigenvector",
        [](int n, unsigned mm, double lam) { return eigenvector(n, mm, lam); },
        py::arg("n_qubits"), py::arg("m"), py::arg("lam"));
    m.def("analytic_basis", &analytic_basis, py::arg("n_qubits"), py::arg("lam"),
          "All 2^n closed-form eigenvectors as columns");
    m.def(
        "successor",
        [](int n, unsigned mm) {
            const Successor s = successor(Label(n, mm));
            return py::make_tuple(s.next.m, s.winding);
        },
        py::arg("n_qubits"), py::arg("m"), "(s(m), r(m)) after one 2*pi cycle");
    m.def(
        "successor_bitwise",
        [](int n, unsigned mm) {
            const Successor s = successor_bitwise(Label(n, mm));
            return py::make_tuple(s.next.m, s.winding);
        },
        py::arg("n_qubits"), py::arg("m"));

    py::class_<PermutationRecord>(m, "PermutationRecord")
        .def_readonly("n_qubits", &PermutationRecord::n_qubits)
        .def_readonly("image", &PermutationRecord::image)
        .def_readonly("windings", &PermutationRecord::windings);
    m.def("permutation_record", &permutation_record, py::arg("n_qubits"));
    m.def(
        "sigma_phase", [](int n, unsigned mm) { return sigma_phase(n, mm); },
        py::arg("n_qubits"), py::arg("m"), "Geometric phase factor sigma(m) in {+1, -1}");
    m.def("predict_gamma_mp", &predict_gamma_mp, py::arg("n_qubits"),
          "Product of sigma over all labels (-1 for every n)");

    // tracker
    py::class_<SpectralFlow>(m, "SpectralFlow")
        .def_readonly("n_qubits", &SpectralFlow::n_qubits)
        .def_readonly("dim", &SpectralFlow::dim)
        .def_readonly("steps_per_cycle", &SpectralFlow::steps_per_cycle)
        .def_readonly("cycles", &SpectralFlow::cycles)
        .def_readonly("lambda0", &SpectralFlow::lambda0)
        .def_readonly("grid", &SpectralFlow::grid)
        .def_readonly("reference", &SpectralFlow::reference)
        .def_readonly("angles", &SpectralFlow::angles)
        .def_readonly("quality", &SpectralFlow::quality)
        .def_readonly("degenerate_flags", &SpectralFlow::degenerate_flags)
        .def_readonly("any_degenerate", &SpectralFlow::any_degenerate)
        .def_readonly("boundary_vectors", &SpectralFlow::boundary_vectors)
        .def_readonly("min_quality", &SpectralFlow::min_quality);

    py::class_<CycleResult>(m, "CycleResult")
        .def_readonly("permutation", &CycleResult::permutation)
        .def_readonly("windings", &CycleResult::windings)
        .def_readonly("holonomy", &CycleResult::holonomy)
        .def_readonly("sigma", &CycleResult::sigma)
        .def_readonly("gamma_mp", &CycleResult::gamma_mp)
        .def_readonly("min_quality", &CycleResult::min_quality)
        .def_readonly("holonomy_unitarity_error", &CycleResult::holonomy_unitarity_error);

    py::class_<NegativeControlResult>(m, "NegativeControlResult")
        .def_readonly("degeneracy_detected", &NegativeControlResult::degeneracy_detected)
        .def_readonly("first_degenerate_lambda",
                      &NegativeControlResult::first_degenerate_lambda)
        .def_readonly("first_degenerate_index", &NegativeControlResult::first_degenerate_index)
        .def_readonly("angles_at_detection", &NegativeControlResult::angles_at_detection)
        .def_readonly("cycle", &NegativeControlResult::cycle);

    m.def(
        "sweep",
        [](int n_qubits, int steps, int cycles, double lambda0, bool store_vectors,
           bool allow_degenerate) {
            return sweep_standard(
                n_qubits, make_options(steps, cycles, lambda0, store_vectors, allow_degenerate));
        },
        py::arg("n_qubits"), py::arg("steps_per_cycle") = 512, py::arg("cycles") = 1,
        py::arg("lambda0") = 0.0, py::arg("store_vectors") = false,
        py::arg("allow_degenerate") = false,
        "Track the standard family's eigensystem along the lambda grid "
        "(seeded with the analytic basis)");
    m.def(
        "sweep_custom",
        [](std::function<ComplexMatrix(double)> builder, int n_qubits, int steps, int cycles,
           double lambda0, bool allow_degenerate) {
            CircuitSpec spec{n_qubits, std::move(builder)};
            return sweep(spec, make_options(steps, cycles, lambda0, false, allow_degenerate));
        },
        py::arg("builder"), py::arg("n_qubits"), py::arg("steps_per_cycle") = 512,
        py::arg("cycles") = 1, py::arg("lambda0") = 0.0, py::arg("allow_degenerate") = false,
        "Track a custom family lambda -> U(lambda) given by a Python callable");
    m.def("extract_cycle", &extract_cycle, py::arg("flow"), py::arg("n_cycles") = 1,
          py::arg("ignore_degeneracy") = false,
          "Permutation, windings, holonomy, sigma and gamma_MP after n_cycles cycles");
    m.def("boundary_labels", &boundary_labels, py::arg("flow"), py::arg("boundary"));
    m.def("negative_control", &negative_control, py::arg("n_copies"),
          py::arg("steps_per_cycle"));

    // holonomy
    py::class_<GaugeConnection>(m, "GaugeConnection")
        .def_readonly("n_qubits", &GaugeConnection::n_qubits)
        .def_readonly("matrix", &GaugeConnection::matrix)
        .def_readonly("gauge_note", &GaugeConnection::gauge_note)
        .def_readonly("antihermitian_residual", &GaugeConnection::antihermitian_residual);
    m.def("connection_analytic", &connection_analytic, py::arg("n_qubits"));
    m.def("connection_fd", &connection_fd, py::arg("n_qubits"), py::arg("lam"),
          py::arg("h") = 1e-5, py::arg("richardson") = false);
    m.def("connection_components", &connection_components, py::arg("n_qubits"),
          "The commuting pair (top-qubit part, embedded lower part)");
    m.def("holonomy_analytic", &holonomy_analytic, py::arg("n_qubits"),
          "M(C) = exp(-2*pi*i*A)");
    m.def("holonomy_numeric", &holonomy_numeric, py::arg("flow"));
    m.def(
        "gamma_mp_from_holonomy",
        [](unsigned m0, int n_qubits, const ComplexMatrix& holonomy,
           const std::vector<unsigned>& image) {
            return gamma_mp_from_holonomy(Label(n_qubits, m0), holonomy, image);
        },
        py::arg("m0"), py::arg("n_qubits"), py::arg("holonomy"), py::arg("image"),
        "Product of holonomy entries along the permutation orbit of m0");

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
