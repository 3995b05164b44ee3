#pragma once

#include <optional>
#include <vector>

#include "anholonomy/circuit.hpp"
#include "anholonomy/qmatrix.hpp"
#include "anholonomy/spectrum.hpp"
#include "anholonomy/types.hpp"

namespace anholonomy {

/// Continued eigensystem along an equally spaced lambda grid.
///
/// Track t starts at column t of `reference` (the seed basis at lambda0)
/// and is continued by overlap matching with the Pancharatnam phase fix:
/// at every step the matched eigenvector is rotated so the overlap with the
/// previous vector is real positive (discrete parallel transport).
///
/// Angles are unwrapped: at each step the branch of the eigenangle nearest
/// the previous value is stored, so winding numbers can be read off the
/// endpoints. Per-point vectors for all tracks are kept only when the sweep
/// was asked to store them; vectors at cycle boundaries are always kept.
struct SpectralFlow {
    int n_qubits = 0;
    Eigen::Index dim = 0;
    int steps_per_cycle = 0;
    int cycles = 0;
    double lambda0 = 0.0;

    std::vector<double> grid;  // size steps_per_cycle*cycles + 1, inclusive
    ComplexMatrix reference;   // dim x dim seed basis at lambda0

    // indexed [track][grid point]
    std::vector<std::vector<double>> angles;
    std::vector<std::vector<double>> quality;  // squared overlap to previous point

    std::vector<bool> degenerate_flags;        // per grid point
    bool any_degenerate = false;

    std::vector<ComplexMatrix> boundary_vectors;  // cycles+1 snapshots, dim x dim
    std::vector<ComplexMatrix> vectors;           // per point iff store_vectors
    bool has_all_vectors = false;

    double min_quality = 1.0;

    int total_points() const { return steps_per_cycle * cycles + 1; }
};

struct SweepOptions {
    int steps_per_cycle = 512;  // must be >= 64
    int cycles = 1;
    double lambda0 = 0.0;
    bool store_vectors = false;
    /// Record degeneracy flags instead of throwing DegeneracyEncounteredError.
    bool allow_degenerate = false;
    /// Seed basis at lambda0 (columns). Defaults to the canonically phased
    /// numeric eigenbasis; pass spectrum::analytic_basis to work in the
    /// analytic gauge.
    std::optional<ComplexMatrix> seed_basis;
    double match_floor = 0.5;     // hard AmbiguousMatchError below this
    double warn_quality = 0.95;   // soft band; reported via min_quality
};

/// Result of closing one 2*pi cycle: the permutation of tracks, their
/// winding numbers, the holonomy matrix M(C) with entries
/// M(m', m) = <reference_m' | transported vector of track m>, the per-track
/// geometric phase factors sigma and the Manini-Pistolesi product gamma_mp.
struct CycleResult {
    std::vector<unsigned> permutation;
    std::vector<int> windings;
    ComplexMatrix holonomy;
    std::vector<Complex> sigma;
    Complex gamma_mp{0.0, 0.0};
    double min_quality = 1.0;
    double holonomy_unitarity_error = 0.0;
};

struct NegativeControlResult {
    bool degeneracy_detected = false;
    double first_degenerate_lambda = 0.0;
    int first_degenerate_index = -1;
    std::vector<double> angles_at_detection;
    std::optional<CycleResult> cycle;  // only when no degeneracy fired
};

/// Diagonalize the family on the grid and continue all tracks.
/// Throws AmbiguousMatchError when the best squared overlap at a step falls
/// below options.match_floor (grid too coarse for the family), and
/// DegeneracyEncounteredError when eigenangles collide at a grid point
/// (unless allow_degenerate, in which case the flag is recorded instead).
SpectralFlow sweep(const CircuitSpec& spec, const SweepOptions& options);
SpectralFlow sweep(const CircuitSpec& spec, int steps_per_cycle, int cycles);

/// Sweep of the standard family seeded with the analytic eigenbasis, so the
/// flow lives in the gauge whose connection has zero diagonal.
SpectralFlow sweep_standard(int n_qubits, const SweepOptions& options = {});

/// Close the loop after n_cycles full 2*pi cycles (default: the first one).
/// The returned permutation/windings/holonomy are cumulative from lambda0,
/// so for n_cycles == 1 this is the single-cycle result M(C) and for larger
/// n_cycles the holonomy approaches the matrix power M(C)^n_cycles.
/// Requires the covered grid range to be free of degeneracy flags unless
/// ignore_degeneracy is set. Throws NonBijectiveError when two tracks match
/// the same target (grid too coarse).
CycleResult extract_cycle(const SpectralFlow& flow, int n_cycles = 1,
                          bool ignore_degeneracy = false);

/// Labels of all tracks at a cycle boundary: entry t is the reference column
/// with the largest squared overlap against track t's transported vector.
std::vector<unsigned> boundary_labels(const SpectralFlow& flow, int boundary);

/// Negative control. n_copies == 2 sweeps the non-interacting composite
/// u(lambda) (x) u(lambda), whose spectral degeneracy is the expected
/// outcome and is reported rather than thrown; n_copies == 1 reduces to the
/// ordinary one-qubit sweep.
NegativeControlResult negative_control(int n_copies, int steps_per_cycle);

}  // namespace anholonomy
