#include "anholonomy/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "anholonomy/holonomy.hpp"

namespace anholonomy {

namespace {

// Greedy one-to-one assignment of tracks to eigenvector columns by
// descending squared overlap. Keeps the matched set orthonormal even when
// two tracks compete for a degenerate pair of columns.
struct Assignment {
    std::vector<Eigen::Index> column_of_track;
    std::vector<double> quality_of_track;
};

Assignment assign_tracks(const ComplexMatrix& overlaps) {
    const Eigen::Index dim = overlaps.rows();
    struct Entry {
        double q;
        Eigen::Index col, track;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<size_t>(dim) * dim);
    for (Eigen::Index c = 0; c < dim; ++c)
        for (Eigen::Index t = 0; t < dim; ++t)
            entries.push_back({std::norm(overlaps(c, t)), c, t});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.q != b.q) return a.q > b.q;
        return std::tie(a.col, a.track) < std::tie(b.col, b.track);  // deterministic ties
    });

    Assignment out;
    out.column_of_track.assign(dim, -1);
    out.quality_of_track.assign(dim, 0.0);
    std::vector<bool> col_used(dim, false);
    Eigen::Index assigned = 0;
    for (const Entry& e : entries) {
        if (assigned == dim) break;
        if (col_used[e.col] || out.column_of_track[e.track] >= 0) continue;
        col_used[e.col] = true;
        out.column_of_track[e.track] = e.col;
        out.quality_of_track[e.track] = e.q;
        ++assigned;
    }
    return out;
}

double unwrap_to(double raw_angle, double previous) {
    return raw_angle + kTwoPi * std::round((previous - raw_angle) / kTwoPi);
}

}  // namespace

SpectralFlow sweep(const CircuitSpec& spec, const SweepOptions& options) {
    if (options.steps_per_cycle < 64)
        throw OutOfRangeError("sweep: steps_per_cycle must be >= 64");
    if (options.cycles < 1) throw OutOfRangeError("sweep: cycles must be >= 1");
    if (!spec.builder) throw ConfigError("sweep: circuit has no builder");

    SpectralFlow flow;
    flow.n_qubits = spec.n_qubits;
    flow.dim = spec.dim();
    flow.steps_per_cycle = options.steps_per_cycle;
    flow.cycles = options.cycles;
    flow.lambda0 = options.lambda0;
    flow.has_all_vectors = options.store_vectors;

    const int total = flow.total_points();
    const Eigen::Index dim = flow.dim;
    flow.grid.resize(total);
    for (int k = 0; k < total; ++k)
        flow.grid[k] = options.lambda0 + kTwoPi * k / options.steps_per_cycle;

    flow.degenerate_flags.assign(total, false);
    flow.angles.assign(dim, std::vector<double>(total, 0.0));
    flow.quality.assign(dim, std::vector<double>(total, 1.0));

    const EigenSystem es0 = eig_unitary(spec.builder(flow.grid[0]));
    if (es0.dim != dim) throw ConfigError("sweep: builder dimension does not match n_qubits");
    flow.degenerate_flags[0] = es0.any_degenerate;
    if (es0.any_degenerate && !options.allow_degenerate)
        throw DegeneracyEncounteredError("sweep: degenerate spectrum at lambda0",
                                         flow.grid[0], 0);

    if (options.seed_basis) {
        if (options.seed_basis->rows() != dim || options.seed_basis->cols() != dim)
            throw ConfigError("sweep: seed basis has wrong dimensions");
        flow.reference = *options.seed_basis;
    } else {
        flow.reference = es0.vectors;
    }

    // Seed the tracks: column t of the reference, with the eigenangle of the
    // best-matching numeric eigenvector as the starting (already wrapped)
    // angle.
    ComplexMatrix current = flow.reference;
    {
        const ComplexMatrix overlaps = es0.vectors.adjoint() * flow.reference;
        const Assignment a = assign_tracks(overlaps);
        for (Eigen::Index t = 0; t < dim; ++t) {
            if (a.quality_of_track[t] < options.match_floor)
                throw AmbiguousMatchError(
                    "sweep: seed basis does not match the eigenbasis at lambda0");
            flow.angles[t][0] = es0.angles[a.column_of_track[t]];
            flow.quality[t][0] = a.quality_of_track[t];
        }
    }
    flow.min_quality = 1.0;
    flow.boundary_vectors.push_back(current);
    if (options.store_vectors) flow.vectors.push_back(current);

    for (int k = 1; k < total; ++k) {
        const EigenSystem es = eig_unitary(spec.builder(flow.grid[k]));
        flow.degenerate_flags[k] = es.any_degenerate;
        if (es.any_degenerate) {
            flow.any_degenerate = true;
            if (!options.allow_degenerate)
                throw DegeneracyEncounteredError(
                    "sweep: degenerate spectrum at lambda = " + std::to_string(flow.grid[k]),
                    flow.grid[k], k);
        }

        const ComplexMatrix overlaps = es.vectors.adjoint() * current;
        const Assignment a = assign_tracks(overlaps);
        ComplexMatrix next(dim, dim);
        for (Eigen::Index t = 0; t < dim; ++t) {
            const double q = a.quality_of_track[t];
            if (q < options.match_floor)
                throw AmbiguousMatchError(
                    "sweep: squared overlap " + std::to_string(q) + " below match floor " +
                    std::to_string(options.match_floor) + " at lambda = " +
                    std::to_string(flow.grid[k]) + " (grid too coarse)");
            const Eigen::Index col = a.column_of_track[t];
            // Pancharatnam fix: <v_prev | v_next> real positive.
            const Complex ov = overlaps(col, t);
            next.col(t) = es.vectors.col(col) * (ov / std::abs(ov));
            flow.angles[t][k] = unwrap_to(es.angles[col], flow.angles[t][k - 1]);
            flow.quality[t][k] = q;
            flow.min_quality = std::min(flow.min_quality, q);
        }
        current = std::move(next);
        if (k % options.steps_per_cycle == 0) flow.boundary_vectors.push_back(current);
        if (options.store_vectors) flow.vectors.push_back(current);
    }
    return flow;
}

SpectralFlow sweep(const CircuitSpec& spec, int steps_per_cycle, int cycles) {
    SweepOptions options;
    options.steps_per_cycle = steps_per_cycle;
    options.cycles = cycles;
    return sweep(spec, options);
}

SpectralFlow sweep_standard(int n_qubits, const SweepOptions& options) {
    SweepOptions opts = options;
    opts.seed_basis = analytic_basis(n_qubits, opts.lambda0);
    return sweep(CircuitSpec::standard(n_qubits), opts);
}

CycleResult extract_cycle(const SpectralFlow& flow, int n_cycles, bool ignore_degeneracy) {
    if (n_cycles < 1 || n_cycles > flow.cycles)
        throw OutOfRangeError("extract_cycle: n_cycles out of range");
    const int k1 = n_cycles * flow.steps_per_cycle;
    if (!ignore_degeneracy) {
        for (int k = 0; k <= k1; ++k)
            if (flow.degenerate_flags[k])
                throw DegeneracyEncounteredError(
                    "extract_cycle: flow crosses a degenerate grid point", flow.grid[k], k);
    }

    const Eigen::Index dim = flow.dim;
    const ComplexMatrix& v_end = flow.boundary_vectors.at(n_cycles);
    CycleResult result;
    result.min_quality = flow.min_quality;
    result.holonomy = flow.reference.adjoint() * v_end;

    result.permutation.resize(dim);
    std::vector<bool> hit(dim, false);
    for (Eigen::Index t = 0; t < dim; ++t) {
        Eigen::Index best = 0;
        result.holonomy.col(t).cwiseAbs().maxCoeff(&best);
        result.permutation[t] = static_cast<unsigned>(best);
        if (hit[best])
            throw NonBijectiveError("extract_cycle: two tracks map to target " +
                                    std::to_string(best) + " (grid too coarse)");
        hit[best] = true;
    }

    result.windings.resize(dim);
    for (Eigen::Index t = 0; t < dim; ++t) {
        const double end_angle = flow.angles[t][k1];
        const double matched_start = flow.angles[result.permutation[t]][0];
        result.windings[t] = static_cast<int>(std::lround((end_angle - matched_start) / kTwoPi));
    }

    result.sigma.resize(dim);
    for (Eigen::Index t = 0; t < dim; ++t) {
        const Complex entry = result.holonomy(result.permutation[t], t);
        const double mag = std::abs(entry);
        result.sigma[t] = mag > 1e-12 ? entry / mag : Complex(0, 0);
    }

    result.holonomy_unitarity_error = unitarity_error(result.holonomy);
    result.gamma_mp = gamma_mp_from_holonomy(Label(flow.n_qubits, 0), result.holonomy,
                                             result.permutation);
    return result;
}

std::vector<unsigned> boundary_labels(const SpectralFlow& flow, int boundary) {
    if (boundary < 0 || boundary > flow.cycles)
        throw OutOfRangeError("boundary_labels: boundary out of range");
    const ComplexMatrix overlaps = flow.reference.adjoint() * flow.boundary_vectors.at(boundary);
    std::vector<unsigned> labels(flow.dim);
    for (Eigen::Index t = 0; t < flow.dim; ++t) {
        Eigen::Index best = 0;
        overlaps.col(t).cwiseAbs().maxCoeff(&best);
        labels[t] = static_cast<unsigned>(best);
    }
    return labels;
}

NegativeControlResult negative_control(int n_copies, int steps_per_cycle) {
    if (n_copies != 1 && n_copies != 2)
        throw OutOfRangeError("negative_control: n_copies must be 1 or 2");

    NegativeControlResult result;
    if (n_copies == 1) {
        SweepOptions options;
        options.steps_per_cycle = steps_per_cycle;
        const SpectralFlow flow = sweep_standard(1, options);
        result.cycle = extract_cycle(flow);
        return result;
    }

    // The expected outcome IS the degeneracy refusal: run the sweep under its
    // default contract and report the caught error.
    const CircuitSpec composite = CircuitSpec::noninteracting_pair();
    SweepOptions options;
    options.steps_per_cycle = steps_per_cycle;
    try {
        const SpectralFlow flow = sweep(composite, options);
        result.cycle = extract_cycle(flow);
    } catch (const DegeneracyEncounteredError& e) {
        result.degeneracy_detected = true;
        result.first_degenerate_index = e.grid_index;
        result.first_degenerate_lambda = e.lambda;
        result.angles_at_detection = eig_unitary(composite.builder(e.lambda)).angles;
    }
    return result;
}

}  // namespace anholonomy
