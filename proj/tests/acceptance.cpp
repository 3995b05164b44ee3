// Acceptance suite: one check per shipped claim, each printed as a PASS/FAIL
// line with the measured value and the tolerance it was judged against.
// Run all criteria (no arguments), a single one (--criterion K), or list them
// (--list). Exit code 0 iff every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anholonomy/circuit.hpp"
#include "anholonomy/holonomy.hpp"
#include "anholonomy/qmatrix.hpp"
#include "anholonomy/spectrum.hpp"
#include "anholonomy/tracker.hpp"

using namespace anholonomy;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "  FAILED: " << what << "\n";
        }
    }
    void require_below(double measured, double tol, const std::string& what) {
        std::ostringstream line;
        line << what << " (measured " << measured << ", tol " << tol << ")";
        require(measured < tol, line.str());
    }
    void note(const std::string& line) { detail << "  " << line << "\n"; }
};

// 1. One-body holonomy equals -iY: numeric transport at 4096 steps within
//    1e-6, analytic exponential within 1e-9, in under a second.
Outcome criterion_1() {
    Outcome out;
    const auto start = Clock::now();
    const ComplexMatrix target = Complex(0, -1) * pauli_y();

    const double analytic_dev = linf_norm(holonomy_analytic(1) - target);
    out.require_below(analytic_dev, 1e-9, "analytic M(C) vs -iY");

    const SpectralFlow flow = sweep_standard(1, {.steps_per_cycle = 4096});
    const double numeric_dev = linf_norm(holonomy_numeric(flow) - target);
    out.require_below(numeric_dev, 1e-6, "numeric M(C) at 4096 steps vs -iY");

    const double elapsed = seconds_since(start);
    out.require_below(elapsed, 1.0, "runtime (s)");
    return out;
}

// 2. Tracker permutation is the single-cycle increment m -> m+1 mod 2^N for
//    N = 1..8 at 512 steps; the N=8 run stays under 60 s.
Outcome criterion_2() {
    Outcome out;
    for (int n = 1; n <= 8; ++n) {
        const auto start = Clock::now();
        const SpectralFlow flow = sweep_standard(n, {.steps_per_cycle = 512});
        const CycleResult cyc = extract_cycle(flow);
        const double elapsed = seconds_since(start);

        const unsigned size = 1u << n;
        bool match = true;
        for (unsigned m = 0; m < size; ++m) match = match && cyc.permutation[m] == (m + 1) % size;
        out.require(match, "permutation equals m -> m+1 mod 2^" + std::to_string(n));

        unsigned m = 0, length = 0;
        do {
            m = cyc.permutation[m];
            ++length;
        } while (m != 0 && length <= size);
        out.require(length == size, "single cycle of length 2^" + std::to_string(n));

        if (n == 8) out.require_below(elapsed, 60.0, "N=8 runtime at 512 steps (s)");
    }
    return out;
}

// 3. Winding numbers: r(m) = 1 iff m = 2^N - 1, from the tracker's unwrapping.
Outcome criterion_3() {
    Outcome out;
    for (int n = 1; n <= 8; ++n) {
        const SpectralFlow flow = sweep_standard(n, {.steps_per_cycle = 512});
        const CycleResult cyc = extract_cycle(flow);
        const unsigned size = 1u << n;
        bool match = true;
        for (unsigned m = 0; m < size; ++m)
            match = match && cyc.windings[m] == (m == size - 1 ? 1 : 0);
        out.require(match, "windings for N = " + std::to_string(n));
    }
    return out;
}

// 4. Numeric eigenangles match the closed form within 1e-9 (mod 2*pi) for
//    N <= 8 at 16 random lambda.
Outcome criterion_4() {
    Outcome out;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(0.0, kTwoPi);
    for (int n = 1; n <= 8; ++n) {
        double dev = 0.0;
        for (int i = 0; i < 16; ++i) {
            const double lambda = dist(rng);
            const EigenSystem es = eig_unitary(build_circuit(n, lambda));
            for (unsigned m = 0; m < (1u << n); ++m)
                dev = std::max(dev, std::abs(circular_distance(
                                        es.angles[m], eigenangle(n, m, lambda))));
        }
        out.require_below(dev, 1e-9, "eigenangle deviation for N = " + std::to_string(n));
    }
    return out;
}

// 5. gamma_MP = -1 for N = 1..6: exactly from the sigma product, within 1e-6
//    from the numeric orbit product at 4096 steps/cycle; the N=6 full-orbit
//    sweep (64 cycles) returns every track with phase -1 in under 10 minutes.
Outcome criterion_5() {
    Outcome out;
    for (int n = 1; n <= 6; ++n) {
        out.require(predict_gamma_mp(n) == -1,
                    "sigma-product gamma_MP for N = " + std::to_string(n));

        const SpectralFlow flow = sweep_standard(n, {.steps_per_cycle = 4096});
        const CycleResult cyc = extract_cycle(flow);
        out.require_below(std::abs(cyc.gamma_mp - Complex(-1, 0)), 1e-6,
                          "orbit-product gamma_MP for N = " + std::to_string(n));
    }

    const auto start = Clock::now();
    SweepOptions options;
    options.steps_per_cycle = 512;
    options.cycles = 64;
    const SpectralFlow orbit = sweep_standard(6, options);
    const CycleResult full = extract_cycle(orbit, 64);
    double phase_dev = 0.0;
    bool identity_perm = true;
    for (Eigen::Index t = 0; t < orbit.dim; ++t) {
        identity_perm = identity_perm && full.permutation[t] == static_cast<unsigned>(t);
        phase_dev = std::max(phase_dev, std::abs(full.holonomy(t, t) - Complex(-1, 0)));
    }
    out.require(identity_perm, "N=6 full orbit returns every track to its label");
    out.require_below(phase_dev, 1e-6, "N=6 full-orbit Berry phase vs -1");
    out.require_below(seconds_since(start), 600.0, "N=6 full-orbit runtime (s)");
    return out;
}

// 6. Gauge connection: Hermitian, zero diagonal, lambda-independent (checked
//    by finite differences at two lambda), commuting components, for N <= 6.
Outcome criterion_6() {
    Outcome out;
    for (int n = 1; n <= 6; ++n) {
        const std::string tag = " for N = " + std::to_string(n);
        const GaugeConnection conn = connection_analytic(n);
        out.require_below(hermiticity_error(conn.matrix), 1e-9, "hermiticity" + tag);
        out.require_below(conn.matrix.diagonal().cwiseAbs().maxCoeff(), 1e-8,
                          "diagonal" + tag);
        out.require_below(linf_norm(connection_fd(n, 0.3).matrix - conn.matrix), 1e-6,
                          "fd agreement at lambda=0.3" + tag);
        out.require_below(linf_norm(connection_fd(n, 4.1).matrix - conn.matrix), 1e-6,
                          "fd agreement at lambda=4.1" + tag);
        if (n >= 2) {
            const auto [top, lower] = connection_components(n);
            out.require_below(linf_norm(top * lower - lower * top), 1e-9,
                              "[A_H, A_L]" + tag);
        }
    }
    return out;
}

// 7. Convergence: halving the grid step at least halves
//    ||M_num - M_analytic||_inf for N = 1, 2 over three consecutive
//    refinements (64 -> 128 -> 256 -> 512 steps).
Outcome criterion_7() {
    Outcome out;
    for (int n : {1, 2}) {
        const ComplexMatrix analytic = holonomy_analytic(n);
        std::vector<double> errors;
        for (int steps : {64, 128, 256, 512}) {
            SweepOptions options;
            options.steps_per_cycle = steps;
            const SpectralFlow flow = sweep_standard(n, options);
            errors.push_back(linf_norm(holonomy_numeric(flow) - analytic));
        }
        std::ostringstream measured;
        measured << "N=" << n << " errors at 64/128/256/512 steps:";
        for (double e : errors) measured << ' ' << e;
        out.note(measured.str());
        for (size_t i = 0; i + 1 < errors.size(); ++i) {
            std::ostringstream what;
            what << "N=" << n << " halving step " << i + 1 << ": error " << errors[i + 1]
                 << " <= " << errors[i] << " / 2";
            out.require(errors[i + 1] <= errors[i] / 2.0, what.str());
        }
    }
    return out;
}

// 8. Negative control: the non-interacting two-copy composite is detected as
//    spectrally degenerate.
Outcome criterion_8() {
    Outcome out;
    const NegativeControlResult result = negative_control(2, 512);
    out.require(result.degeneracy_detected, "composite degeneracy flag fires");
    if (result.degeneracy_detected) {
        std::ostringstream line;
        line << "flagged at lambda = " << result.first_degenerate_lambda << " (grid index "
             << result.first_degenerate_index << ")";
        out.note(line.str());
    }
    return out;
}

// 9. The N=3 itinerary: starting from 000, eight cycles visit
//    001, 010, 011, 100, 101, 110, 111 and return to 000.
Outcome criterion_9() {
    Outcome out;
    SweepOptions options;
    options.steps_per_cycle = 512;
    options.cycles = 8;
    const SpectralFlow flow = sweep_standard(3, options);

    std::vector<unsigned> visited;
    for (int j = 0; j <= 8; ++j) visited.push_back(boundary_labels(flow, j)[0]);
    const std::vector<unsigned> expected{0, 1, 2, 3, 4, 5, 6, 7, 0};
    out.require(visited == expected, "itinerary of the track starting at 000");

    std::ostringstream line;
    line << "visited:";
    for (unsigned m : visited) {
        line << ' ';
        for (int b = 2; b >= 0; --b) line << ((m >> b) & 1u);
    }
    out.note(line.str());
    return out;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "one-body holonomy M(C) = -iY", criterion_1},
        {2, "permutation cycle m -> m+1 mod 2^N for N <= 8", criterion_2},
        {3, "winding numbers r(m) = [m = 2^N - 1] for N <= 8", criterion_3},
        {4, "eigenangle closed form within 1e-9 for N <= 8", criterion_4},
        {5, "gamma_MP = -1 for N <= 6 (prediction and orbit product)", criterion_5},
        {6, "gauge connection structure for N <= 6", criterion_6},
        {7, "grid-halving convergence of the numeric holonomy", criterion_7},
        {8, "negative control: composite degeneracy detected", criterion_8},
        {9, "N=3 itinerary reproduced literally", criterion_9},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--list") == 0) {
            for (const Criterion& c : criteria())
                std::cout << c.id << ": " << c.title << "\n";
            return 0;
        }
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--list] [--criterion K]\n";
            return 2;
        }
    }

    bool all_pass = true;
    int ran = 0;
    for (const Criterion& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        const auto start = Clock::now();
        const Outcome outcome = c.run();
        all_pass = all_pass && outcome.pass;
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "C" << c.id << ": " << c.title
                  << "  (" << seconds_since(start) << " s)\n"
                  << outcome.detail.str();
    }
    if (ran == 0) {
        std::cerr << "no such criterion: " << only << "\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
