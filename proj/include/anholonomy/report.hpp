#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "anholonomy/types.hpp"

namespace anholonomy {

enum class Command { Spectrum, Track, Holonomy, Verify, NegativeControl };
enum class OutputFormat { Json, Csv };

struct RunConfig {
    Command command = Command::Verify;
    int n_qubits = 3;
    int steps_per_cycle = 512;
    int cycles = 1;
    double lambda0 = 0.0;
    std::string out_path;  // empty writes to stdout
    OutputFormat format = OutputFormat::Json;
    double fd_step = 1e-5;
    bool with_timestamp = true;

    void validate() const;  // throws ConfigError
};

using Json = nlohmann::ordered_json;

/// Complex numbers are serialized as two-element arrays [re, im].
Json complex_json(const Complex& z);
Json matrix_json(const ComplexMatrix& m);

/// Analytic predictions at lambda0: eigenangles, permutation, windings,
/// sigma phases and gamma_mp.
Json spectrum_report(const RunConfig& cfg);
std::string spectrum_csv(const RunConfig& cfg);

/// Spectral-flow CSV with columns
///   step,lambda,track_id,eigenangle_unwrapped,analytic_m,match_quality
/// one row per (grid point, track), endpoints inclusive.
void track_csv(const RunConfig& cfg, std::ostream& out);

/// Gauge connection and holonomy matrix, analytic vs finite-difference vs
/// numeric transport.
Json holonomy_report(const RunConfig& cfg);

/// Runs the full chain (build, analytic spectrum, sweep, cycle extraction,
/// holonomy comparison, gamma_mp) and judges every check against its pinned
/// tolerance. all_pass reflects the verdicts.
Json verify_report(const RunConfig& cfg, bool& all_pass);

/// Sweeps the non-interacting two-copy composite; the expected outcome is a
/// detected spectral degeneracy.
Json negative_control_report(const RunConfig& cfg, bool& expected_outcome);

/// Dispatch a validated config, write the output to cfg.out_path or stdout.
/// Returns 0 on success, 1 when a verdict failed.
int run_command(const RunConfig& cfg);

}  // namespace anholonomy
