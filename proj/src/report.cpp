#include "anholonomy/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "anholonomy/circuit.hpp"
#include "anholonomy/holonomy.hpp"
#include "anholonomy/qmatrix.hpp"
#include "anholonomy/spectrum.hpp"
#include "anholonomy/tracker.hpp"

namespace anholonomy {

namespace {

constexpr int kSchemaVersion = 1;

// Matrices above this dimension are omitted from JSON reports.
constexpr Eigen::Index kMaxJsonDim = 64;

std::string command_name(Command c) {
    switch (c) {
        case Command::Spectrum: return "spectrum";
        case Command::Track: return "track";
        case Command::Holonomy: return "holonomy";
        case Command::Verify: return "verify";
        case Command::NegativeControl: return "negative-control";
    }
    return "?";
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Json config_json(const RunConfig& cfg) {
    Json j;
    j["command"] = command_name(cfg.command);
    j["qubits"] = cfg.n_qubits;
    j["steps_per_cycle"] = cfg.steps_per_cycle;
    j["cycles"] = cfg.cycles;
    j["lambda0"] = cfg.lambda0;
    j["fd_step"] = cfg.fd_step;
    j["format"] = cfg.format == OutputFormat::Json ? "json" : "csv";
    j["out"] = cfg.out_path;
    return j;
}

struct VerdictList {
    Json entries = Json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, double measured, double tolerance) {
        Json v;
        v["name"] = name;
        v["pass"] = pass;
        v["measured"] = measured;
        v["tolerance"] = tolerance;
        entries.push_back(v);
        all_pass = all_pass && pass;
    }
    void add_max(const std::string& name, double measured, double tolerance) {
        add(name, measured < tolerance, measured, tolerance);
    }
};

// Length of the permutation cycle through label 0.
unsigned cycle_length(const std::vector<unsigned>& image) {
    unsigned m = 0, len = 0;
    do {
        m = image.at(m);
        ++len;
    } while (m != 0 && len <= image.size());
    return len;
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + cfg.out_path);
    out << text;
}

}  // namespace

void RunConfig::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw ConfigError("qubits must be in [1, " + std::to_string(kMaxQubits) + "]");
    if (steps_per_cycle < 64) throw ConfigError("steps must be >= 64");
    if (cycles < 1) throw ConfigError("cycles must be >= 1");
    if (fd_step < 1e-7 || fd_step > 1e-2) throw ConfigError("fd-step must be in [1e-7, 1e-2]");
    if (!std::isfinite(lambda0)) throw ConfigError("lambda0 must be finite");
    if (command == Command::Track && format == OutputFormat::Json)
        throw ConfigError("track emits CSV only");
}

Json complex_json(const Complex& z) {
    return Json::array({z.real(), z.imag()});
}

Json matrix_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

namespace {

Json analytic_spectrum_json(int n, double lambda0) {
    const unsigned dim = 1u << n;
    const PermutationRecord rec = permutation_record(n);
    Json j;
    Json angles = Json::array(), sigma = Json::array();
    for (unsigned m = 0; m < dim; ++m) {
        angles.push_back(eigenangle(n, m, lambda0));
        sigma.push_back(complex_json(Complex(sigma_phase(n, m), 0.0)));
    }
    j["eigenangles_at_lambda0"] = angles;
    j["permutation"] = rec.image;
    j["windings"] = rec.windings;
    j["sigma"] = sigma;
    j["gamma_mp"] = complex_json(Complex(predict_gamma_mp(n), 0.0));
    return j;
}

}  // namespace

Json spectrum_report(const RunConfig& cfg) {
    Json j;
    j["schema"] = kSchemaVersion;
    if (cfg.with_timestamp) j["timestamp"] = iso_timestamp();
    j["config"] = config_json(cfg);
    j["analytic"] = analytic_spectrum_json(cfg.n_qubits, cfg.lambda0);
    return j;
}

std::string spectrum_csv(const RunConfig& cfg) {
    const unsigned dim = 1u << cfg.n_qubits;
    const PermutationRecord rec = permutation_record(cfg.n_qubits);
    std::ostringstream out;
    out << "m,eigenangle,successor,winding,sigma\n";
    for (unsigned m = 0; m < dim; ++m) {
        out << m << ',' << fmt_double(eigenangle(cfg.n_qubits, m, cfg.lambda0)) << ','
            << rec.image[m] << ',' << rec.windings[m] << ',' << sigma_phase(cfg.n_qubits, m)
            << '\n';
    }
    return out.str();
}

void track_csv(const RunConfig& cfg, std::ostream& out) {
    const Eigen::Index dim = Eigen::Index{1} << cfg.n_qubits;
    const long long total = static_cast<long long>(cfg.steps_per_cycle) * cfg.cycles + 1;
    if (total * dim * dim * 16 > (1ll << 30))
        throw ConfigError("track: grid times dimension too large to hold in memory; "
                          "reduce steps, cycles or qubits");

    SweepOptions options;
    options.steps_per_cycle = cfg.steps_per_cycle;
    options.cycles = cfg.cycles;
    options.lambda0 = cfg.lambda0;
    options.store_vectors = true;
    const SpectralFlow flow = sweep_standard(cfg.n_qubits, options);

    out << "step,lambda,track_id,eigenangle_unwrapped,analytic_m,match_quality\n";
    for (int k = 0; k < flow.total_points(); ++k) {
        // Comparison basis at the range-reduced lambda, so the final point of
        // each cycle is matched against the lambda0 basis.
        const double lambda_red =
            cfg.lambda0 + kTwoPi * (k % cfg.steps_per_cycle) / cfg.steps_per_cycle;
        const ComplexMatrix overlaps =
            analytic_basis(cfg.n_qubits, lambda_red).adjoint() * flow.vectors[k];
        for (Eigen::Index t = 0; t < dim; ++t) {
            Eigen::Index best = 0;
            overlaps.col(t).cwiseAbs().maxCoeff(&best);
            out << k << ',' << fmt_double(flow.grid[k]) << ',' << t << ','
                << fmt_double(flow.angles[t][k]) << ',' << best << ','
                << fmt_double(flow.quality[t][k]) << '\n';
        }
    }
}

Json holonomy_report(const RunConfig& cfg) {
    const int n = cfg.n_qubits;
    const Eigen::Index dim = Eigen::Index{1} << n;

    const GaugeConnection conn = connection_analytic(n);
    const ComplexMatrix m_analytic = holonomy_analytic(n);
    const PermutationRecord rec = permutation_record(n);

    Json j;
    j["schema"] = kSchemaVersion;
    if (cfg.with_timestamp) j["timestamp"] = iso_timestamp();
    j["config"] = config_json(cfg);

    Json analytic;
    analytic["gauge_note"] = conn.gauge_note;
    analytic["connection_diag_max"] = conn.matrix.diagonal().cwiseAbs().maxCoeff();
    analytic["connection_hermiticity_error"] = hermiticity_error(conn.matrix);
    if (n >= 2) {
        const auto [top, lower] = connection_components(n);
        analytic["commutator_norm"] = linf_norm(top * lower - lower * top);
    }
    analytic["holonomy_unitarity_error"] = unitarity_error(m_analytic);
    analytic["gamma_mp_orbit_product"] =
        complex_json(gamma_mp_from_holonomy(Label(n, 0), m_analytic, rec));
    if (dim <= kMaxJsonDim) {
        analytic["connection"] = matrix_json(conn.matrix);
        analytic["holonomy"] = matrix_json(m_analytic);
    } else {
        analytic["matrices_omitted"] = true;
    }
    j["analytic"] = analytic;

    const GaugeConnection fd = connection_fd(n, cfg.lambda0 + 0.3, cfg.fd_step);
    const GaugeConnection fd_other = connection_fd(n, cfg.lambda0 + 4.1, cfg.fd_step);
    Json fdj;
    fdj["deviation_from_analytic"] = linf_norm(fd.matrix - conn.matrix);
    fdj["lambda_independence_deviation"] = linf_norm(fd.matrix - fd_other.matrix);
    fdj["antihermitian_residual"] = fd.antihermitian_residual;
    j["finite_difference"] = fdj;

    SweepOptions options;
    options.steps_per_cycle = cfg.steps_per_cycle;
    options.lambda0 = cfg.lambda0;
    const SpectralFlow flow = sweep_standard(n, options);
    const CycleResult cyc = extract_cycle(flow);
    Json numeric;
    numeric["deviation_from_analytic"] = linf_norm(cyc.holonomy - m_analytic);
    numeric["gamma_mp"] = complex_json(cyc.gamma_mp);
    numeric["min_match_quality"] = cyc.min_quality;
    if (dim <= kMaxJsonDim)
        numeric["holonomy"] = matrix_json(cyc.holonomy);
    else
        numeric["matrices_omitted"] = true;
    j["numeric"] = numeric;
    return j;
}

Json verify_report(const RunConfig& cfg, bool& all_pass) {
    const int n = cfg.n_qubits;
    const Eigen::Index dim = Eigen::Index{1} << n;

    const PermutationRecord rec = permutation_record(n);
    const int gamma_analytic = predict_gamma_mp(n);
    const GaugeConnection conn = connection_analytic(n);
    const ComplexMatrix m_analytic = holonomy_analytic(n);

    SweepOptions options;
    options.steps_per_cycle = cfg.steps_per_cycle;
    options.cycles = cfg.cycles;
    options.lambda0 = cfg.lambda0;
    const SpectralFlow flow = sweep_standard(n, options);
    const CycleResult cyc = extract_cycle(flow);

    int perm_mismatches = 0, winding_mismatches = 0;
    for (Eigen::Index t = 0; t < dim; ++t) {
        if (cyc.permutation[t] != rec.image[t]) ++perm_mismatches;
        if (cyc.windings[t] != rec.windings[t]) ++winding_mismatches;
    }

    double angle_dev = 0.0;
    for (Eigen::Index t = 0; t < dim; ++t)
        for (int k = 0; k < flow.total_points(); ++k)
            angle_dev = std::max(angle_dev,
                                 std::abs(circular_distance(
                                     flow.angles[t][k],
                                     eigenangle(n, static_cast<unsigned>(t), flow.grid[k]))));

    double sigma_dev = 0.0;
    for (Eigen::Index t = 0; t < dim; ++t)
        sigma_dev = std::max(
            sigma_dev,
            std::abs(cyc.sigma[t] - Complex(sigma_phase(n, static_cast<unsigned>(t)), 0.0)));

    const double holonomy_dev = linf_norm(cyc.holonomy - m_analytic);
    const double gamma_numeric_dev = std::abs(cyc.gamma_mp - Complex(gamma_analytic, 0.0));

    const GaugeConnection fd = connection_fd(n, cfg.lambda0 + 0.3, cfg.fd_step);
    const GaugeConnection fd_other = connection_fd(n, cfg.lambda0 + 4.1, cfg.fd_step);

    VerdictList verdicts;
    verdicts.add("permutation_matches_analytic", perm_mismatches == 0, perm_mismatches, 0);
    verdicts.add("windings_match_analytic", winding_mismatches == 0, winding_mismatches, 0);
    verdicts.add("permutation_single_cycle",
                 cycle_length(cyc.permutation) == static_cast<unsigned>(dim),
                 cycle_length(cyc.permutation), static_cast<double>(dim));
    verdicts.add_max("eigenangles_match_closed_form", angle_dev, 1e-9);
    verdicts.add_max("holonomy_numeric_vs_analytic", holonomy_dev, 1e-6);
    verdicts.add_max("holonomy_unitary", cyc.holonomy_unitarity_error, 1e-6);
    verdicts.add_max("sigma_matches_prediction", sigma_dev, 1e-6);
    verdicts.add("gamma_mp_analytic_is_minus_one", gamma_analytic == -1,
                 std::abs(gamma_analytic + 1.0), 0);
    verdicts.add_max("gamma_mp_numeric_is_minus_one", gamma_numeric_dev, 1e-6);
    verdicts.add_max("connection_diag_zero", conn.matrix.diagonal().cwiseAbs().maxCoeff(),
                     1e-8);
    verdicts.add_max("connection_hermitian", hermiticity_error(conn.matrix), 1e-9);
    if (n >= 2) {
        const auto [top, lower] = connection_components(n);
        verdicts.add_max("connection_commutator", linf_norm(top * lower - lower * top), 1e-9);
    }
    verdicts.add_max("connection_fd_agreement", linf_norm(fd.matrix - conn.matrix), 1e-6);
    verdicts.add_max("connection_lambda_independent",
                     linf_norm(fd.matrix - fd_other.matrix), 1e-6);

    Json j;
    j["schema"] = kSchemaVersion;
    if (cfg.with_timestamp) j["timestamp"] = iso_timestamp();
    j["config"] = config_json(cfg);
    j["analytic"] = analytic_spectrum_json(n, cfg.lambda0);

    Json numeric;
    numeric["permutation"] = cyc.permutation;
    numeric["windings"] = cyc.windings;
    numeric["gamma_mp"] = complex_json(cyc.gamma_mp);
    numeric["max_eigenangle_deviation"] = angle_dev;
    numeric["max_holonomy_deviation"] = holonomy_dev;
    numeric["min_match_quality"] = cyc.min_quality;
    if (dim <= kMaxJsonDim)
        numeric["holonomy"] = matrix_json(cyc.holonomy);
    else
        numeric["matrices_omitted"] = true;
    j["numeric"] = numeric;

    j["verdicts"] = verdicts.entries;
    j["pass"] = verdicts.all_pass;
    all_pass = verdicts.all_pass;
    return j;
}

Json negative_control_report(const RunConfig& cfg, bool& expected_outcome) {
    const NegativeControlResult result = negative_control(2, cfg.steps_per_cycle);

    VerdictList verdicts;
    verdicts.add("composite_spectrum_degenerate", result.degeneracy_detected,
                 result.degeneracy_detected ? 1 : 0, 1);

    Json j;
    j["schema"] = kSchemaVersion;
    if (cfg.with_timestamp) j["timestamp"] = iso_timestamp();
    j["config"] = config_json(cfg);

    Json outcome;
    outcome["degeneracy_detected"] = result.degeneracy_detected;
    if (result.degeneracy_detected) {
        outcome["first_degenerate_lambda"] = result.first_degenerate_lambda;
        outcome["first_degenerate_grid_index"] = result.first_degenerate_index;
        outcome["eigenangles_at_detection"] = result.angles_at_detection;
        outcome["note"] = "anholonomy absent: expected";
    }
    j["outcome"] = outcome;
    j["verdicts"] = verdicts.entries;
    j["pass"] = verdicts.all_pass;
    expected_outcome = verdicts.all_pass;
    return j;
}

int run_command(const RunConfig& cfg) {
    cfg.validate();
    switch (cfg.command) {
        case Command::Spectrum: {
            if (cfg.format == OutputFormat::Csv)
                write_output(cfg, spectrum_csv(cfg));
            else
                write_output(cfg, spectrum_report(cfg).dump(2) + "\n");
            return 0;
        }
        case Command::Track: {
            std::ostringstream out;
            track_csv(cfg, out);
            write_output(cfg, out.str());
            return 0;
        }
        case Command::Holonomy: {
            write_output(cfg, holonomy_report(cfg).dump(2) + "\n");
            return 0;
        }
        case Command::Verify: {
            bool all_pass = false;
            const Json j = verify_report(cfg, all_pass);
            write_output(cfg, j.dump(2) + "\n");
            return all_pass ? 0 : 1;
        }
        case Command::NegativeControl: {
            bool expected = false;
            const Json j = negative_control_report(cfg, expected);
            write_output(cfg, j.dump(2) + "\n");
            return expected ? 0 : 1;
        }
    }
    return 2;
}

}  // namespace anholonomy
