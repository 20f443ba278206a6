#include "ghzcert/lhv.hpp"
#include "ghzcert/report.hpp"
#include "ghzcert/scan.hpp"
#include "ghzcert/state_io.hpp"
#include "ghzcert/states.hpp"
#include "ghzcert/tilted.hpp"
#include "ghzcert/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

namespace {

using namespace ghzcert;

// Exit codes: 0 = ran successfully, state nonlocal (or command succeeded),
// 1 = ran successfully, state locally explainable at this level,
// 2 = input or validation error.
constexpr int kExitNonlocal = 0;
constexpr int kExitOk = 0;
constexpr int kExitLocal = 1;
constexpr int kExitError = 2;

int run_certify(const std::string& state_path, bool machine) {
    const DensityMatrix state = read_state_file(state_path);
    const CertificateReport report = certify_state(state);
    std::cout << format_certificate(report, state_path, machine);
    return report.verdict == Verdict::LocallyExplainableAtThisLevel ? kExitLocal
                                                                    : kExitNonlocal;
}

NoiseKind parse_kind(const std::string& kind) {
    return kind == "white" ? NoiseKind::White : NoiseKind::Colored;
}

int run_scan_noise(const std::string& kind_name, int steps, bool machine) {
    const NoiseKind kind = parse_kind(kind_name);
    const std::vector<NoiseScanRow> rows = noise_scan(kind, steps);
    const double lp_threshold = noise_threshold(kind);
    const double wit_threshold = witness_noise_threshold(kind);

    if (machine) {
        std::cout << "tool=ghzcert\nversion=" << version << "\nscan=noise\nkind=" << kind_name
                  << "\nsteps=" << steps << "\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            const std::string key = "row" + std::to_string(i) + ".";
            std::cout << key << "p=" << format_double(r.p) << "\n"
                      << key << "epsilon=" << format_double(r.report.epsilon) << "\n"
                      << key << "witness=" << format_double(r.report.witness_value) << "\n";
            for (int k = 0; k < 4; ++k)
                std::cout << key << "q" << k + 1 << "=" << format_double(r.report.quadruple[k])
                          << "\n";
            std::cout << key << "feasible=" << (r.report.lp_feasible ? "true" : "false") << "\n";
        }
        std::cout << "witness_threshold=" << format_double(wit_threshold) << "\n"
                  << "threshold=" << format_double(lp_threshold) << "\n"
                  << "threshold_tolerance=1e-06\n";
    } else {
        std::printf("ghzcert %s\nnoise scan: kind=%s steps=%d\n", version, kind_name.c_str(),
                    steps);
        std::printf("%10s %14s %14s %10s %10s %10s %10s %10s\n", "p", "epsilon", "witness", "q1",
                    "q2", "q3", "q4", "feasible");
        for (const auto& r : rows) {
            std::printf("%10.6f %14.9f %14.9f %10.7f %10.7f %10.7f %10.7f %10s\n", r.p,
                        r.report.epsilon, r.report.witness_value, r.report.quadruple[0],
                        r.report.quadruple[1], r.report.quadruple[2], r.report.quadruple[3],
                        r.report.lp_feasible ? "yes" : "no");
        }
        std::printf("threshold (witness 4*eps-1=0): p* = %.6f ± 1e-6\n", wit_threshold);
        std::printf("threshold (LP): p* = %.6f ± 1e-6\n", lp_threshold);
    }
    return kExitOk;
}

int run_scan_angles(int grid_n, bool machine) {
    const std::vector<AngleScanPoint> points = angle_scan(grid_n);
    size_t infeasible = 0;
    for (const auto& pt : points)
        if (!pt.feasible) ++infeasible;

    if (machine) {
        std::cout << "tool=ghzcert\nversion=" << version << "\nscan=angles\ngrid=" << grid_n
                  << "\n";
        for (size_t i = 0; i < points.size(); ++i) {
            const auto& pt = points[i];
            const std::string key = "row" + std::to_string(i) + ".";
            std::cout << key << "theta=" << format_double(pt.angles.theta) << "\n"
                      << key << "alpha=" << format_double(pt.angles.alpha) << "\n"
                      << key << "beta=" << format_double(pt.angles.beta) << "\n"
                      << key << "constraint=" << format_double(pt.constraint_value) << "\n"
                      << key << "feasible=" << (pt.feasible ? "true" : "false") << "\n";
        }
        std::cout << "infeasible_count=" << infeasible << "\ntotal=" << points.size() << "\n";
    } else {
        std::printf("ghzcert %s\nangle scan: grid=%d (%zu points)\n", version, grid_n,
                    points.size());
        std::printf("%12s %12s %12s %24s %10s\n", "theta", "alpha", "beta",
                    "cos(th)+sin(al)sin(be)", "feasible");
        for (const auto& pt : points) {
            std::printf("%12.8f %12.8f %12.8f %24.12f %10s\n", pt.angles.theta, pt.angles.alpha,
                        pt.angles.beta, pt.constraint_value, pt.feasible ? "yes" : "no");
        }
        std::printf("nonlocality-exhibiting (infeasible) points: %zu of %zu\n", infeasible,
                    points.size());
    }
    return kExitOk;
}

int run_trace_distance(const std::string& path_a, const std::string& path_b) {
    const DensityMatrix a = read_state_file(path_a);
    const DensityMatrix b = read_state_file(path_b);
    if (a.dim() != b.dim()) {
        std::cerr << "error: dimension mismatch: " << a.dim() << " vs " << b.dim() << "\n";
        return kExitError;
    }
    std::cout << format_double(trace_distance(a, b)) << "\n";
    return kExitOk;
}

int run_make_state(const std::string& kind, bool p_given, double p, const std::string& out_path) {
    if (kind == "ghz") {
        if (p_given) {
            std::cerr << "error: --p applies only to white or colored noise states\n";
            return kExitError;
        }
        write_state_file(out_path, ghz_state(), "GHZ state");
        std::cout << "wrote " << out_path << " (kind=ghz)\n";
        return kExitOk;
    }
    if (!p_given) {
        std::cerr << "error: --p is required for kind=" << kind << "\n";
        return kExitError;
    }
    const DensityMatrix state = noise_state(parse_kind(kind), p);
    write_state_file(out_path, state, kind + " noise, p = " + format_double(p));
    std::cout << "wrote " << out_path << " (kind=" << kind << " p=" << format_double(p) << ")\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GHZ nonlocality certification toolkit"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    auto* certify = app.add_subcommand("certify", "Certify a state file");
    std::string state_path;
    bool certify_machine = false;
    certify->add_option("--state", state_path, "State file to certify")->required();
    certify->add_flag("--machine", certify_machine, "key=value output");

    auto* scan_noise = app.add_subcommand("scan-noise", "Sweep a noise family and locate p*");
    std::string noise_kind;
    int steps = 11;
    bool noise_machine = false;
    scan_noise->add_option("--kind", noise_kind, "white or colored")
        ->required()
        ->check(CLI::IsMember({"white", "colored"}));
    scan_noise->add_option("--steps", steps, "grid points in p")->check(CLI::Range(2, 1000000));
    scan_noise->add_flag("--machine", noise_machine, "key=value output");

    auto* scan_angles = app.add_subcommand("scan-angles", "Map LP feasibility over tilt angles");
    int grid_n = 21;
    bool angles_machine = false;
    scan_angles->add_option("--grid", grid_n, "lattice points per axis")
        ->check(CLI::Range(2, 10000));
    scan_angles->add_flag("--machine", angles_machine, "key=value output");

    auto* tdist = app.add_subcommand("trace-distance", "Trace distance between two state files");
    std::string path_a;
    std::string path_b;
    tdist->add_option("--a", path_a, "first state file")->required();
    tdist->add_option("--b", path_b, "second state file")->required();

    auto* make_state = app.add_subcommand("make-state", "Write a GHZ or noise state file");
    std::string make_kind;
    double purity = 0.0;
    std::string out_path;
    make_state->add_option("--kind", make_kind, "ghz, white or colored")
        ->required()
        ->check(CLI::IsMember({"ghz", "white", "colored"}));
    auto* p_opt = make_state->add_option("--p", purity, "purity parameter in [0,1]")
                      ->check(CLI::Range(0.0, 1.0));
    make_state->add_option("--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (certify->parsed()) return run_certify(state_path, certify_machine);
        if (scan_noise->parsed()) return run_scan_noise(noise_kind, steps, noise_machine);
        if (scan_angles->parsed()) return run_scan_angles(grid_n, angles_machine);
        if (tdist->parsed()) return run_trace_distance(path_a, path_b);
        if (make_state->parsed())
            return run_make_state(make_kind, p_opt->count() > 0, purity, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
