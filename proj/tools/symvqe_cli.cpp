// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/fci.hpp>
#include <symvqe/reference_circuit.hpp>
#include <symvqe/scan.hpp>
#include <symvqe/vqe.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRunFailure = 1;
constexpr int kExitConfig = 2;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::pair<int, int> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--pair expects m,e");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

int run_solve(const std::string& system_path, const std::string& sigma_text, const std::string& spin_text, int reps,
              const std::string& tying, const std::string& pair, bool single_det, const std::string& trace_path,
              bool print_circuit, bool print_ansatz) {
    using namespace symvqe;
    MolecularSystem sys;
    StateSpec spec;
    VqeOptions opt;
    try {
        sys = parse_system(system_path);
        opt.reps = reps;
        opt.tying = parse_tying(tying);
        if (!pair.empty()) opt.reference.pair = parse_pair(pair);
        opt.reference.allow_single_determinant = single_det;
        spec = build_reference(parse_irrep(sigma_text, sys.point_group), parse_spin(spin_text), sys,
                               hartree_fock_determinant(sys), opt.reference);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    try {
        const int nq = sys.n_qubits();
        if (print_circuit) std::cout << to_netlist(compile_reference_circuit(spec));
        if (print_ansatz) std::cout << dump_ansatz(build_ansatz(spec, sys, opt.reps, opt.tying));

        const FciSolution fci = solve(sys);
        const FciRoot& exact = sector_minimum(fci, spec.sigma, spec.spin);
        const Statevector target = fci.embed(exact);
        const CompiledSystem compiled(sys);
        const VqeResult r = minimize(compiled, spec, opt, &target);

        std::cout << "sector        " << sector_name(spec.sigma, spec.spin) << '\n';
        if (spec.single_determinant) {
            std::cout << "reference     hf " << spec.hf.to_string(nq) << '\n';
        } else {
            std::cout << "open shells   m=" << spec.m << " e=" << spec.e << '\n';
            std::cout << "phi_A         " << spec.phi_a.to_string(nq) << '\n';
            std::cout << "phi_B         " << spec.phi_b.to_string(nq) << '\n';
        }
        std::cout << "groups        " << r.group_count << " x " << opt.reps << " reps = " << r.parameters.size()
                  << " parameters\n";
        std::cout << "e_reference   " << fmt(r.reference_energy) << '\n';
        std::cout << "e_vqe         " << fmt(r.energy) << '\n';
        std::cout << "e_fci         " << fmt(exact.energy) << '\n';
        std::cout << "delta_e       " << fmt(r.energy - exact.energy) << '\n';
        std::cout << "s2            " << fmt(std::abs(r.s2) < 1e-14 ? 0.0 : r.s2) << '\n';
        if (r.dipole_z) std::cout << "mu_vqe        " << fmt(*r.dipole_z) << '\n';
        if (exact.dipole_z) std::cout << "mu_fci        " << fmt(*exact.dipole_z) << '\n';
        std::cout << "overlap2      " << fmt(std::norm(overlap(r.final_state, target))) << '\n';
        std::cout << "iterations    " << r.iterations << " (" << to_string(r.status) << ")\n";
        if (!trace_path.empty()) {
            std::ofstream out(trace_path);
            if (!out) throw std::runtime_error("cannot write '" + trace_path + "'");
            out << trace_csv(r.trace);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRunFailure;
    }
}

int run_oracle(const std::string& system_path) {
    using namespace symvqe;
    MolecularSystem sys;
    try {
        sys = parse_system(system_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    try {
        std::cout << oracle_csv(solve(sys));
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRunFailure;
    }
}

int run_scan_cmd(const std::string& config_path, bool force, int jobs) {
    using namespace symvqe;
    ScanConfig cfg;
    try {
        cfg = parse_scan_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    try {
        ScanRunOptions opt{force, jobs, &std::cerr};
        const ScanReport rep = run_scan(cfg, opt);
        std::cerr << "completed " << rep.completed << ", skipped " << rep.skipped << ", failed " << rep.failed
                  << ", unconverged " << rep.unconverged << '\n';
        return rep.failed ? kExitRunFailure : kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRunFailure;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry-adapted state-specific VQE"};
    app.require_subcommand(1);

    std::string config;
    bool force = false;
    int jobs = 1;
    auto* scan = app.add_subcommand("scan", "Run a geometry x sector scan");
    scan->add_option("--config", config, "Scan config file")->required();
    scan->add_flag("--force", force, "Recompute rows that already exist");
    scan->add_option("--jobs", jobs, "Parallel runs")->check(CLI::PositiveNumber);

    std::string system, sigma, spin, tying = "spin-adapted", pair, trace;
    int reps = 2;
    bool single_det = false, print_circuit = false, print_ansatz = false;
    auto* solve = app.add_subcommand("solve", "Optimize one sector");
    solve->add_option("--system", system, "Integral dump")->required();
    solve->add_option("--sigma", sigma, "Target irrep, e.g. B1")->required();
    solve->add_option("--spin", spin, "0 (singlet) or 1 (triplet)")->required();
    solve->add_option("--reps", reps, "Circuit repetitions")->check(CLI::PositiveNumber);
    solve->add_option("--tying", tying, "spin-adapted or spin-complement");
    solve->add_option("--pair", pair, "Open-shell orbitals m,e (0-based)");
    solve->add_flag("--single-determinant", single_det, "Use the HF determinant for the totally symmetric singlet");
    solve->add_option("--trace", trace, "Write the optimizer trace CSV here");
    solve->add_flag("--print-circuit", print_circuit, "Print the reference-preparation netlist");
    solve->add_flag("--print-ansatz", print_ansatz, "Print the excitation groups");

    std::string oracle_system;
    auto* oracle = app.add_subcommand("oracle", "Print all FCI roots");
    oracle->add_option("--system", oracle_system, "Integral dump")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*scan) return run_scan_cmd(config, force, jobs);
    if (*solve) {
        return run_solve(system, sigma, spin, reps, tying, pair, single_det, trace, print_circuit, print_ansatz);
    }
    return run_oracle(oracle_system);
}
