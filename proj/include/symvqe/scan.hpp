// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scan.hpp
 * @brief Geometry x sector scans with FCI comparison.
 *
 * Config file (one "key = value" per line, '#' starts a comment):
 *
 *   output_dir     = out/h2o
 *   reps           = 2
 *   tying          = spin-adapted
 *   tol_energy     = 1e-9
 *   tol_gradient   = 1e-7
 *   max_iterations = 2000
 *   sectors        = 1A1, 3A1, 1B1, 3B1
 *   geometry r0.9  = ../tests/data/h2o_r0.9.dump
 *   geometry r1.0  = ../tests/data/h2o_r1.0.dump
 *
 * Relative paths are resolved against the config file's directory.
 */

#pragma once

#include <symvqe/ansatz.hpp>
#include <symvqe/lbfgs.hpp>
#include <symvqe/symmetry.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace symvqe {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SectorLabel {
    SpinState spin = SpinState::Singlet;
    std::string irrep;  ///< resolved against each system's point group

    /** "1A1" -> singlet A1, "3B2" -> triplet B2. */
    [[nodiscard]] static SectorLabel parse(const std::string& text);
    [[nodiscard]] std::string to_string() const;
};

struct GeometryEntry {
    std::string tag;
    std::filesystem::path path;
};

struct ScanConfig {
    std::filesystem::path output_dir = "scan_out";
    int reps = 2;
    TyingScheme tying = TyingScheme::SpinAdapted;
    LbfgsOptions optimizer;
    std::vector<SectorLabel> sectors;
    std::vector<GeometryEntry> geometries;
};

/** Throws ConfigError on syntax errors, unknown keys, or missing geometries or sectors. */
[[nodiscard]] ScanConfig parse_scan_config(const std::filesystem::path& path);
[[nodiscard]] ScanConfig parse_scan_config(std::istream& in, const std::filesystem::path& base_dir);

struct ScanRunOptions {
    bool force = false;
    int jobs = 1;
    std::ostream* log = nullptr;
};

struct ScanReport {
    int completed = 0;
    int skipped = 0;
    int failed = 0;
    int unconverged = 0;
};

/**
 * Runs every (geometry, sector) job. Writes <sector>.csv, trace/<geometry>_<sector>.csv,
 * overlap/<geometry>_<sector>.csv and oracle/<geometry>.csv below output_dir.
 * Input validation (unreadable files, unreachable sectors) throws ConfigError before any run.
 */
ScanReport run_scan(const ScanConfig& config, const ScanRunOptions& options = {});

/** Column header of the per-sector CSV. */
inline constexpr const char* kSectorCsvHeader = "geometry,e_vqe,e_fci,delta_e,mu_vqe,mu_fci,overlap2,converged";

} // namespace symvqe
