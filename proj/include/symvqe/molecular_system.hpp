// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file molecular_system.hpp
 * @brief Active-space molecular data and the integral dump format.
 *
 * Dump format (FCIDUMP-like, 1-based orbital indices):
 *
 *   &SYS NORB=<n> NELEC=<n> GROUP=<tag> EHF=<float>
 *   # free-form metadata comment (kept verbatim)
 *   ORBSYM=<label>,<label>,...
 *   <value> p q r s      two-electron integral (pq|rs), chemists' notation
 *   <value> p q 0 0      one-electron integral h_pq
 *   <value> p 0 0 0      diagonal z-dipole integral d_pp
 *   <value> p q -1 -1    z-dipole integral d_pq
 *   <value> 0 0 0 -1     constant dipole (nuclei plus frozen core electrons)
 *   <value> 0 0 0 0      core energy
 *
 * Integrals are stored once per symmetry-unique index tuple; absent
 * entries are zero.
 */

#pragma once

#include <symvqe/irrep.hpp>

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symvqe {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& what);
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Two-electron integrals (pq|rs) in chemists' notation with 8-fold symmetry. */
class TwoElectronIntegrals {
public:
    TwoElectronIntegrals() = default;
    explicit TwoElectronIntegrals(int n_orbitals);

    [[nodiscard]] int size() const noexcept { return n_; }

    [[nodiscard]] double operator()(int p, int q, int r, int s) const noexcept {
        return values_[index(p, q, r, s)];
    }

    /** Assigns all 8 permutations of (pq|rs). */
    void set(int p, int q, int r, int s, double value) noexcept;

private:
    [[nodiscard]] std::size_t index(int p, int q, int r, int s) const noexcept {
        const auto n = static_cast<std::size_t>(n_);
        return ((static_cast<std::size_t>(p) * n + q) * n + r) * n + s;
    }

    int n_ = 0;
    std::vector<double> values_;
};

struct MolecularSystem {
    int n_spatial = 0;
    int n_electrons = 0;
    PointGroup point_group = PointGroup::C1;
    double core_energy = 0.0;
    Eigen::MatrixXd h1;
    TwoElectronIntegrals h2;
    std::vector<IrrepLabel> irreps;
    std::optional<Eigen::MatrixXd> dipole_z;
    double nuclear_dipole_z = 0.0;
    std::optional<double> reference_energy;  ///< EHF from the header
    std::vector<std::string> comments;

    [[nodiscard]] int n_qubits() const noexcept { return 2 * n_spatial; }
};

[[nodiscard]] MolecularSystem parse_system(const std::filesystem::path& path);
[[nodiscard]] MolecularSystem parse_system(std::istream& in, const std::string& source_name);

/** Writes the dump format; values use 17 significant digits so parsing round-trips exactly. */
void write_system(std::ostream& out, const MolecularSystem& sys);

/**
 * Checks the MolecularSystem invariants (hermiticity of h1 and dipole,
 * 8-fold symmetry of h2, irrep count and group) and throws ValidationError.
 */
void validate(const MolecularSystem& sys, double tolerance = 1e-12);

/**
 * Closed-shell energy of the determinant with the lowest n_electrons/2
 * spatial orbitals doubly occupied, including core_energy.
 */
[[nodiscard]] double hartree_fock_energy(const MolecularSystem& sys);

} // namespace symvqe
