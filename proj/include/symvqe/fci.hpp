// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fci.hpp
 * @brief Exact diagonalization in the N-electron, S_z = 0 determinant space.
 */

#pragma once

#include <symvqe/molecular_system.hpp>
#include <symvqe/statevector.hpp>
#include <symvqe/symmetry.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symvqe {

struct FciRoot {
    double energy = 0.0;
    Eigen::VectorXd vector;  ///< amplitudes over FciSolution::basis
    IrrepLabel irrep;
    double s2 = 0.0;
    std::optional<double> dipole_z;  ///< electronic plus nuclear

    /** Nearest S with S(S+1) = s2, in units of 1/2 (i.e. 2S). */
    [[nodiscard]] int two_s() const noexcept;
};

struct FciSolution {
    int n_qubits = 0;
    std::vector<std::uint64_t> basis;
    std::vector<FciRoot> roots;  ///< ascending energy

    [[nodiscard]] Statevector embed(const FciRoot& root) const;
    [[nodiscard]] std::size_t dimension() const noexcept { return basis.size(); }
};

class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FciOptions {
    std::size_t max_dimension = 4096;
    double degeneracy_threshold = 1e-9;
};

/** All S_z = 0 determinants with n_electrons electrons, ascending by bit pattern. */
[[nodiscard]] std::vector<std::uint64_t> fci_basis(int n_spatial, int n_electrons);

/** Hamiltonian is assembled directly from the integrals, independently of the qubit mapping. */
[[nodiscard]] FciSolution solve(const MolecularSystem& sys, const FciOptions& options = {});

/** Lowest root with the given irrep and |s2 - S(S+1)| < 1e-6; throws std::out_of_range when empty. */
[[nodiscard]] const FciRoot& sector_minimum(const FciSolution& sol, IrrepLabel sigma, SpinState spin);
[[nodiscard]] const FciRoot& sector_minimum(const FciSolution& sol, IrrepLabel sigma, int spin);

/** "root,energy,irrep,s2,dipole_z" CSV with a header line. */
[[nodiscard]] std::string oracle_csv(const FciSolution& sol);

} // namespace symvqe
