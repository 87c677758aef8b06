// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file symmetry.hpp
 * @brief Determinant labels and symmetry-adapted reference selection.
 */

#pragma once

#include <symvqe/molecular_system.hpp>
#include <symvqe/statevector.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symvqe {

/** Occupation bitstring; bit q is flat spin-orbital q (up block low, down block high). */
struct Determinant {
    std::uint64_t bits = 0;

    [[nodiscard]] bool occupied(int q) const noexcept { return (bits >> q) & 1U; }
    [[nodiscard]] int electron_count() const noexcept { return std::popcount(bits); }
    /** 2 S_z, i.e. n_up - n_down. */
    [[nodiscard]] int two_s_z(int n_spatial) const noexcept;
    [[nodiscard]] std::string to_string(int n_qubits) const;

    friend auto operator<=>(const Determinant&, const Determinant&) = default;
};

enum class SpinState : std::uint8_t { Singlet = 0, Triplet = 1 };

[[nodiscard]] inline int spin_quantum_number(SpinState s) noexcept { return s == SpinState::Singlet ? 0 : 1; }
[[nodiscard]] inline double s_squared_value(SpinState s) noexcept {
    const double S = spin_quantum_number(s);
    return S * (S + 1.0);
}
[[nodiscard]] SpinState parse_spin(const std::string& text);
[[nodiscard]] std::string sector_name(IrrepLabel sigma, SpinState spin);

/** XOR of the irreps of all occupied spin-orbitals. */
[[nodiscard]] IrrepLabel determinant_irrep(Determinant d, const std::vector<IrrepLabel>& irreps);

/** Lowest n_electrons/2 spatial orbitals doubly occupied; throws for an odd electron count. */
[[nodiscard]] Determinant hartree_fock_determinant(const MolecularSystem& sys);

/** Swaps the spin labels of spatial orbitals m and e. */
[[nodiscard]] Determinant spin_complement(Determinant d, int m, int e, int n_spatial) noexcept;

struct StateSpec {
    IrrepLabel sigma;
    SpinState spin = SpinState::Singlet;
    int m = -1;  ///< vacated doubly occupied orbital
    int e = -1;  ///< populated virtual orbital
    int n_spatial = 0;
    Determinant hf;
    Determinant phi_a;  ///< holds e-up and m-down among the open shells
    Determinant phi_b;  ///< holds m-up and e-down among the open shells
    bool single_determinant = false;
};

class SectorUnreachable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OrbitalPair {
    int m = 0;
    int e = 0;
    double gap = 0.0;  ///< h1[e][e] - h1[m][m]
};

/**
 * All (m, e) with m doubly occupied and e empty in hf and irrep(m) x irrep(e) == sigma,
 * sorted by gap, then by descending m, then by ascending e.
 */
[[nodiscard]] std::vector<OrbitalPair> candidate_pairs(const MolecularSystem& sys, Determinant hf,
                                                       IrrepLabel sigma);

struct ReferenceOptions {
    /** Use hf itself for the totally symmetric singlet. */
    bool allow_single_determinant = false;
    /** Force the open-shell pair instead of the smallest-gap choice. */
    std::optional<std::pair<int, int>> pair;
};

[[nodiscard]] StateSpec build_reference(IrrepLabel sigma, SpinState spin, const MolecularSystem& sys,
                                        Determinant hf, const ReferenceOptions& options = {});

/**
 * Probability weight on determinants with the given electron count,
 * S_z = 0 and spatial symmetry sigma.
 */
[[nodiscard]] double sector_weight(const Statevector& psi, const std::vector<IrrepLabel>& irreps,
                                   int n_electrons, IrrepLabel sigma);

} // namespace symvqe
