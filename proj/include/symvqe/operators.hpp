// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file operators.hpp
 * @brief Physical observables as fermionic operators.
 */

#pragma once

#include <symvqe/fermion_operator.hpp>
#include <symvqe/molecular_system.hpp>

namespace symvqe {

/**
 * Electronic Hamiltonian
 *   H = E_core + sum_{pq,s} h_pq a+_{ps} a_{qs}
 *       + 1/2 sum_{pqrs,st} (pq|rs) a+_{ps} a+_{rt} a_{st} a_{qs}.
 */
[[nodiscard]] FermionOperator build_hamiltonian(const MolecularSystem& sys);

/** Total spin S^2 = S- S+ + Sz (Sz + 1). */
[[nodiscard]] FermionOperator build_s_squared(int n_spatial);

[[nodiscard]] FermionOperator build_s_z(int n_spatial);
[[nodiscard]] FermionOperator build_s_plus(int n_spatial);
[[nodiscard]] FermionOperator build_s_minus(int n_spatial);
[[nodiscard]] FermionOperator build_number(int n_spatial);

/** Electronic z-dipole -sum_{pq,s} d_pq a+_{ps} a_{qs}; throws when the system carries no dipole block. */
[[nodiscard]] FermionOperator build_dipole_z(const MolecularSystem& sys);

} // namespace symvqe
