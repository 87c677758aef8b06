// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file reference_circuit.hpp
 * @brief Gate sequences preparing (|phi_A> +- |phi_B>)/sqrt(2) from the HF bitstring.
 */

#pragma once

#include <symvqe/statevector.hpp>
#include <symvqe/symmetry.hpp>

#include <string>
#include <vector>

namespace symvqe {

using GateSequence = std::vector<Gate>;

/**
 * Singlet: X(e) X(m) H(e+N) CX(e+N -> m+N) CX(e+N -> e) CX(e+N -> m), N = n_spatial.
 * Triplet: the same with a leading X(e+N).
 * A single-determinant spec yields an empty sequence.
 */
[[nodiscard]] GateSequence compile_reference_circuit(const StateSpec& spec);

/** Runs the compiled circuit on the HF basis state. */
[[nodiscard]] Statevector prepare_reference(const StateSpec& spec);

/** Gates in reverse order; every gate used here is self-inverse. */
[[nodiscard]] GateSequence inverse(const GateSequence& seq);

void apply_circuit(Statevector& psi, const GateSequence& seq);

/** One gate per line: "X q3", "H q7", "CX q7 q3" (control first). */
[[nodiscard]] std::string to_netlist(const GateSequence& seq);

} // namespace symvqe
