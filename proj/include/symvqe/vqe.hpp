// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file vqe.hpp
 * @brief State-specific VQE driver.
 */

#pragma once

#include <symvqe/ansatz.hpp>
#include <symvqe/lbfgs.hpp>
#include <symvqe/molecular_system.hpp>
#include <symvqe/statevector.hpp>
#include <symvqe/symmetry.hpp>

#include <optional>
#include <string>
#include <vector>

namespace symvqe {

/** Qubit images of the observables of one molecular system, compiled once and shared read-only. */
struct CompiledSystem {
    MolecularSystem sys;
    CompiledOperator hamiltonian;
    CompiledOperator s_squared;
    std::optional<CompiledOperator> dipole_z;  ///< electronic part

    explicit CompiledSystem(MolecularSystem system);
};

/** E(theta) = <ref| U(theta)^+ H U(theta) |ref> with adjoint-method gradients. */
class EnergyFunctional {
public:
    EnergyFunctional(const AnsatzCircuit& circuit, Statevector reference, const CompiledOperator& hamiltonian);

    [[nodiscard]] std::size_t parameter_count() const noexcept { return circuit_.parameter_count(); }
    [[nodiscard]] Statevector state(const std::vector<double>& theta) const;
    [[nodiscard]] double energy(const std::vector<double>& theta) const;
    /** Returns E and writes dE/dtheta into grad. */
    double energy_and_gradient(const std::vector<double>& theta, std::vector<double>& grad) const;

private:
    const AnsatzCircuit& circuit_;
    Statevector reference_;
    const CompiledOperator& hamiltonian_;
};

struct VqeOptions {
    int reps = 2;
    TyingScheme tying = TyingScheme::SpinAdapted;
    LbfgsOptions optimizer;
    ReferenceOptions reference;
    bool record_trace = true;
};

struct TraceEntry {
    int iteration = 0;
    double energy = 0.0;
    double grad_norm = 0.0;  ///< max-norm
    double s2 = 0.0;
    double sector_weight = 0.0;
    std::optional<double> overlap2;  ///< |<psi|target>|^2
};

struct VqeResult {
    StateSpec spec;
    double reference_energy = 0.0;  ///< energy at theta = 0
    double energy = 0.0;
    std::vector<double> parameters;
    std::size_t group_count = 0;
    int iterations = 0;
    int evaluations = 0;
    LbfgsStatus status = LbfgsStatus::MaxIterations;
    std::vector<TraceEntry> trace;
    Statevector final_state;
    double s2 = 0.0;
    std::optional<double> dipole_z;  ///< electronic plus nuclear

    [[nodiscard]] bool converged() const noexcept {
        return status == LbfgsStatus::EnergyConverged || status == LbfgsStatus::GradientConverged;
    }
};

/**
 * Quasi-Newton minimization from theta = 0. When target is given, the trace
 * records the squared overlap with it at every iteration. When no excitation
 * group survives tying the reference itself is the result.
 */
[[nodiscard]] VqeResult minimize(const CompiledSystem& compiled, const StateSpec& spec, const VqeOptions& options = {},
                                 const Statevector* target = nullptr);

/** "iter,energy,grad_norm,s2,sector_weight,overlap2" CSV with a header line. */
[[nodiscard]] std::string trace_csv(const std::vector<TraceEntry>& trace);

} // namespace symvqe
