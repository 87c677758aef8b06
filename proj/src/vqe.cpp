// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/vqe.hpp>

#include <symvqe/operators.hpp>
#include <symvqe/reference_circuit.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace symvqe {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

CompiledSystem::CompiledSystem(MolecularSystem system)
    : sys(std::move(system)),
      hamiltonian(jordan_wigner(build_hamiltonian(sys), sys.n_qubits()), sys.n_qubits()),
      s_squared(jordan_wigner(build_s_squared(sys.n_spatial), sys.n_qubits()), sys.n_qubits()) {
    if (sys.dipole_z) dipole_z.emplace(jordan_wigner(build_dipole_z(sys), sys.n_qubits()), sys.n_qubits());
}

EnergyFunctional::EnergyFunctional(const AnsatzCircuit& circuit, Statevector reference,
                                   const CompiledOperator& hamiltonian)
    : circuit_(circuit), reference_(std::move(reference)), hamiltonian_(hamiltonian) {}

Statevector EnergyFunctional::state(const std::vector<double>& theta) const {
    return apply_ansatz(circuit_, theta, reference_);
}

double EnergyFunctional::energy(const std::vector<double>& theta) const {
    return expectation(state(theta), hamiltonian_);
}

double EnergyFunctional::energy_and_gradient(const std::vector<double>& theta, std::vector<double>& grad) const {
    Statevector psi = state(theta);
    Statevector lambda = hamiltonian_.apply(psi);
    const Complex e = overlap(lambda, psi);
    if (std::abs(e.imag()) > 1e-10) throw std::domain_error("energy has an imaginary part");
    grad.assign(theta.size(), 0.0);
    Statevector work(psi.n_qubits());
    // psi_k = U_k ... U_1 ref, lambda_k = U_{k+1}^+ ... U_K^+ H psi_K;  dE/dtheta_k = 2 Re <lambda_k| G_k |psi_k>.
    for (std::size_t k = theta.size(); k-- > 0;) {
        const auto& ex = circuit_.exponential(k);
        ex.apply_generator(psi, work);
        grad[k] = 2.0 * overlap(work, lambda).real();
        if (k == 0) break;
        ex.apply(-theta[k], psi);
        ex.apply(-theta[k], lambda);
    }
    return e.real();
}

VqeResult minimize(const CompiledSystem& compiled, const StateSpec& spec, const VqeOptions& options,
                   const Statevector* target) {
    const auto& sys = compiled.sys;
    auto groups = tie_parameters(enumerate_pool(spec, sys), spec, options.tying);
    Ansatz ansatz;
    if (groups.empty()) {
        // Nothing survives tying: the reference is evaluated as is.
        if (options.reps < 1) throw std::invalid_argument("reps must be at least 1");
        ansatz.reps = options.reps;
        ansatz.n_spatial = sys.n_spatial;
        ansatz.scheme = options.tying;
    } else {
        ansatz = build_ansatz(std::move(groups), options.reps, sys.n_spatial, options.tying);
    }
    const AnsatzCircuit circuit(ansatz);
    const Statevector reference = prepare_reference(spec);
    const EnergyFunctional functional(circuit, reference, compiled.hamiltonian);

    VqeResult res;
    res.spec = spec;
    res.group_count = ansatz.groups.size();
    res.reference_energy = expectation(reference, compiled.hamiltonian);

    IterationCallback callback;
    if (options.record_trace) {
        callback = [&](int it, const std::vector<double>& x, double f, const std::vector<double>& g) {
            const Statevector psi = functional.state(x);
            TraceEntry t;
            t.iteration = it;
            t.energy = f;
            t.grad_norm = 0.0;
            for (double v : g) t.grad_norm = std::max(t.grad_norm, std::abs(v));
            t.s2 = expectation(psi, compiled.s_squared);
            t.sector_weight = sector_weight(psi, sys.irreps, sys.n_electrons, spec.sigma);
            if (target) t.overlap2 = std::norm(overlap(psi, *target));
            res.trace.push_back(t);
        };
    }
    const auto lb = lbfgs_minimize(
        [&functional](const std::vector<double>& x, std::vector<double>& g) {
            return functional.energy_and_gradient(x, g);
        },
        std::vector<double>(circuit.parameter_count(), 0.0), options.optimizer, callback);

    res.parameters = lb.x;
    res.iterations = lb.iterations;
    res.evaluations = lb.evaluations;
    res.status = lb.status;
    res.final_state = functional.state(lb.x);
    res.energy = expectation(res.final_state, compiled.hamiltonian);
    res.s2 = expectation(res.final_state, compiled.s_squared);
    if (compiled.dipole_z) res.dipole_z = expectation(res.final_state, *compiled.dipole_z) + sys.nuclear_dipole_z;
    return res;
}

std::string trace_csv(const std::vector<TraceEntry>& trace) {
    std::ostringstream ss;
    ss << "iter,energy,grad_norm,s2,sector_weight,overlap2\n";
    for (const auto& t : trace) {
        ss << t.iteration << ',' << fmt(t.energy) << ',' << fmt(t.grad_norm) << ',' << fmt(t.s2) << ','
           << fmt(t.sector_weight) << ',' << (t.overlap2 ? fmt(*t.overlap2) : "") << '\n';
    }
    return ss.str();
}

} // namespace symvqe
