// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/reference_circuit.hpp>

#include <sstream>
#include <stdexcept>

namespace symvqe {

GateSequence compile_reference_circuit(const StateSpec& spec) {
    if (spec.single_determinant) return {};
    if (spec.m == spec.e) throw std::invalid_argument("reference circuit needs m != e");
    if (spec.m < 0 || spec.e < 0) throw std::invalid_argument("reference circuit needs an open-shell pair");
    const int n = spec.n_spatial;
    const int e = spec.e, m = spec.m, eb = spec.e + n, mb = spec.m + n;
    GateSequence seq;
    if (spec.spin == SpinState::Triplet) seq.push_back({GateKind::X, eb});
    seq.push_back({GateKind::X, e});
    seq.push_back({GateKind::X, m});
    seq.push_back({GateKind::H, eb});
    seq.push_back({GateKind::CX, mb, eb});
    seq.push_back({GateKind::CX, e, eb});
    seq.push_back({GateKind::CX, m, eb});
    return seq;
}

void apply_circuit(Statevector& psi, const GateSequence& seq) {
    for (const auto& g : seq) apply_gate(psi, g);
}

Statevector prepare_reference(const StateSpec& spec) {
    Statevector psi = Statevector::basis_state(2 * spec.n_spatial, spec.hf.bits);
    apply_circuit(psi, compile_reference_circuit(spec));
    return psi;
}

GateSequence inverse(const GateSequence& seq) { return GateSequence(seq.rbegin(), seq.rend()); }

std::string to_netlist(const GateSequence& seq) {
    std::ostringstream ss;
    for (const auto& g : seq) {
        switch (g.kind) {
        case GateKind::X: ss << "X q" << g.target; break;
        case GateKind::H: ss << "H q" << g.target; break;
        case GateKind::CX: ss << "CX q" << g.control << " q" << g.target; break;
        }
        ss << '\n';
    }
    return ss.str();
}

} // namespace symvqe
