// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/statevector.hpp>

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace symvqe {

namespace {

constexpr double kImagTolerance = 1e-10;
const std::array<Complex, 4> kIPow{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};

void check_qubit(const Statevector& psi, int q) {
    if (q < 0 || q >= psi.n_qubits()) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " outside register of " +
                                    std::to_string(psi.n_qubits()));
    }
}

// P|b> = i^{|x&z|} (-1)^{|z&b|} |b^x>
Complex pauli_phase(const PauliString& p, std::uint64_t b) noexcept {
    const int k = std::popcount(p.x & p.z) + 2 * std::popcount(p.z & b);
    return kIPow[static_cast<std::size_t>(k & 3)];
}

} // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 0 || n_qubits > 30) throw std::invalid_argument("qubit count must be in [0, 30]");
    amp_.assign(std::size_t{1} << n_qubits, Complex{});
    amp_[0] = 1.0;
}

Statevector Statevector::basis_state(int n_qubits, std::uint64_t bits) {
    Statevector s(n_qubits);
    if (bits >= s.size()) throw std::invalid_argument("basis state outside register");
    s.amp_[0] = 0.0;
    s.amp_[bits] = 1.0;
    return s;
}

Statevector Statevector::from_amplitudes(int n_qubits, std::vector<Complex> amplitudes) {
    Statevector s(n_qubits);
    if (amplitudes.size() != s.size()) throw std::invalid_argument("amplitude count does not match register");
    s.amp_ = std::move(amplitudes);
    return s;
}

double Statevector::norm() const noexcept {
    double acc = 0.0;
    for (const auto& a : amp_) acc += std::norm(a);
    return std::sqrt(acc);
}

void Statevector::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
    for (auto& a : amp_) a /= n;
}

void apply_gate(Statevector& psi, const Gate& g) {
    check_qubit(psi, g.target);
    const std::size_t t = std::size_t{1} << g.target;
    switch (g.kind) {
    case GateKind::X:
        for (std::size_t b = 0; b < psi.size(); ++b)
            if (!(b & t)) std::swap(psi[b], psi[b | t]);
        break;
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        for (std::size_t b = 0; b < psi.size(); ++b) {
            if (b & t) continue;
            const Complex a0 = psi[b], a1 = psi[b | t];
            psi[b] = r * (a0 + a1);
            psi[b | t] = r * (a0 - a1);
        }
        break;
    }
    case GateKind::CX: {
        check_qubit(psi, g.control);
        if (g.control == g.target) throw std::invalid_argument("CX control equals target");
        const std::size_t c = std::size_t{1} << g.control;
        for (std::size_t b = 0; b < psi.size(); ++b)
            if ((b & c) && !(b & t)) std::swap(psi[b], psi[b | t]);
        break;
    }
    }
}

void apply_pauli_rotation(Statevector& psi, const PauliString& p, double theta) {
    if (theta == 0.0) return;
    const std::uint64_t reg = psi.size() - 1;
    if ((p.x | p.z) & ~reg) throw std::invalid_argument("Pauli string acts outside register");
    const double c = std::cos(theta), s = std::sin(theta);
    const Complex is{0.0, s};
    if (p.x == 0) {
        for (std::size_t b = 0; b < psi.size(); ++b) psi[b] *= c + is * pauli_phase(p, b);
        return;
    }
    const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(p.x));
    for (std::size_t b = 0; b < psi.size(); ++b) {
        if (b & top) continue;
        const std::size_t f = b ^ p.x;
        const Complex a = psi[b], af = psi[f];
        psi[b] = c * a + is * pauli_phase(p, f) * af;
        psi[f] = c * af + is * pauli_phase(p, b) * a;
    }
}

Complex overlap(const Statevector& psi, const Statevector& chi) {
    if (psi.size() != chi.size()) throw std::invalid_argument("overlap of statevectors with different dimensions");
    Complex acc{};
    for (std::size_t b = 0; b < psi.size(); ++b) acc += std::conj(chi[b]) * psi[b];
    return acc;
}

CompiledOperator::CompiledOperator(const PauliSum& op, int n_qubits) : n_qubits_(n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::uint64_t reg = dim - 1;
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Complex>>> by_x;
    for (const auto& [p, c] : op.terms()) {
        if ((p.x | p.z) & ~reg) throw std::invalid_argument("operator acts outside register");
        by_x[p.x].emplace_back(p.z, c * kIPow[static_cast<std::size_t>(std::popcount(p.x & p.z) & 3)]);
    }
    std::vector<Eigen::Triplet<Complex, std::int64_t>> trip;
    for (const auto& [x, zs] : by_x) {
        for (std::uint64_t b = 0; b < dim; ++b) {
            Complex v{};
            for (const auto& [z, c] : zs) v += (std::popcount(z & b) & 1) ? -c : c;
            if (std::abs(v) > 1e-15) {
                trip.emplace_back(static_cast<std::int64_t>(b ^ x), static_cast<std::int64_t>(b), v);
            }
        }
    }
    m_.resize(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
    m_.setFromTriplets(trip.begin(), trip.end());
    m_.makeCompressed();
}

void CompiledOperator::apply(const Statevector& psi, Statevector& out) const {
    if (psi.n_qubits() != n_qubits_) throw std::invalid_argument("operator and state registers differ");
    if (out.size() != psi.size()) out = Statevector(n_qubits_);
    const auto* outer = m_.outerIndexPtr();
    const auto* inner = m_.innerIndexPtr();
    const auto* val = m_.valuePtr();
    for (std::int64_t r = 0; r < m_.rows(); ++r) {
        Complex acc{};
        for (auto k = outer[r]; k < outer[r + 1]; ++k) acc += val[k] * psi[static_cast<std::size_t>(inner[k])];
        out[static_cast<std::size_t>(r)] = acc;
    }
}

Statevector CompiledOperator::apply(const Statevector& psi) const {
    Statevector out(n_qubits_);
    apply(psi, out);
    return out;
}

Complex CompiledOperator::matrix_element(const Statevector& chi, const Statevector& psi) const {
    if (psi.n_qubits() != n_qubits_ || chi.n_qubits() != n_qubits_) {
        throw std::invalid_argument("operator and state registers differ");
    }
    const auto* outer = m_.outerIndexPtr();
    const auto* inner = m_.innerIndexPtr();
    const auto* val = m_.valuePtr();
    Complex total{};
    for (std::int64_t r = 0; r < m_.rows(); ++r) {
        const Complex cr = chi[static_cast<std::size_t>(r)];
        if (cr == 0.0) continue;
        Complex acc{};
        for (auto k = outer[r]; k < outer[r + 1]; ++k) acc += val[k] * psi[static_cast<std::size_t>(inner[k])];
        total += std::conj(cr) * acc;
    }
    return total;
}

double expectation(const Statevector& psi, const CompiledOperator& op) {
    const Complex e = op.matrix_element(psi, psi);
    if (std::abs(e.imag()) > kImagTolerance) {
        throw std::domain_error("expectation value has imaginary part " + std::to_string(e.imag()) +
                                "; operator is not hermitian");
    }
    return e.real();
}

double expectation(const Statevector& psi, const PauliSum& op) {
    return expectation(psi, CompiledOperator(op, psi.n_qubits()));
}

} // namespace symvqe
