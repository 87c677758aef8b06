// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/pauli.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace symvqe {

namespace {

const std::array<Complex, 4> kIPow{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};

} // namespace

std::string PauliString::to_string(int n_qubits) const {
    std::string s;
    for (int q = n_qubits - 1; q >= 0; --q) {
        const bool bx = (x >> q) & 1, bz = (z >> q) & 1;
        s += bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
    }
    return s;
}

PauliString PauliString::parse(const std::string& letters) {
    PauliString p;
    const int n = static_cast<int>(letters.size());
    if (n > 64) throw std::invalid_argument("Pauli string longer than 64 qubits");
    for (int i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
        switch (letters[static_cast<std::size_t>(i)]) {
        case 'I': break;
        case 'X': p.x |= bit; break;
        case 'Z': p.z |= bit; break;
        case 'Y': p.x |= bit; p.z |= bit; break;
        default: throw std::invalid_argument("invalid Pauli letter in '" + letters + "'");
        }
    }
    return p;
}

std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b) noexcept {
    // i^{|xa&za|} X^xa Z^za i^{|xb&zb|} X^xb Z^zb, moving Z^za past X^xb.
    const PauliString c{a.x ^ b.x, a.z ^ b.z};
    int k = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) - std::popcount(c.x & c.z) +
            2 * std::popcount(a.z & b.x);
    k = ((k % 4) + 4) % 4;
    return {kIPow[static_cast<std::size_t>(k)], c};
}

void PauliSum::add(const PauliString& p, Complex c) {
    if (c == 0.0) return;
    auto it = terms_.try_emplace(p, 0.0).first;
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
}

Complex PauliSum::coefficient(const PauliString& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Complex{} : it->second;
}

PauliSum& PauliSum::prune(double tol) {
    std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) < tol; });
    return *this;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out;
    for (const auto& [p, c] : terms_) out.add(p, std::conj(c));
    return out;
}

bool PauliSum::approx_equal(const PauliSum& other, double tol) const {
    const PauliSum d = *this - other;
    return std::all_of(d.terms_.begin(), d.terms_.end(),
                       [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

bool PauliSum::has_real_coefficients(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [tol](const auto& kv) { return std::abs(kv.second.imag()) <= tol; });
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

PauliSum& PauliSum::operator*=(Complex s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    PauliSum out;
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_) {
            const auto [phase, pc] = multiply(pa, pb);
            out.add(pc, phase * ca * cb);
        }
    return out;
}

std::string PauliSum::to_string(int n_qubits) const {
    std::ostringstream ss;
    for (const auto& [p, c] : terms_) {
        char buf[80];
        std::snprintf(buf, sizeof buf, "(%.12g%+.12gi) ", c.real(), c.imag());
        ss << buf << p.to_string(n_qubits) << '\n';
    }
    return ss.str();
}

PauliSum jordan_wigner(const FermionOperator& op, int n_qubits) {
    if (n_qubits < 0 || n_qubits > 64) throw std::out_of_range("jordan_wigner: qubit count outside [0, 64]");
    PauliSum out;
    for (const auto& [ops, coef] : op.terms()) {
        PauliSum term(PauliString{}, coef);
        for (const auto& l : ops) {
            if (l.mode < 0 || l.mode >= n_qubits) {
                throw std::out_of_range("jordan_wigner: mode " + std::to_string(l.mode) +
                                        " outside register of " + std::to_string(n_qubits) + " qubits");
            }
            const std::uint64_t bit = std::uint64_t{1} << l.mode;
            const std::uint64_t below = bit - 1;
            // X_p Z_<p and Y_p Z_<p = i X_p Z_p Z_<p.
            PauliSum ladder(PauliString{bit, below}, 0.5);
            ladder.add(PauliString{bit, below | bit}, l.create ? Complex{0, -0.5} : Complex{0, 0.5});
            term = term * ladder;
        }
        out += term;
    }
    out.prune();
    return out;
}

} // namespace symvqe
