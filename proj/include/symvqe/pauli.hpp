// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pauli.hpp
 * @brief Pauli strings, Pauli sums and the Jordan-Wigner map.
 *
 * A PauliString with masks (x, z) denotes i^{|x & z|} X^x Z^z, so a qubit
 * with both bits set carries Y. Its action on a basis state is
 *   P |b> = i^{|x & z|} (-1)^{|z & b|} |b ^ x>.
 */

#pragma once

#include <symvqe/fermion_operator.hpp>

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace symvqe {

struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    [[nodiscard]] bool is_identity() const noexcept { return (x | z) == 0; }
    [[nodiscard]] int weight() const noexcept { return std::popcount(x | z); }
    [[nodiscard]] bool commutes_with(const PauliString& o) const noexcept {
        return ((std::popcount(x & o.z) + std::popcount(z & o.x)) & 1) == 0;
    }

    /** Letters for qubits n_qubits-1 ... 0, e.g. "IXYZ". */
    [[nodiscard]] std::string to_string(int n_qubits) const;
    /** Parse letters in the same order as to_string. */
    [[nodiscard]] static PauliString parse(const std::string& letters);

    friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

/** a * b = phase * PauliString. */
[[nodiscard]] std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b) noexcept;

class PauliSum {
public:
    using TermMap = std::map<PauliString, Complex>;

    static constexpr double kPruneTolerance = 1e-14;

    PauliSum() = default;
    PauliSum(PauliString p, Complex c) { add(p, c); }

    void add(const PauliString& p, Complex c);
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] Complex coefficient(const PauliString& p) const;

    /** Removes terms with magnitude below tol. */
    PauliSum& prune(double tol = kPruneTolerance);

    [[nodiscard]] PauliSum adjoint() const;
    [[nodiscard]] bool approx_equal(const PauliSum& other, double tol = 1e-12) const;
    [[nodiscard]] bool has_real_coefficients(double tol = 1e-12) const;

    PauliSum& operator+=(const PauliSum& o);
    PauliSum& operator-=(const PauliSum& o);
    PauliSum& operator*=(Complex s);
    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
    friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
    friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
    friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

    [[nodiscard]] std::string to_string(int n_qubits) const;

private:
    TermMap terms_;
};

/**
 * a+_p -> 1/2 (X_p - i Y_p) Z_{p-1} ... Z_0 and a_p -> 1/2 (X_p + i Y_p) Z_{p-1} ... Z_0,
 * products expanded and collected, then pruned. Throws std::out_of_range
 * when a mode is not below n_qubits.
 */
[[nodiscard]] PauliSum jordan_wigner(const FermionOperator& op, int n_qubits);

} // namespace symvqe
