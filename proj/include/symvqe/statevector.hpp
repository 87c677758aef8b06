// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file statevector.hpp
 * @brief Dense statevector simulator.
 *
 * Basis index bit q is the occupation of qubit q (flat spin-orbital q).
 */

#pragma once

#include <symvqe/pauli.hpp>

#include <Eigen/SparseCore>

#include <cstdint>
#include <string>
#include <vector>

namespace symvqe {

class Statevector {
public:
    Statevector() = default;
    /** |0...0> on n_qubits qubits. */
    explicit Statevector(int n_qubits);

    [[nodiscard]] static Statevector basis_state(int n_qubits, std::uint64_t bits);
    [[nodiscard]] static Statevector from_amplitudes(int n_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amp_.size(); }
    [[nodiscard]] Complex& operator[](std::size_t i) noexcept { return amp_[i]; }
    [[nodiscard]] const Complex& operator[](std::size_t i) const noexcept { return amp_[i]; }
    [[nodiscard]] Complex* data() noexcept { return amp_.data(); }
    [[nodiscard]] const Complex* data() const noexcept { return amp_.data(); }
    [[nodiscard]] const std::vector<Complex>& amplitudes() const noexcept { return amp_; }

    [[nodiscard]] double norm() const noexcept;
    void normalize();

private:
    int n_qubits_ = 0;
    std::vector<Complex> amp_;
};

enum class GateKind : std::uint8_t { X, H, CX };

struct Gate {
    GateKind kind = GateKind::X;
    int target = 0;
    int control = -1;  ///< CX only

    friend bool operator==(const Gate&, const Gate&) = default;
};

/** Throws std::invalid_argument for out-of-range or coinciding qubits. */
void apply_gate(Statevector& psi, const Gate& gate);

/** psi <- exp(i theta P) psi = cos(theta) psi + i sin(theta) P psi. */
void apply_pauli_rotation(Statevector& psi, const PauliString& p, double theta);

/** <chi|psi>; throws on dimension mismatch. */
[[nodiscard]] Complex overlap(const Statevector& psi, const Statevector& chi);

/**
 * A PauliSum compiled to a sparse matrix over the full register. Rows and
 * columns are basis indices; products use a fixed summation order.
 */
class CompiledOperator {
public:
    using Matrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor, std::int64_t>;

    CompiledOperator() = default;
    CompiledOperator(const PauliSum& op, int n_qubits);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }

    /** out = O psi */
    void apply(const Statevector& psi, Statevector& out) const;
    [[nodiscard]] Statevector apply(const Statevector& psi) const;

    /** <chi|O|psi> */
    [[nodiscard]] Complex matrix_element(const Statevector& chi, const Statevector& psi) const;

private:
    int n_qubits_ = 0;
    Matrix m_;
};

/** <psi|O|psi>; throws std::domain_error when the imaginary residue exceeds 1e-10. */
[[nodiscard]] double expectation(const Statevector& psi, const CompiledOperator& op);
[[nodiscard]] double expectation(const Statevector& psi, const PauliSum& op);

} // namespace symvqe
