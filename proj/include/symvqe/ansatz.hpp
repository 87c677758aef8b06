// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ansatz.hpp
 * @brief Symmetry-filtered excitation pool, parameter tying and the factorized unitary.
 *
 * A generator with annihilation set {i, j} and creation set {a, b} stands for
 *   kappa = a+_a a+_b a_j a_i - h.c.
 * (indices ascending within each set). A group shares one parameter theta
 * and contributes exp(theta * sum_k c_k kappa_k) to the unitary.
 */

#pragma once

#include <symvqe/fermion_operator.hpp>
#include <symvqe/molecular_system.hpp>
#include <symvqe/pauli.hpp>
#include <symvqe/statevector.hpp>
#include <symvqe/symmetry.hpp>

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <vector>

namespace symvqe {

struct ExcitationGenerator {
    std::vector<int> annihilate;  ///< flat indices, ascending
    std::vector<int> create;      ///< flat indices, ascending
    bool acts_on_a = false;
    bool acts_on_b = false;

    [[nodiscard]] int rank() const noexcept { return static_cast<int>(create.size()); }
    /** a+_{c0} a+_{c1} ... a_{a1} a_{a0} */
    [[nodiscard]] FermionOperator excitation() const;
    [[nodiscard]] FermionOperator kappa() const;
    /** Sorted annihilation indices followed by sorted creation indices. */
    [[nodiscard]] std::vector<int> lexical_key() const;
    [[nodiscard]] std::string to_string(int n_spatial) const;

    friend bool operator==(const ExcitationGenerator&, const ExcitationGenerator&) = default;
};

enum class TyingScheme : std::uint8_t {
    /** One parameter per spin-free (singlet) excitation operator. */
    SpinAdapted,
    /** One parameter per generator and its spin-complement image. */
    SpinComplement,
};

[[nodiscard]] TyingScheme parse_tying(const std::string& text);
[[nodiscard]] std::string to_string(TyingScheme scheme);

struct ExcitationGroup {
    std::vector<ExcitationGenerator> generators;
    std::vector<double> coefficients;
    std::string class_tag;  ///< 1b-caseI, 1b-caseII, 2b-caseI, 2b-caseII or 2b-paired
    FermionOperator kappa;  ///< sum of coefficients[k] * generators[k].kappa()

    [[nodiscard]] int rank() const noexcept { return generators.empty() ? 0 : generators.front().rank(); }
    [[nodiscard]] std::vector<int> lexical_key() const;
};

struct Ansatz {
    std::vector<ExcitationGroup> groups;
    int reps = 1;
    int n_spatial = 0;
    TyingScheme scheme = TyingScheme::SpinAdapted;

    [[nodiscard]] std::size_t parameter_count() const noexcept {
        return groups.size() * static_cast<std::size_t>(reps);
    }
    /** Group used by parameter k. */
    [[nodiscard]] const ExcitationGroup& group_for(std::size_t k) const { return groups.at(k % groups.size()); }
};

/**
 * Spin-preserving singles and doubles whose irrep product is totally
 * symmetric and which act non-trivially on phi_A or phi_B. A generator and
 * its adjoint are kept once, with the union of their action flags.
 */
[[nodiscard]] std::vector<ExcitationGenerator> enumerate_pool(const StateSpec& spec, const MolecularSystem& sys);

/**
 * Groups the pool. Throws std::logic_error when the pool is not closed
 * under the spin flip. With SpinComplement, generators that are odd under
 * the flip cancel against their image and are dropped.
 */
[[nodiscard]] std::vector<ExcitationGroup> tie_parameters(const std::vector<ExcitationGenerator>& pool,
                                                          const StateSpec& spec,
                                                          TyingScheme scheme = TyingScheme::SpinAdapted);

/** One-body groups first, then by lexical key; throws for reps < 1 or no groups. */
[[nodiscard]] Ansatz build_ansatz(std::vector<ExcitationGroup> groups, int reps, int n_spatial,
                                  TyingScheme scheme = TyingScheme::SpinAdapted);

/** pool -> tie -> build in one step. */
[[nodiscard]] Ansatz build_ansatz(const StateSpec& spec, const MolecularSystem& sys, int reps,
                                  TyingScheme scheme = TyingScheme::SpinAdapted);

/** "group <id> class <tag> θ<k>: <c> <generator>; ..." one line per parameter. */
[[nodiscard]] std::string dump_ansatz(const Ansatz& ansatz);

/** Spin-conserving singles and doubles from the closed-shell occupied to the virtual spin-orbitals. */
[[nodiscard]] int unrestricted_uccsd_count(int n_spatial, int n_electrons);

/** exp(theta G) for one group, either as commuting Pauli rotations or as exact block exponentials. */
class GroupExponential {
public:
    GroupExponential(const FermionOperator& kappa, int n_qubits);

    void apply(double theta, Statevector& psi) const;
    /** out = G psi */
    void apply_generator(const Statevector& psi, Statevector& out) const { generator_.apply(psi, out); }
    [[nodiscard]] bool uses_pauli_rotations() const noexcept { return commuting_; }
    [[nodiscard]] const PauliSum& pauli_sum() const noexcept { return pauli_; }

private:
    struct Block {
        std::vector<std::size_t> index;
        Eigen::MatrixXcd vectors;
        Eigen::VectorXd values;
    };

    PauliSum pauli_;
    CompiledOperator generator_;
    bool commuting_ = true;
    std::vector<std::pair<PauliString, double>> rotations_;
    std::vector<Block> blocks_;
};

/** The compiled parametrized unitary. */
class AnsatzCircuit {
public:
    explicit AnsatzCircuit(const Ansatz& ansatz);

    [[nodiscard]] std::size_t parameter_count() const noexcept { return parameter_count_; }
    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const GroupExponential& exponential(std::size_t k) const {
        return *exps_.at(k % exps_.size());
    }

    /** psi <- U(theta) psi; throws on length mismatch. */
    void apply(const std::vector<double>& theta, Statevector& psi) const;

private:
    int n_qubits_ = 0;
    std::size_t parameter_count_ = 0;
    std::vector<std::shared_ptr<const GroupExponential>> exps_;
};

[[nodiscard]] Statevector apply_ansatz(const AnsatzCircuit& circuit, const std::vector<double>& theta,
                                       const Statevector& psi0);

} // namespace symvqe
