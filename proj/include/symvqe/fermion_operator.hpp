// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fermion_operator.hpp
 * @brief Sums of products of fermionic ladder operators.
 *
 * Spin-orbitals are addressed by a flat index with the up block first:
 * flat = spatial for spin up, flat = spatial + n_spatial for spin down.
 * Terms are kept in canonical normal order (all creators left of all
 * annihilators, each run ascending by flat index), so two operators that
 * are equal as abstract operators compare equal term-by-term.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symvqe {

using Complex = std::complex<double>;

enum class Spin : std::uint8_t { Up, Down };

struct SpinOrbital {
    int spatial = 0;
    Spin spin = Spin::Up;

    [[nodiscard]] int flat(int n_spatial) const noexcept {
        return spin == Spin::Up ? spatial : spatial + n_spatial;
    }
    [[nodiscard]] static SpinOrbital from_flat(int flat, int n_spatial) noexcept {
        return flat < n_spatial ? SpinOrbital{flat, Spin::Up} : SpinOrbital{flat - n_spatial, Spin::Down};
    }
};

struct LadderOp {
    int mode = 0;
    bool create = false;

    friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

[[nodiscard]] inline LadderOp cre(int mode) noexcept { return {mode, true}; }
[[nodiscard]] inline LadderOp ann(int mode) noexcept { return {mode, false}; }

using LadderString = std::vector<LadderOp>;

class FermionOperator {
public:
    using TermMap = std::map<LadderString, Complex>;

    FermionOperator() = default;

    /** coefficient * (product of ops, leftmost acts last); normal-ordered on construction. */
    FermionOperator(const LadderString& ops, Complex coefficient = 1.0);
    FermionOperator(std::initializer_list<LadderOp> ops, Complex coefficient = 1.0)
        : FermionOperator(LadderString(ops), coefficient) {}

    [[nodiscard]] static FermionOperator identity(Complex coefficient = 1.0);

    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    /** Coefficient of the identity term. */
    [[nodiscard]] Complex constant() const;

    /** Largest flat index referenced plus one (0 for a pure constant). */
    [[nodiscard]] int mode_count() const noexcept;

    [[nodiscard]] FermionOperator adjoint() const;

    /** Drops terms whose magnitude is at most tol. */
    FermionOperator& prune(double tol = 0.0);

    /** True when every coefficient of (*this - other) is at most tol in magnitude. */
    [[nodiscard]] bool approx_equal(const FermionOperator& other, double tol = 1e-12) const;

    [[nodiscard]] bool is_hermitian(double tol = 1e-12) const { return approx_equal(adjoint(), tol); }
    [[nodiscard]] bool is_anti_hermitian(double tol = 1e-12) const;

    FermionOperator& operator+=(const FermionOperator& other);
    FermionOperator& operator-=(const FermionOperator& other);
    FermionOperator& operator*=(Complex scalar);
    FermionOperator& operator*=(const FermionOperator& other);

    friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
    friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) { return a -= b; }
    friend FermionOperator operator*(FermionOperator a, Complex s) { return a *= s; }
    friend FermionOperator operator*(Complex s, FermionOperator a) { return a *= s; }
    friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);
    friend bool operator==(const FermionOperator&, const FermionOperator&) = default;

    [[nodiscard]] std::string to_string(int n_spatial = 0) const;

private:
    void add_normal_ordered(const LadderString& ops, Complex coefficient);

    TermMap terms_;
};

[[nodiscard]] FermionOperator commutator(const FermionOperator& a, const FermionOperator& b);

/** Relabels every mode by swapping the up and down copies of each spatial orbital. */
[[nodiscard]] FermionOperator spin_flip(const FermionOperator& op, int n_spatial);

/**
 * Applies op to the occupation-number basis state |bits>; bit q is the
 * occupation of flat mode q. Returns (coefficient, bits) pairs, combining
 * equal targets.
 */
[[nodiscard]] std::vector<std::pair<Complex, std::uint64_t>> apply(const FermionOperator& op,
                                                                   std::uint64_t bits);

/** Single ladder string action; returns false when the string annihilates |bits>. */
bool apply_string(const LadderString& ops, std::uint64_t& bits, double& sign) noexcept;

/** Human-readable ladder string, e.g. "a+(1u) a+(0d) a(0d) a(1u)" or with flat indices. */
[[nodiscard]] std::string format_string(const LadderString& ops, int n_spatial = 0);

} // namespace symvqe
