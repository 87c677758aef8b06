// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file irrep.hpp
 * @brief Irreducible representations of real Abelian point groups.
 *
 * Every real Abelian point group is isomorphic to Z2^k (k <= 3), so an irrep
 * is a k-bit vector and the direct product of two irreps is their XOR.
 * The all-zero label is the totally symmetric irrep.
 *
 * Bit encodings (name = bits):
 *   C1  : A=0
 *   Ci  : Ag=0 Au=1
 *   C2  : A=0 B=1
 *   Cs  : A'=0 A''=1
 *   C2v : A1=0 B1=1 B2=2 A2=3
 *   C2h : Ag=0 Bg=1 Au=2 Bu=3
 *   D2  : A=0 B1=1 B2=2 B3=3
 *   D2h : Ag=0 B1g=1 B2g=2 B3g=3 Au=4 B1u=5 B2u=6 B3u=7
 */

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symvqe {

enum class PointGroup : std::uint8_t { C1, Ci, C2, Cs, C2v, C2h, D2, D2h };

class SymmetryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] PointGroup parse_point_group(std::string_view tag);
[[nodiscard]] std::string_view to_string(PointGroup group) noexcept;

/** Number of irreps of the group (a power of two). */
[[nodiscard]] int irrep_count(PointGroup group) noexcept;

struct IrrepLabel {
    std::uint8_t bits = 0;
    PointGroup group = PointGroup::C1;

    [[nodiscard]] bool is_totally_symmetric() const noexcept { return bits == 0; }
    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

[[nodiscard]] IrrepLabel totally_symmetric(PointGroup group) noexcept;

/**
 * Parse an irrep given either by name ("B1", case-insensitive) or by its
 * integer bit encoding ("1").
 */
[[nodiscard]] IrrepLabel parse_irrep(std::string_view text, PointGroup group);

[[nodiscard]] std::string_view irrep_name(IrrepLabel label);

/** Direct product; throws SymmetryError when the labels belong to different groups. */
[[nodiscard]] IrrepLabel irrep_product(IrrepLabel a, IrrepLabel b);

} // namespace symvqe
