// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/irrep.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

namespace symvqe {

namespace {

struct GroupTable {
    PointGroup group;
    std::string_view tag;
    std::array<std::string_view, 8> names;
    int count;
};

constexpr std::array<GroupTable, 8> kGroups{{
    {PointGroup::C1, "C1", {"A"}, 1},
    {PointGroup::Ci, "Ci", {"Ag", "Au"}, 2},
    {PointGroup::C2, "C2", {"A", "B"}, 2},
    {PointGroup::Cs, "Cs", {"A'", "A''"}, 2},
    {PointGroup::C2v, "C2v", {"A1", "B1", "B2", "A2"}, 4},
    {PointGroup::C2h, "C2h", {"Ag", "Bg", "Au", "Bu"}, 4},
    {PointGroup::D2, "D2", {"A", "B1", "B2", "B3"}, 4},
    {PointGroup::D2h, "D2h", {"Ag", "B1g", "B2g", "B3g", "Au", "B1u", "B2u", "B3u"}, 8},
}};

const GroupTable& table_for(PointGroup group) noexcept {
    return kGroups[static_cast<std::size_t>(group)];
}

bool iequals(std::string_view a, std::string_view b) noexcept {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

PointGroup parse_point_group(std::string_view tag) {
    tag = trim(tag);
    for (const auto& t : kGroups) {
        if (iequals(t.tag, tag)) return t.group;
    }
    throw SymmetryError("unsupported point group '" + std::string(tag) +
                        "' (expected one of C1, Ci, C2, Cs, C2v, C2h, D2, D2h)");
}

std::string_view to_string(PointGroup group) noexcept { return table_for(group).tag; }

int irrep_count(PointGroup group) noexcept { return table_for(group).count; }

IrrepLabel totally_symmetric(PointGroup group) noexcept { return IrrepLabel{0, group}; }

IrrepLabel parse_irrep(std::string_view text, PointGroup group) {
    text = trim(text);
    const auto& t = table_for(group);
    // Exact-case match first so that A' and A'' stay distinct.
    for (int k = 0; k < t.count; ++k) {
        if (t.names[k] == text) return IrrepLabel{static_cast<std::uint8_t>(k), group};
    }
    for (int k = 0; k < t.count; ++k) {
        if (iequals(t.names[k], text)) return IrrepLabel{static_cast<std::uint8_t>(k), group};
    }
    int value = -1;
    const auto* end = text.data() + text.size();
    if (auto [ptr, ec] = std::from_chars(text.data(), end, value); ec == std::errc{} && ptr == end) {
        if (value >= 0 && value < t.count) {
            return IrrepLabel{static_cast<std::uint8_t>(value), group};
        }
    }
    throw SymmetryError("'" + std::string(text) + "' is not an irrep of " + std::string(t.tag));
}

std::string_view irrep_name(IrrepLabel label) {
    const auto& t = table_for(label.group);
    if (label.bits >= t.count) {
        throw SymmetryError("irrep bits out of range for " + std::string(t.tag));
    }
    return t.names[label.bits];
}

IrrepLabel irrep_product(IrrepLabel a, IrrepLabel b) {
    if (a.group != b.group) {
        throw SymmetryError("irrep product across different point groups (" +
                            std::string(to_string(a.group)) + " vs " +
                            std::string(to_string(b.group)) + ")");
    }
    return IrrepLabel{static_cast<std::uint8_t>(a.bits ^ b.bits), a.group};
}

} // namespace symvqe
