// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <symvqe/molecular_system.hpp>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace symvqe::testing {

inline std::filesystem::path data_dir() { return SYMVQE_TEST_DATA_DIR; }

inline std::vector<std::string> h2o_points() {
    return {"0.7", "0.8", "0.9", "1.0", "1.1", "1.2", "1.3", "1.4", "1.5", "1.6", "1.7", "1.8", "1.9", "2.0", "2.1"};
}

inline std::vector<std::string> beh2_points() { return {"A", "B", "C", "D", "E", "F", "G", "H", "I"}; }

inline std::filesystem::path h2o_dump(const std::string& r) { return data_dir() / ("h2o_r" + r + ".dump"); }
inline std::filesystem::path beh2_dump(const std::string& p) { return data_dir() / ("beh2_" + p + ".dump"); }

inline std::vector<std::filesystem::path> all_dumps() {
    std::vector<std::filesystem::path> out;
    for (const auto& r : h2o_points()) out.push_back(h2o_dump(r));
    for (const auto& p : beh2_points()) out.push_back(beh2_dump(p));
    return out;
}

/** Two orbitals, two electrons; a minimal-basis H2-like model. */
inline MolecularSystem toy_system(const std::string& irrep1 = "B1", bool coupled = true) {
    MolecularSystem s;
    s.n_spatial = 2;
    s.n_electrons = 2;
    s.point_group = PointGroup::C2v;
    s.core_energy = 0.71;
    s.h1 = Eigen::MatrixXd::Zero(2, 2);
    s.h1(0, 0) = -1.25;
    s.h1(1, 1) = -0.47;
    s.h2 = TwoElectronIntegrals(2);
    s.h2.set(0, 0, 0, 0, 0.67);
    s.h2.set(1, 1, 1, 1, 0.70);
    s.h2.set(0, 0, 1, 1, 0.66);
    if (coupled) s.h2.set(0, 1, 0, 1, 0.18);
    s.irreps = {parse_irrep("A1", PointGroup::C2v), parse_irrep(irrep1, PointGroup::C2v)};
    if (irrep1 == "A1" && coupled) {
        // Same-symmetry orbitals may mix through h1 and (01|00)-type integrals.
        s.h1(0, 1) = s.h1(1, 0) = 0.05;
        s.h2.set(0, 1, 0, 0, 0.03);
        s.h2.set(0, 1, 1, 1, -0.02);
    }
    s.dipole_z = Eigen::MatrixXd::Zero(2, 2);
    (*s.dipole_z)(0, 0) = 0.3;
    (*s.dipole_z)(1, 1) = -0.2;
    if (irrep1 == "A1") (*s.dipole_z)(0, 1) = (*s.dipole_z)(1, 0) = 0.4;
    s.nuclear_dipole_z = 0.1;
    return s;
}

/**
 * Random system with symmetry-consistent integrals: an integral is nonzero
 * only when the irrep product of its indices is totally symmetric.
 */
inline MolecularSystem random_system(int n, int n_electrons, const std::vector<std::string>& labels,
                                     unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    MolecularSystem s;
    s.n_spatial = n;
    s.n_electrons = n_electrons;
    s.point_group = PointGroup::C2v;
    for (const auto& l : labels) s.irreps.push_back(parse_irrep(l, PointGroup::C2v));
    auto ir = [&s](int p) { return s.irreps[static_cast<std::size_t>(p)].bits; };
    s.core_energy = u(rng);
    s.h1 = Eigen::MatrixXd::Zero(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q)
            if (ir(p) == ir(q)) s.h1(p, q) = s.h1(q, p) = (p == q ? -1.0 + 0.3 * p : 0.0) + 0.2 * u(rng);
    s.h2 = TwoElectronIntegrals(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q)
            for (int r = 0; r < n; ++r)
                for (int t = 0; t <= r; ++t)
                    if ((ir(p) ^ ir(q) ^ ir(r) ^ ir(t)) == 0) s.h2.set(p, q, r, t, 0.3 * u(rng) + (p == q && r == t ? 0.5 : 0.0));
    s.dipole_z = Eigen::MatrixXd::Zero(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q)
            if (ir(p) == ir(q)) (*s.dipole_z)(p, q) = (*s.dipole_z)(q, p) = u(rng);
    return s;
}

} // namespace symvqe::testing
