// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/fci.hpp>
#include <symvqe/operators.hpp>
#include <symvqe/pauli.hpp>

#include <dense.hpp>
#include <doctest.h>
#include <toy_systems.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>

using namespace symvqe;
using namespace symvqe::testing;

namespace {

IrrepLabel c2v(const char* name) { return parse_irrep(name, PointGroup::C2v); }

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("one orbital with two electrons") {
    MolecularSystem s;
    s.n_spatial = 1;
    s.n_electrons = 2;
    s.point_group = PointGroup::C1;
    s.h1 = Eigen::MatrixXd::Constant(1, 1, -1.0);
    s.h2 = TwoElectronIntegrals(1);
    s.h2.set(0, 0, 0, 0, 0.5);
    s.irreps = {totally_symmetric(PointGroup::C1)};
    const auto sol = solve(s);
    REQUIRE(sol.dimension() == 1);
    REQUIRE(sol.roots.size() == 1);
    CHECK(std::abs(sol.roots[0].energy + 1.5) < 1e-14);
    CHECK(sol.roots[0].two_s() == 0);
}

TEST_CASE("basis is the N-electron Sz = 0 space in ascending order") {
    for (const auto& [n, ne] : std::vector<std::pair<int, int>>{{6, 8}, {6, 4}, {3, 2}, {4, 4}}) {
        const auto basis = fci_basis(n, ne);
        CHECK(static_cast<long long>(basis.size()) == binomial(n, ne / 2) * binomial(n, ne / 2));
        CHECK(std::is_sorted(basis.begin(), basis.end()));
        CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
        for (auto b : basis) {
            CHECK(Determinant{b}.electron_count() == ne);
            CHECK(Determinant{b}.two_s_z(n) == 0);
        }
    }
}

TEST_CASE("eigenvalues agree with dense diagonalization of the Fock-space Hamiltonian") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const auto sys = random_system(3, 2, {"A1", "B1", "A1"}, seed);
        const auto sol = solve(sys);
        const Dense h = fermion_matrix(build_hamiltonian(sys), 6);
        const auto k = static_cast<Eigen::Index>(sol.dimension());
        Dense sub(k, k);
        for (Eigen::Index r = 0; r < k; ++r)
            for (Eigen::Index c = 0; c < k; ++c)
                sub(r, c) = h(static_cast<Eigen::Index>(sol.basis[r]), static_cast<Eigen::Index>(sol.basis[c]));
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Dense>(sub).eigenvalues();
        REQUIRE(static_cast<Eigen::Index>(sol.roots.size()) == k);
        for (Eigen::Index i = 0; i < k; ++i) CHECK(std::abs(sol.roots[static_cast<std::size_t>(i)].energy - ev(i)) < 1e-12);
    }
}

TEST_CASE("roots are eigenvectors of the qubit Hamiltonian with pure labels") {
    for (const auto& path : {h2o_dump("1.0"), h2o_dump("2.1"), beh2_dump("D")}) {
        CAPTURE(path.string());
        const auto sys = parse_system(path);
        const auto sol = solve(sys);
        const CompiledOperator h(jordan_wigner(build_hamiltonian(sys), 12), 12);
        const CompiledOperator s2(jordan_wigner(build_s_squared(6), 12), 12);
        const CompiledOperator d(jordan_wigner(build_dipole_z(sys), 12), 12);
        std::map<std::pair<int, int>, int> seen;
        double worst_residual = 0.0, worst_s2 = 0.0, worst_leak = 0.0;
        for (std::size_t i = 0; i < sol.roots.size(); ++i) {
            const auto& r = sol.roots[i];
            if (i > 0) CHECK(sol.roots[i - 1].energy <= r.energy);
            const auto psi = sol.embed(r);
            const auto hpsi = h.apply(psi);
            double res = 0.0;
            for (std::size_t j = 0; j < psi.size(); ++j) res += std::norm(hpsi[j] - r.energy * psi[j]);
            worst_residual = std::max(worst_residual, std::sqrt(res));
            const double S = 0.5 * r.two_s();
            worst_s2 = std::max(worst_s2, std::abs(r.s2 - S * (S + 1.0)));
            CHECK(std::abs(expectation(psi, s2) - r.s2) < 1e-9);
            worst_leak = std::max(worst_leak, 1.0 - sector_weight(psi, sys.irreps, sys.n_electrons, r.irrep));
            CHECK(std::abs(*r.dipole_z - (expectation(psi, d) + sys.nuclear_dipole_z)) < 1e-10);
            // Spin-flip partners tie in magnitude; the first of them is the positive one.
            const double top = r.vector.cwiseAbs().maxCoeff();
            Eigen::Index big = 0;
            while (std::abs(r.vector(big)) < top - 1e-12) ++big;
            CHECK(r.vector(big) > 0.0);
            CHECK(std::abs(r.vector.norm() - 1.0) < 1e-12);
            ++seen[{r.irrep.bits, r.two_s()}];
        }
        CHECK(worst_residual < 1e-9);
        CHECK(worst_s2 < 1e-8);
        CHECK(worst_leak < 1e-10);
        std::map<int, int> by_irrep;
        for (const auto& [k, v] : seen) by_irrep[k.first] += v;
        int total = 0;
        for (const auto& [irrep, count] : by_irrep) total += count;
        CHECK(total == static_cast<int>(sol.dimension()));
        int by_basis = 0;
        for (const char* name : {"A1", "B1", "B2", "A2"}) {
            int dets = 0;
            for (auto b : sol.basis) dets += determinant_irrep(Determinant{b}, sys.irreps) == c2v(name);
            CHECK(by_irrep[c2v(name).bits] == dets);
            by_basis += dets;
        }
        CHECK(by_basis == static_cast<int>(sol.dimension()));
    }
}

TEST_CASE("H2O near equilibrium has a singlet A1 ground state") {
    const auto sol = solve(parse_system(h2o_dump("1.0")));
    CHECK(sol.roots.front().irrep == c2v("A1"));
    CHECK(sol.roots.front().two_s() == 0);
    CHECK(&sector_minimum(sol, c2v("A1"), SpinState::Singlet) == &sol.roots.front());
}

TEST_CASE("BeH2 triplet B2 crosses below singlet A1 along the insertion path") {
    for (const auto& p : beh2_points()) {
        CAPTURE(p);
        const auto sol = solve(parse_system(beh2_dump(p)));
        const double t = sector_minimum(sol, c2v("B2"), SpinState::Triplet).energy;
        const double s = sector_minimum(sol, c2v("A1"), SpinState::Singlet).energy;
        if (p == "C" || p == "D" || p == "E") CHECK(t < s);
        if (p == "A" || p == "I") CHECK(s < t);
    }
}

TEST_CASE("sector minimum lookup") {
    const auto toy = toy_system("B1");
    const auto sol = solve(toy);
    CHECK(&sector_minimum(sol, c2v("A1"), 0) == &sol.roots.front());
    CHECK_THROWS_AS((void)sector_minimum(sol, c2v("A2"), SpinState::Singlet), std::out_of_range);
    CHECK_THROWS_AS((void)sector_minimum(sol, c2v("A1"), SpinState::Triplet), std::out_of_range);
    const auto h2o = solve(parse_system(h2o_dump("1.5")));
    const auto& t = sector_minimum(h2o, c2v("B1"), SpinState::Triplet);
    CHECK(std::abs(t.s2 - 2.0) < 1e-8);
    CHECK(t.irrep == c2v("B1"));
    CHECK(&sector_minimum(h2o, c2v("B1"), 1) == &t);
}

TEST_CASE("ground-state dipole varies smoothly along the H2O stretch") {
    std::vector<double> mu;
    for (const auto& r : h2o_points()) {
        const auto sol = solve(parse_system(h2o_dump(r)));
        mu.push_back(*sector_minimum(sol, c2v("A1"), SpinState::Singlet).dipole_z);
    }
    for (std::size_t i = 1; i < mu.size(); ++i) {
        CHECK(std::signbit(mu[i]) == std::signbit(mu[0]));
        CHECK(std::abs(mu[i] - mu[i - 1]) < 0.25);
    }
    for (std::size_t i = 2; i < mu.size(); ++i) CHECK(std::abs(mu[i] - 2.0 * mu[i - 1] + mu[i - 2]) < 0.1);
}

TEST_CASE("oversized problems are refused") {
    FciOptions opt;
    opt.max_dimension = 100;
    CHECK_THROWS_AS((void)solve(parse_system(h2o_dump("1.0")), opt), DimensionError);
}

TEST_CASE("oracle CSV lists every root") {
    const auto sol = solve(toy_system("A1"));
    const auto csv = oracle_csv(sol);
    CHECK(csv.rfind("root,energy,irrep,s2,dipole_z\n", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == sol.roots.size() + 1);
}
