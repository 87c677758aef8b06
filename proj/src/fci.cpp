// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/fci.hpp>

#include <symvqe/operators.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_map>

namespace symvqe {

namespace {

Eigen::MatrixXd dense(const FermionOperator& op, const std::vector<std::uint64_t>& basis,
                      const std::unordered_map<std::uint64_t, Eigen::Index>& index) {
    const auto dim = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (const auto& [amp, bits] : apply(op, basis[static_cast<std::size_t>(c)])) {
            auto it = index.find(bits);
            if (it == index.end()) throw std::logic_error("operator leaves the S_z = 0 determinant space");
            m(it->second, c) += amp.real();
        }
    }
    return m;
}

void fix_phase(Eigen::VectorXd& v) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i)
        if (std::abs(v(i)) > std::abs(v(best)) + 1e-12) best = i;
    if (v(best) < 0.0) v = -v;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

int FciRoot::two_s() const noexcept {
    // S(S+1) = s2  ->  2S = sqrt(1 + 4 s2) - 1
    return static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * std::max(0.0, s2)) - 1.0));
}

Statevector FciSolution::embed(const FciRoot& root) const {
    Statevector psi(n_qubits);
    psi[0] = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) psi[basis[i]] = root.vector(static_cast<Eigen::Index>(i));
    return psi;
}

std::vector<std::uint64_t> fci_basis(int n_spatial, int n_electrons) {
    if (n_electrons % 2 != 0) throw std::invalid_argument("S_z = 0 space needs an even electron count");
    const int half = n_electrons / 2;
    std::vector<std::uint64_t> strings;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n_spatial); ++s)
        if (std::popcount(s) == half) strings.push_back(s);
    std::vector<std::uint64_t> basis;
    for (auto dn : strings)
        for (auto up : strings) basis.push_back(up | (dn << n_spatial));
    std::sort(basis.begin(), basis.end());
    return basis;
}

FciSolution solve(const MolecularSystem& sys, const FciOptions& options) {
    FciSolution sol;
    sol.n_qubits = sys.n_qubits();
    sol.basis = fci_basis(sys.n_spatial, sys.n_electrons);
    if (sol.basis.size() > options.max_dimension) {
        throw DimensionError("FCI dimension " + std::to_string(sol.basis.size()) + " exceeds the dense limit of " +
                             std::to_string(options.max_dimension) + "; restrict the active space or target sector");
    }
    std::unordered_map<std::uint64_t, Eigen::Index> index;
    for (std::size_t i = 0; i < sol.basis.size(); ++i) index[sol.basis[i]] = static_cast<Eigen::Index>(i);

    const Eigen::MatrixXd h = dense(build_hamiltonian(sys), sol.basis, index);
    const Eigen::MatrixXd s2 = dense(build_s_squared(sys.n_spatial), sol.basis, index);
    std::optional<Eigen::MatrixXd> d;
    if (sys.dipole_z) d = dense(build_dipole_z(sys), sol.basis, index);

    std::map<std::uint8_t, std::vector<Eigen::Index>> blocks;
    for (std::size_t i = 0; i < sol.basis.size(); ++i)
        blocks[determinant_irrep(Determinant{sol.basis[i]}, sys.irreps).bits].push_back(static_cast<Eigen::Index>(i));

    const auto dim = static_cast<Eigen::Index>(sol.basis.size());
    for (const auto& [bits, idx] : blocks) {
        const auto k = static_cast<Eigen::Index>(idx.size());
        Eigen::MatrixXd hb(k, k), sb(k, k);
        for (Eigen::Index r = 0; r < k; ++r)
            for (Eigen::Index c = 0; c < k; ++c) {
                hb(r, c) = h(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
                sb(r, c) = s2(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
            }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hb);
        if (es.info() != Eigen::Success) throw std::runtime_error("FCI diagonalization failed");
        Eigen::VectorXd evals = es.eigenvalues();
        Eigen::MatrixXd evecs = es.eigenvectors();

        // Resolve degenerate clusters by diagonalizing S^2 inside each.
        for (Eigen::Index start = 0; start < k;) {
            Eigen::Index end = start + 1;
            while (end < k && evals(end) - evals(end - 1) < options.degeneracy_threshold) ++end;
            if (end - start > 1) {
                const Eigen::MatrixXd block = evecs.middleCols(start, end - start);
                const Eigen::MatrixXd proj = block.transpose() * sb * block;
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ss(0.5 * (proj + proj.transpose()));
                evecs.middleCols(start, end - start) = block * ss.eigenvectors();
                const double mean = evals.segment(start, end - start).mean();
                evals.segment(start, end - start).setConstant(mean);
            }
            start = end;
        }

        for (Eigen::Index j = 0; j < k; ++j) {
            FciRoot root;
            root.energy = evals(j);
            root.irrep = IrrepLabel{bits, sys.point_group};
            root.vector = Eigen::VectorXd::Zero(dim);
            for (Eigen::Index r = 0; r < k; ++r) root.vector(idx[static_cast<std::size_t>(r)]) = evecs(r, j);
            fix_phase(root.vector);
            const Eigen::VectorXd local = evecs.col(j);
            root.s2 = local.dot(sb * local);
            if (d) root.dipole_z = root.vector.dot(*d * root.vector) + sys.nuclear_dipole_z;
            sol.roots.push_back(std::move(root));
        }
    }
    std::stable_sort(sol.roots.begin(), sol.roots.end(),
                     [](const FciRoot& a, const FciRoot& b) { return a.energy < b.energy; });
    return sol;
}

const FciRoot& sector_minimum(const FciSolution& sol, IrrepLabel sigma, int spin) {
    const double target = spin * (spin + 1.0);
    for (const auto& r : sol.roots)
        if (r.irrep == sigma && std::abs(r.s2 - target) < 1e-6) return r;
    throw std::out_of_range("no FCI root with irrep " + std::string(irrep_name(sigma)) + " and S = " +
                            std::to_string(spin));
}

const FciRoot& sector_minimum(const FciSolution& sol, IrrepLabel sigma, SpinState spin) {
    return sector_minimum(sol, sigma, spin_quantum_number(spin));
}

std::string oracle_csv(const FciSolution& sol) {
    std::ostringstream ss;
    ss << "root,energy,irrep,s2,dipole_z\n";
    for (std::size_t i = 0; i < sol.roots.size(); ++i) {
        const auto& r = sol.roots[i];
        ss << i << ',' << fmt(r.energy) << ',' << irrep_name(r.irrep) << ',' << fmt(std::abs(r.s2) < 1e-12 ? 0.0 : r.s2)
           << ',' << (r.dipole_z ? fmt(*r.dipole_z) : "") << '\n';
    }
    return ss.str();
}

} // namespace symvqe
