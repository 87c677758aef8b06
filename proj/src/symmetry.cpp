// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/symmetry.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace symvqe {

int Determinant::two_s_z(int n) const noexcept {
    const std::uint64_t up = (std::uint64_t{1} << n) - 1;
    return std::popcount(bits & up) - std::popcount((bits >> n) & up);
}

std::string Determinant::to_string(int n_qubits) const {
    std::string s;
    for (int q = n_qubits - 1; q >= 0; --q) s += occupied(q) ? '1' : '0';
    return s;
}

SpinState parse_spin(const std::string& text) {
    if (text == "0" || text == "singlet" || text == "1S") return SpinState::Singlet;
    if (text == "1" || text == "triplet" || text == "3S") return SpinState::Triplet;
    throw std::invalid_argument("spin must be 0 (singlet) or 1 (triplet), got '" + text + "'");
}

std::string sector_name(IrrepLabel sigma, SpinState spin) {
    return (spin == SpinState::Singlet ? "1" : "3") + std::string(irrep_name(sigma));
}

IrrepLabel determinant_irrep(Determinant d, const std::vector<IrrepLabel>& irreps) {
    const int n = static_cast<int>(irreps.size());
    IrrepLabel out = irreps.empty() ? IrrepLabel{} : totally_symmetric(irreps.front().group);
    for (int q = 0; q < 2 * n; ++q)
        if (d.occupied(q)) out.bits ^= irreps[static_cast<std::size_t>(q % n)].bits;
    return out;
}

Determinant hartree_fock_determinant(const MolecularSystem& sys) {
    if (sys.n_electrons % 2 != 0) throw std::invalid_argument("closed-shell reference needs an even electron count");
    Determinant d;
    for (int i = 0; i < sys.n_electrons / 2; ++i) {
        d.bits |= std::uint64_t{1} << i;
        d.bits |= std::uint64_t{1} << (i + sys.n_spatial);
    }
    return d;
}

Determinant spin_complement(Determinant d, int m, int e, int n) noexcept {
    for (int p : {m, e}) {
        const bool up = d.occupied(p), dn = d.occupied(p + n);
        if (up != dn) d.bits ^= (std::uint64_t{1} << p) | (std::uint64_t{1} << (p + n));
    }
    return d;
}

std::vector<OrbitalPair> candidate_pairs(const MolecularSystem& sys, Determinant hf, IrrepLabel sigma) {
    const int n = sys.n_spatial;
    std::vector<OrbitalPair> out;
    for (int m = 0; m < n; ++m) {
        if (!(hf.occupied(m) && hf.occupied(m + n))) continue;
        for (int e = 0; e < n; ++e) {
            if (hf.occupied(e) || hf.occupied(e + n)) continue;
            if (irrep_product(sys.irreps[m], sys.irreps[e]) != sigma) continue;
            out.push_back({m, e, sys.h1(e, e) - sys.h1(m, m)});
        }
    }
    std::sort(out.begin(), out.end(), [](const OrbitalPair& a, const OrbitalPair& b) {
        if (a.gap != b.gap) return a.gap < b.gap;
        if (a.m != b.m) return a.m > b.m;
        return a.e < b.e;
    });
    return out;
}

StateSpec build_reference(IrrepLabel sigma, SpinState spin, const MolecularSystem& sys, Determinant hf,
                          const ReferenceOptions& options) {
    if (sigma.group != sys.point_group) throw SymmetryError("target irrep belongs to a different point group");
    const int n = sys.n_spatial;
    StateSpec spec;
    spec.sigma = sigma;
    spec.spin = spin;
    spec.n_spatial = n;
    spec.hf = hf;

    if (options.allow_single_determinant && !options.pair && sigma.is_totally_symmetric() &&
        spin == SpinState::Singlet) {
        if (!determinant_irrep(hf, sys.irreps).is_totally_symmetric()) {
            throw SectorUnreachable("reference determinant is not totally symmetric");
        }
        spec.single_determinant = true;
        spec.phi_a = spec.phi_b = hf;
        return spec;
    }

    OrbitalPair chosen{};
    if (options.pair) {
        const auto [m, e] = *options.pair;
        if (m < 0 || m >= n || e < 0 || e >= n) throw std::invalid_argument("orbital pair outside active space");
        if (m == e) throw std::invalid_argument("open-shell pair needs m != e");
        if (!(hf.occupied(m) && hf.occupied(m + n))) {
            throw SectorUnreachable("orbital " + std::to_string(m) + " is not doubly occupied");
        }
        if (hf.occupied(e) || hf.occupied(e + n)) {
            throw SectorUnreachable("orbital " + std::to_string(e) + " is not empty");
        }
        if (irrep_product(sys.irreps[m], sys.irreps[e]) != sigma) {
            throw SectorUnreachable("orbital pair (" + std::to_string(m) + ", " + std::to_string(e) +
                                    ") does not reach " + std::string(irrep_name(sigma)));
        }
        chosen = {m, e, sys.h1(e, e) - sys.h1(m, m)};
    } else {
        const auto cands = candidate_pairs(sys, hf, sigma);
        if (cands.empty()) {
            std::set<std::string> reachable;
            for (int m = 0; m < n; ++m)
                for (int e = 0; e < n; ++e)
                    if (hf.occupied(m) && hf.occupied(m + n) && !hf.occupied(e) && !hf.occupied(e + n))
                        reachable.emplace(irrep_name(irrep_product(sys.irreps[m], sys.irreps[e])));
            std::ostringstream msg;
            msg << "sector " << irrep_name(sigma) << " unreachable with one open-shell pair; available products:";
            if (reachable.empty()) msg << " none";
            for (const auto& r : reachable) msg << ' ' << r;
            throw SectorUnreachable(msg.str());
        }
        chosen = cands.front();
    }
    spec.m = chosen.m;
    spec.e = chosen.e;
    spec.phi_a.bits = hf.bits ^ (std::uint64_t{1} << chosen.m) ^ (std::uint64_t{1} << chosen.e);
    spec.phi_b.bits = hf.bits ^ (std::uint64_t{1} << (chosen.m + n)) ^ (std::uint64_t{1} << (chosen.e + n));
    return spec;
}

double sector_weight(const Statevector& psi, const std::vector<IrrepLabel>& irreps, int n_electrons,
                     IrrepLabel sigma) {
    const int n = static_cast<int>(irreps.size());
    double w = 0.0;
    for (std::size_t b = 0; b < psi.size(); ++b) {
        const Determinant d{b};
        if (d.electron_count() != n_electrons || d.two_s_z(n) != 0) continue;
        if (determinant_irrep(d, irreps) != sigma) continue;
        w += std::norm(psi[b]);
    }
    return w;
}

} // namespace symvqe
