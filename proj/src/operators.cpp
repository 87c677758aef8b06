// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/operators.hpp>

#include <stdexcept>

namespace symvqe {

namespace {

FermionOperator one_body(const Eigen::MatrixXd& m, int n, double scale) {
    FermionOperator out;
    for (int s = 0; s < 2; ++s)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (m(p, q) != 0.0) out += FermionOperator({cre(p + s * n), ann(q + s * n)}, scale * m(p, q));
    return out;
}

} // namespace

FermionOperator build_hamiltonian(const MolecularSystem& sys) {
    const int n = sys.n_spatial;
    FermionOperator h = FermionOperator::identity(sys.core_energy);
    h += one_body(sys.h1, n, 1.0);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    const double v = sys.h2(p, q, r, s);
                    if (v == 0.0) continue;
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b) {
                            const int ps = p + a * n, qs = q + a * n, rt = r + b * n, st = s + b * n;
                            if (ps == rt || qs == st) continue;
                            h += FermionOperator({cre(ps), cre(rt), ann(st), ann(qs)}, 0.5 * v);
                        }
                }
    return h;
}

FermionOperator build_s_plus(int n) {
    FermionOperator out;
    for (int p = 0; p < n; ++p) out += FermionOperator({cre(p), ann(p + n)});
    return out;
}

FermionOperator build_s_minus(int n) {
    FermionOperator out;
    for (int p = 0; p < n; ++p) out += FermionOperator({cre(p + n), ann(p)});
    return out;
}

FermionOperator build_s_z(int n) {
    FermionOperator out;
    for (int p = 0; p < n; ++p) {
        out += FermionOperator({cre(p), ann(p)}, 0.5);
        out += FermionOperator({cre(p + n), ann(p + n)}, -0.5);
    }
    return out;
}

FermionOperator build_number(int n) {
    FermionOperator out;
    for (int q = 0; q < 2 * n; ++q) out += FermionOperator({cre(q), ann(q)});
    return out;
}

FermionOperator build_s_squared(int n) {
    const FermionOperator sz = build_s_z(n);
    FermionOperator out = build_s_minus(n) * build_s_plus(n) + sz * sz + sz;
    return out.prune(1e-15);
}

FermionOperator build_dipole_z(const MolecularSystem& sys) {
    if (!sys.dipole_z) throw std::invalid_argument("system has no dipole integrals");
    return one_body(*sys.dipole_z, sys.n_spatial, -1.0);
}

} // namespace symvqe
