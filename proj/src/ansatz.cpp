// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/ansatz.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symvqe {

namespace {

constexpr double kOperatorTolerance = 1e-12;

using Key = std::pair<std::vector<int>, std::vector<int>>;  // (annihilate, create)

bool acts_on(const std::vector<int>& annihilate, const std::vector<int>& create, Determinant d) {
    return std::all_of(annihilate.begin(), annihilate.end(), [d](int q) { return d.occupied(q); }) &&
           std::none_of(create.begin(), create.end(), [d](int q) { return d.occupied(q); });
}

int flip_mode(int q, int n) noexcept { return q < n ? q + n : q - n; }

std::vector<int> flip_modes(std::vector<int> v, int n) {
    for (auto& q : v) q = flip_mode(q, n);
    std::sort(v.begin(), v.end());
    return v;
}

/** Generator and adjoint share one canonical key: the smaller of (ann, cre) and (cre, ann). */
Key canonical(const std::vector<int>& a, const std::vector<int>& c) {
    return std::min(Key{a, c}, Key{c, a});
}

ExcitationGenerator make_generator(std::vector<int> a, std::vector<int> c, const StateSpec& spec) {
    ExcitationGenerator g;
    g.annihilate = std::move(a);
    g.create = std::move(c);
    g.acts_on_a = acts_on(g.annihilate, g.create, spec.phi_a) || acts_on(g.create, g.annihilate, spec.phi_a);
    g.acts_on_b = acts_on(g.annihilate, g.create, spec.phi_b) || acts_on(g.create, g.annihilate, spec.phi_b);
    return g;
}

std::string classify(const std::vector<ExcitationGenerator>& gens, const StateSpec& spec) {
    const int n = spec.n_spatial;
    const auto& g = gens.front();
    bool open_shell = false;
    for (const auto& list : {g.annihilate, g.create})
        for (int q : list) {
            const int p = q % n;
            if (!spec.single_determinant && (p == spec.m || p == spec.e)) open_shell = true;
        }
    if (g.rank() == 1) return open_shell ? "1b-caseII" : "1b-caseI";
    const bool paired = g.annihilate[0] % n == g.annihilate[1] % n && g.create[0] % n == g.create[1] % n;
    if (paired) return "2b-paired";
    return open_shell ? "2b-caseII" : "2b-caseI";
}

/** Splits an anti-hermitian operator into canonical generators with coefficients. */
void decompose(ExcitationGroup& group, const StateSpec& spec) {
    std::map<Key, double> coef;
    for (const auto& [ops, c] : group.kappa.terms()) {
        std::vector<int> a, cr;
        for (const auto& l : ops) (l.create ? cr : a).push_back(l.mode);
        if (Key{a, cr} != canonical(a, cr)) continue;
        const auto g = make_generator(a, cr, spec);
        const Complex unit = g.excitation().terms().begin()->second;
        coef[Key{a, cr}] += (c / unit).real();
    }
    group.generators.clear();
    group.coefficients.clear();
    FermionOperator check;
    for (const auto& [k, c] : coef) {
        if (std::abs(c) <= kOperatorTolerance) continue;
        group.generators.push_back(make_generator(k.first, k.second, spec));
        group.coefficients.push_back(c);
        check += group.generators.back().kappa() * Complex{c};
    }
    if (!check.approx_equal(group.kappa, kOperatorTolerance)) {
        throw std::logic_error("group operator is not a combination of excitation generators");
    }
}

std::vector<int> spatial_key_single(const ExcitationGenerator& g, int n) {
    const int p = g.create[0] % n, q = g.annihilate[0] % n;
    return std::min(std::vector<int>{p, q}, std::vector<int>{q, p});
}

/** Spatial signatures (p,q,r,s) of e_{pq,rs} = sum a+_{p s} a+_{r t} a_{s t} a_{q s} generated by a double. */
std::vector<std::vector<int>> spatial_keys_double(const ExcitationGenerator& g, int n) {
    std::vector<std::vector<int>> out;
    const int A = g.create[0], B = g.create[1], I = g.annihilate[0], J = g.annihilate[1];
    auto same_spin = [n](int x, int y) { return (x < n) == (y < n); };
    for (const auto& [x, y, u, w] : {std::array<int, 4>{A, I, B, J}, std::array<int, 4>{A, J, B, I}}) {
        if (!same_spin(x, y) || !same_spin(u, w)) continue;
        const int p = x % n, q = y % n, r = u % n, s = w % n;
        out.push_back(std::min({std::vector<int>{p, q, r, s}, std::vector<int>{r, s, p, q},
                                std::vector<int>{q, p, s, r}, std::vector<int>{s, r, q, p}}));
    }
    return out;
}

FermionOperator spin_free_single(int p, int q, int n) {
    FermionOperator t;
    for (int s = 0; s < 2; ++s) t += FermionOperator({cre(p + s * n), ann(q + s * n)});
    return t - t.adjoint();
}

FermionOperator spin_free_double(const std::vector<int>& k, int n) {
    const int p = k[0], q = k[1], r = k[2], s = k[3];
    FermionOperator t;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            t += FermionOperator({cre(p + a * n), cre(r + b * n), ann(s + b * n), ann(q + a * n)});
    return t - t.adjoint();
}

} // namespace

FermionOperator ExcitationGenerator::excitation() const {
    LadderString ops;
    for (int c : create) ops.push_back(cre(c));
    for (auto it = annihilate.rbegin(); it != annihilate.rend(); ++it) ops.push_back(ann(*it));
    return FermionOperator(ops);
}

FermionOperator ExcitationGenerator::kappa() const {
    const FermionOperator t = excitation();
    return t - t.adjoint();
}

std::vector<int> ExcitationGenerator::lexical_key() const {
    std::vector<int> k = annihilate;
    k.insert(k.end(), create.begin(), create.end());
    return k;
}

std::string ExcitationGenerator::to_string(int n) const {
    LadderString ops;
    for (int c : create) ops.push_back(cre(c));
    for (auto it = annihilate.rbegin(); it != annihilate.rend(); ++it) ops.push_back(ann(*it));
    return format_string(ops, n);
}

std::vector<int> ExcitationGroup::lexical_key() const {
    std::vector<int> best;
    for (const auto& g : generators) {
        auto k = g.lexical_key();
        if (best.empty() || k < best) best = std::move(k);
    }
    return best;
}

TyingScheme parse_tying(const std::string& text) {
    if (text == "spin-adapted") return TyingScheme::SpinAdapted;
    if (text == "spin-complement") return TyingScheme::SpinComplement;
    throw std::invalid_argument("tying must be 'spin-adapted' or 'spin-complement', got '" + text + "'");
}

std::string to_string(TyingScheme scheme) {
    return scheme == TyingScheme::SpinAdapted ? "spin-adapted" : "spin-complement";
}

std::vector<ExcitationGenerator> enumerate_pool(const StateSpec& spec, const MolecularSystem& sys) {
    const int n = sys.n_spatial;
    const int nq = 2 * n;
    auto spin = [n](int q) { return q >= n; };
    auto irrep = [&sys, n](int q) { return sys.irreps[static_cast<std::size_t>(q % n)].bits; };
    auto wanted = [&spec](const std::vector<int>& a, const std::vector<int>& c) {
        return acts_on(a, c, spec.phi_a) || acts_on(a, c, spec.phi_b);
    };

    std::map<Key, ExcitationGenerator> pool;
    auto insert = [&](std::vector<int> a, std::vector<int> c) {
        const Key k = canonical(a, c);
        auto g = make_generator(k.first, k.second, spec);
        pool.emplace(k, std::move(g));
    };
    for (int i = 0; i < nq; ++i)
        for (int a = 0; a < nq; ++a) {
            if (i == a || spin(i) != spin(a) || irrep(i) != irrep(a)) continue;
            if (wanted({i}, {a})) insert({i}, {a});
        }
    for (int i = 0; i < nq; ++i)
        for (int j = i + 1; j < nq; ++j)
            for (int a = 0; a < nq; ++a)
                for (int b = a + 1; b < nq; ++b) {
                    if (a == i || a == j || b == i || b == j) continue;
                    if (spin(i) + spin(j) != spin(a) + spin(b)) continue;
                    if ((irrep(i) ^ irrep(j) ^ irrep(a) ^ irrep(b)) != 0) continue;
                    if (wanted({i, j}, {a, b})) insert({i, j}, {a, b});
                }
    std::vector<ExcitationGenerator> out;
    out.reserve(pool.size());
    for (auto& [k, g] : pool) out.push_back(std::move(g));
    return out;
}

std::vector<ExcitationGroup> tie_parameters(const std::vector<ExcitationGenerator>& pool, const StateSpec& spec,
                                            TyingScheme scheme) {
    const int n = spec.n_spatial;
    std::map<Key, std::size_t> index;
    for (std::size_t k = 0; k < pool.size(); ++k) index[canonical(pool[k].annihilate, pool[k].create)] = k;

    // Closure under the spin flip.
    std::vector<std::size_t> partner(pool.size());
    for (std::size_t k = 0; k < pool.size(); ++k) {
        const auto fk = canonical(flip_modes(pool[k].annihilate, n), flip_modes(pool[k].create, n));
        auto it = index.find(fk);
        if (it == index.end()) {
            throw std::logic_error("excitation pool is not closed under spin flip: missing image of " +
                                   pool[k].to_string(n));
        }
        partner[k] = it->second;
    }

    std::vector<ExcitationGroup> groups;
    if (scheme == TyingScheme::SpinComplement) {
        std::vector<bool> used(pool.size(), false);
        for (std::size_t k = 0; k < pool.size(); ++k) {
            if (used[k]) continue;
            used[k] = used[partner[k]] = true;
            const FermionOperator kappa = pool[k].kappa();
            const FermionOperator image = spin_flip(kappa, n);
            const auto& p = pool[partner[k]];
            double sign = 0.0;
            if (image.approx_equal(p.kappa(), kOperatorTolerance)) sign = 1.0;
            else if (image.approx_equal(p.kappa() * Complex{-1.0}, kOperatorTolerance)) sign = -1.0;
            else throw std::logic_error("spin-flip image is not a pool generator: " + pool[k].to_string(n));
            ExcitationGroup g;
            if (partner[k] == k) {
                if (sign < 0.0) continue;  // odd under the flip; the tied sum vanishes
                g.generators = {pool[k]};
                g.coefficients = {1.0};
                g.kappa = kappa;
            } else {
                g.generators = {pool[k], p};
                g.coefficients = {1.0, sign};
                g.kappa = kappa + image;
            }
            g.class_tag = classify(g.generators, spec);
            groups.push_back(std::move(g));
        }
        return groups;
    }

    std::set<std::vector<int>> singles, doubles;
    for (const auto& g : pool) {
        if (g.rank() == 1) {
            singles.insert(spatial_key_single(g, n));
        } else {
            for (auto& k : spatial_keys_double(g, n)) doubles.insert(std::move(k));
        }
    }
    auto add = [&](FermionOperator kappa) {
        kappa.prune(kOperatorTolerance);
        if (kappa.empty()) return;
        ExcitationGroup g;
        g.kappa = std::move(kappa);
        decompose(g, spec);
        g.class_tag = classify(g.generators, spec);
        groups.push_back(std::move(g));
    };
    for (const auto& k : singles) add(spin_free_single(k[0], k[1], n));
    for (const auto& k : doubles) add(spin_free_double(k, n));
    return groups;
}

Ansatz build_ansatz(std::vector<ExcitationGroup> groups, int reps, int n_spatial, TyingScheme scheme) {
    if (reps < 1) throw std::invalid_argument("reps must be at least 1");
    if (groups.empty()) throw std::invalid_argument("ansatz needs at least one excitation group");
    std::stable_sort(groups.begin(), groups.end(), [](const ExcitationGroup& a, const ExcitationGroup& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.lexical_key() < b.lexical_key();
    });
    Ansatz out;
    out.groups = std::move(groups);
    out.reps = reps;
    out.n_spatial = n_spatial;
    out.scheme = scheme;
    return out;
}

Ansatz build_ansatz(const StateSpec& spec, const MolecularSystem& sys, int reps, TyingScheme scheme) {
    return build_ansatz(tie_parameters(enumerate_pool(spec, sys), spec, scheme), reps, sys.n_spatial, scheme);
}

std::string dump_ansatz(const Ansatz& ansatz) {
    std::ostringstream ss;
    const std::size_t ng = ansatz.groups.size();
    for (std::size_t k = 0; k < ansatz.parameter_count(); ++k) {
        const auto& g = ansatz.groups[k % ng];
        ss << "group " << k % ng << " class " << g.class_tag << " θ" << k << ":";
        for (std::size_t j = 0; j < g.generators.size(); ++j) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%+.12g", g.coefficients[j]);
            ss << (j ? "; " : " ") << buf << ' ' << g.generators[j].to_string(ansatz.n_spatial);
        }
        ss << '\n';
    }
    return ss.str();
}

int unrestricted_uccsd_count(int n_spatial, int n_electrons) {
    const int o = n_electrons / 2, v = n_spatial - o;
    const int singles = 2 * o * v;
    const int same = 2 * (o * (o - 1) / 2) * (v * (v - 1) / 2);
    const int mixed = o * o * v * v;
    return singles + same + mixed;
}

GroupExponential::GroupExponential(const FermionOperator& kappa, int n_qubits)
    : pauli_(jordan_wigner(kappa, n_qubits)), generator_(pauli_, n_qubits) {
    std::vector<PauliString> strings;
    for (const auto& [p, c] : pauli_.terms()) {
        if (std::abs(c.real()) > 1e-12) throw std::invalid_argument("group generator is not anti-hermitian");
        strings.push_back(p);
        rotations_.emplace_back(p, c.imag());
    }
    for (std::size_t a = 0; a < strings.size() && commuting_; ++a)
        for (std::size_t b = a + 1; b < strings.size(); ++b)
            if (!strings[a].commutes_with(strings[b])) {
                commuting_ = false;
                break;
            }
    if (commuting_) return;
    rotations_.clear();

    // Connected components of the generator's matrix graph.
    const auto& m = generator_.matrix();
    const std::size_t dim = static_cast<std::size_t>(m.rows());
    std::vector<std::size_t> parent(dim);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::int64_t r = 0; r < m.outerSize(); ++r)
        for (CompiledOperator::Matrix::InnerIterator it(m, r); it; ++it) {
            const auto a = find(static_cast<std::size_t>(it.row())), b = find(static_cast<std::size_t>(it.col()));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t b = 0; b < dim; ++b) comps[find(b)].push_back(b);
    for (auto& [root, idx] : comps) {
        if (idx.size() < 2) continue;
        const auto k = static_cast<Eigen::Index>(idx.size());
        Eigen::MatrixXcd herm(k, k);
        for (Eigen::Index r = 0; r < k; ++r)
            for (Eigen::Index c = 0; c < k; ++c)
                herm(r, c) = Complex{0, -1} * m.coeff(static_cast<std::int64_t>(idx[static_cast<std::size_t>(r)]),
                                                      static_cast<std::int64_t>(idx[static_cast<std::size_t>(c)]));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
        if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition of group generator failed");
        blocks_.push_back({std::move(idx), es.eigenvectors(), es.eigenvalues()});
    }
}

void GroupExponential::apply(double theta, Statevector& psi) const {
    if (theta == 0.0) return;
    if (commuting_) {
        // exp(theta sum i r_j P_j) = prod exp(i theta r_j P_j) for commuting P_j
        for (const auto& [p, r] : rotations_) apply_pauli_rotation(psi, p, theta * r);
        return;
    }
    // exp(theta M) = V diag(exp(i theta lambda)) V^+ with M = i V lambda V^+
    for (const auto& b : blocks_) {
        const auto k = static_cast<Eigen::Index>(b.index.size());
        Eigen::VectorXcd x(k);
        for (Eigen::Index r = 0; r < k; ++r) x(r) = psi[b.index[static_cast<std::size_t>(r)]];
        Eigen::VectorXcd y = b.vectors.adjoint() * x;
        for (Eigen::Index r = 0; r < k; ++r) y(r) *= std::polar(1.0, theta * b.values(r));
        x = b.vectors * y;
        for (Eigen::Index r = 0; r < k; ++r) psi[b.index[static_cast<std::size_t>(r)]] = x(r);
    }
}

AnsatzCircuit::AnsatzCircuit(const Ansatz& ansatz)
    : n_qubits_(2 * ansatz.n_spatial), parameter_count_(ansatz.parameter_count()) {
    for (const auto& g : ansatz.groups) exps_.push_back(std::make_shared<const GroupExponential>(g.kappa, n_qubits_));
}

void AnsatzCircuit::apply(const std::vector<double>& theta, Statevector& psi) const {
    if (theta.size() != parameter_count_) {
        throw std::invalid_argument("parameter vector has " + std::to_string(theta.size()) + " entries, ansatz needs " +
                                    std::to_string(parameter_count_));
    }
    for (std::size_t k = 0; k < theta.size(); ++k) exponential(k).apply(theta[k], psi);
}

Statevector apply_ansatz(const AnsatzCircuit& circuit, const std::vector<double>& theta, const Statevector& psi0) {
    Statevector psi = psi0;
    circuit.apply(theta, psi);
    return psi;
}

} // namespace symvqe
