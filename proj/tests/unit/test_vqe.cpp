// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/fci.hpp>
#include <symvqe/operators.hpp>
#include <symvqe/reference_circuit.hpp>
#include <symvqe/vqe.hpp>

#include <dense.hpp>
#include <doctest.h>
#include <toy_systems.hpp>

#include <Eigen/Eigenvalues>

#include <random>

using namespace symvqe;
using namespace symvqe::testing;

namespace {

IrrepLabel c2v(const char* name) { return parse_irrep(name, PointGroup::C2v); }

StateSpec spec_for(const MolecularSystem& sys, const char* sigma, SpinState spin, ReferenceOptions opt = {}) {
    return build_reference(c2v(sigma), spin, sys, hartree_fock_determinant(sys), opt);
}

LbfgsOptions tight() {
    LbfgsOptions o;
    o.tol_energy = 1e-15;
    o.tol_gradient = 1e-10;
    return o;
}

/** Dense sector minimum: restrict to N, Sz = 0 and sigma, keep the S(S+1) eigenspace of S^2, diagonalize H there. */
double dense_sector_minimum(const MolecularSystem& sys, IrrepLabel sigma, SpinState spin) {
    const int nq = sys.n_qubits(), n = sys.n_spatial;
    const Dense h = fermion_matrix(build_hamiltonian(sys), nq);
    const Dense s2 = fermion_matrix(build_s_squared(n), nq);
    std::vector<Eigen::Index> idx;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << nq); ++b) {
        const Determinant d{b};
        if (d.electron_count() == sys.n_electrons && d.two_s_z(n) == 0 && determinant_irrep(d, sys.irreps) == sigma)
            idx.push_back(static_cast<Eigen::Index>(b));
    }
    const auto k = static_cast<Eigen::Index>(idx.size());
    Dense hs(k, k), ss(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index c = 0; c < k; ++c) {
            hs(r, c) = h(idx[r], idx[c]);
            ss(r, c) = s2(idx[r], idx[c]);
        }
    Eigen::SelfAdjointEigenSolver<Dense> se(ss);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < k; ++i)
        if (std::abs(se.eigenvalues()(i) - s_squared_value(spin)) < 1e-8) keep.push_back(i);
    REQUIRE_FALSE(keep.empty());
    Dense basis(k, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) basis.col(static_cast<Eigen::Index>(j)) = se.eigenvectors().col(keep[j]);
    const Dense proj = basis.adjoint() * hs * basis;
    return Eigen::SelfAdjointEigenSolver<Dense>(proj).eigenvalues().minCoeff();
}

std::vector<double> random_theta(std::mt19937& rng, std::size_t k) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> t(k);
    for (auto& x : t) x = u(rng);
    return t;
}

double fd_relative_error(const EnergyFunctional& f, const std::vector<double>& theta) {
    std::vector<double> grad;
    f.energy_and_gradient(theta, grad);
    const double h = 1e-5;
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k) {
        auto p = theta, m = theta;
        p[k] += h;
        m[k] -= h;
        const double fd = (f.energy(p) - f.energy(m)) / (2.0 * h);
        num += (grad[k] - fd) * (grad[k] - fd);
        den += fd * fd;
    }
    return std::sqrt(num / den);
}

Complex matrix_element(const FermionOperator& op, std::uint64_t bra, std::uint64_t ket) {
    Complex out = 0.0;
    for (const auto& [c, b] : apply(op, ket))
        if (b == bra) out += c;
    return out;
}

} // namespace

TEST_CASE("zero parameters on the HF determinant give the HF energy") {
    for (const auto& path : {h2o_dump("1.0"), beh2_dump("C")}) {
        const CompiledSystem cs(parse_system(path));
        ReferenceOptions opt;
        opt.allow_single_determinant = true;
        const auto spec = spec_for(cs.sys, "A1", SpinState::Singlet, opt);
        const AnsatzCircuit circuit(build_ansatz(spec, cs.sys, 2));
        const EnergyFunctional f(circuit, prepare_reference(spec), cs.hamiltonian);
        const double e = f.energy(std::vector<double>(f.parameter_count(), 0.0));
        CHECK(std::abs(e - hartree_fock_energy(cs.sys)) < 1e-10);
        CHECK(std::abs(e - *cs.sys.reference_energy) < 1e-8);
    }
}

TEST_CASE("zero parameters on a two-determinant reference give the contracted energy") {
    const auto sys = parse_system(h2o_dump("1.5"));
    const CompiledSystem cs(sys);
    const auto h = build_hamiltonian(sys);
    for (auto spin : {SpinState::Singlet, SpinState::Triplet}) {
        const auto spec = spec_for(sys, "B1", spin);
        const double sign = spin == SpinState::Singlet ? 1.0 : -1.0;
        const double haa = matrix_element(h, spec.phi_a.bits, spec.phi_a.bits).real();
        const double hbb = matrix_element(h, spec.phi_b.bits, spec.phi_b.bits).real();
        const double hab = matrix_element(h, spec.phi_a.bits, spec.phi_b.bits).real();
        const double expected = 0.5 * (haa + hbb) + sign * hab;
        VqeOptions opt;
        opt.optimizer.max_iterations = 0;
        const auto r = minimize(cs, spec, opt);
        CHECK(std::abs(r.reference_energy - expected) < 1e-10);
    }
}

TEST_CASE("adjoint gradient matches central finite differences") {
    std::mt19937 rng(31);
    for (const auto& toy : {toy_system("A1"), random_system(2, 2, {"A1", "A1"}, 3)}) {
        const CompiledSystem cs(toy);
        const auto spec = spec_for(toy, "A1", SpinState::Singlet);
        const AnsatzCircuit circuit(build_ansatz(spec, toy, 2));
        REQUIRE(circuit.n_qubits() == 4);
        const EnergyFunctional f(circuit, prepare_reference(spec), cs.hamiltonian);
        for (int trial = 0; trial < 10; ++trial) CHECK(fd_relative_error(f, random_theta(rng, f.parameter_count())) < 1e-6);
    }
    const CompiledSystem water(parse_system(h2o_dump("1.2")));
    for (auto scheme : {TyingScheme::SpinAdapted, TyingScheme::SpinComplement}) {
        const auto spec = spec_for(water.sys, "A2", SpinState::Triplet);
        const AnsatzCircuit circuit(build_ansatz(spec, water.sys, 2, scheme));
        const EnergyFunctional f(circuit, prepare_reference(spec), water.hamiltonian);
        CHECK(fd_relative_error(f, random_theta(rng, f.parameter_count())) < 1e-6);
    }
}

TEST_CASE("gradient vanishes at a stationary reference") {
    // Without exchange or mixing integrals H is diagonal and phi_A, phi_B are degenerate.
    const auto toy = toy_system("A1", false);
    const CompiledSystem cs(toy);
    const auto spec = spec_for(toy, "A1", SpinState::Singlet);
    const AnsatzCircuit circuit(build_ansatz(spec, toy, 2));
    REQUIRE(circuit.parameter_count() > 0);
    const EnergyFunctional f(circuit, prepare_reference(spec), cs.hamiltonian);
    std::vector<double> grad;
    (void)f.energy_and_gradient(std::vector<double>(f.parameter_count(), 0.0), grad);
    for (double g : grad) CHECK(std::abs(g) < 1e-8);
}

TEST_CASE("a tied parameter's derivative is the sum over its generators") {
    std::mt19937 rng(32);
    const auto sys = parse_system(h2o_dump("1.5"));
    const CompiledSystem cs(sys);
    const auto spec = spec_for(sys, "B1", SpinState::Singlet);
    auto groups = tie_parameters(enumerate_pool(spec, sys), spec, TyingScheme::SpinAdapted);
    const auto multi = std::find_if(groups.begin(), groups.end(),
                                    [](const ExcitationGroup& g) { return g.generators.size() >= 2; });
    REQUIRE(multi != groups.end());
    std::rotate(multi, multi + 1, groups.end());  // the tied group acts last
    Ansatz a;
    a.groups = groups;
    a.reps = 1;
    a.n_spatial = 6;
    const AnsatzCircuit circuit(a);
    const EnergyFunctional f(circuit, prepare_reference(spec), cs.hamiltonian);
    const auto theta = random_theta(rng, f.parameter_count());
    std::vector<double> grad;
    f.energy_and_gradient(theta, grad);

    const auto psi = f.state(theta);
    const auto hpsi = cs.hamiltonian.apply(psi);
    const auto& tied = groups.back();
    double sum = 0.0;
    Statevector work(12);
    for (std::size_t j = 0; j < tied.generators.size(); ++j) {
        const GroupExponential part(tied.generators[j].kappa(), 12);
        part.apply_generator(psi, work);
        sum += tied.coefficients[j] * 2.0 * overlap(work, hpsi).real();
    }
    CHECK(std::abs(grad.back() - sum) < 1e-10);
}

TEST_CASE("toy sector minima equal the dense oracle") {
    ReferenceOptions single;
    single.allow_single_determinant = true;
    const auto b1 = toy_system("B1");
    const auto a1 = toy_system("A1");
    struct Run {
        const MolecularSystem* sys;
        const char* sigma;
        SpinState spin;
    };
    for (const auto& run : {Run{&b1, "A1", SpinState::Singlet}, Run{&b1, "B1", SpinState::Singlet},
                            Run{&b1, "B1", SpinState::Triplet}, Run{&a1, "A1", SpinState::Singlet}}) {
        CAPTURE(run.sigma);
        const CompiledSystem cs(*run.sys);
        VqeOptions opt;
        opt.optimizer = tight();
        opt.reference = single;
        const auto r = minimize(cs, spec_for(*run.sys, run.sigma, run.spin, single), opt);
        CHECK(r.converged());
        CHECK(std::abs(r.energy - dense_sector_minimum(*run.sys, c2v(run.sigma), run.spin)) < 1e-10);
    }
}

TEST_CASE("an empty tied pool returns the reference") {
    // The B1 sector of the toy holds one singlet and one triplet, so the reference is exact.
    const auto toy = toy_system("B1");
    const CompiledSystem cs(toy);
    const auto spec = spec_for(toy, "B1", SpinState::Triplet);
    CHECK(tie_parameters(enumerate_pool(spec, toy), spec).empty());
    const auto r = minimize(cs, spec);
    CHECK(r.parameters.empty());
    CHECK(r.group_count == 0);
    CHECK(r.energy == r.reference_energy);
}

TEST_CASE("random three-orbital systems reach their sector minima") {
    for (unsigned seed : {41u, 42u}) {
        const auto sys = random_system(3, 2, {"A1", "B1", "A1"}, seed);
        const CompiledSystem cs(sys);
        for (auto spin : {SpinState::Singlet, SpinState::Triplet}) {
            VqeOptions opt;
            opt.optimizer = tight();
            const auto r = minimize(cs, spec_for(sys, "B1", spin), opt);
            const double oracle = dense_sector_minimum(sys, c2v("B1"), spin);
            CHECK(r.energy >= oracle - 1e-9);
            CHECK(r.energy - oracle < 1e-8);
        }
    }
}

TEST_CASE("H2O triplet and BeH2 runs respect the variational bound and stay pure") {
    struct Run {
        std::filesystem::path path;
        const char* sigma;
        SpinState spin;
    };
    for (const auto& run : {Run{h2o_dump("1.5"), "B1", SpinState::Triplet}, Run{beh2_dump("C"), "B2", SpinState::Triplet},
                            Run{beh2_dump("C"), "A1", SpinState::Singlet}}) {
        CAPTURE(run.path.string());
        const CompiledSystem cs(parse_system(run.path));
        const auto fci = solve(cs.sys);
        const auto spec = spec_for(cs.sys, run.sigma, run.spin);
        const auto r = minimize(cs, spec);
        const double target = sector_minimum(fci, spec.sigma, spec.spin).energy;
        CHECK(r.converged());
        CHECK(r.energy >= target - 1e-9);
        CHECK(r.energy - target < 1.6e-3);
        CHECK(r.energy > fci.roots.front().energy - 1e-9);
        CHECK(std::abs(r.energy - expectation(r.final_state, cs.hamiltonian)) < 1e-12);
        CHECK(std::abs(r.s2 - s_squared_value(run.spin)) < 1e-8);
        REQUIRE(r.trace.size() == static_cast<std::size_t>(r.iterations) + 1);
        CHECK(r.trace.front().energy == doctest::Approx(r.reference_energy).epsilon(1e-12));
        double best = r.trace.front().energy;
        for (const auto& t : r.trace) {
            CHECK(t.energy <= best + 1e-15);
            best = std::min(best, t.energy);
            CHECK(std::abs(t.s2 - s_squared_value(run.spin)) < 1e-8);
            CHECK(t.sector_weight > 1.0 - 1e-10);
        }
        REQUIRE(r.dipole_z.has_value());
        const double mu = expectation(r.final_state, *cs.dipole_z) + cs.sys.nuclear_dipole_z;
        CHECK(std::abs(*r.dipole_z - mu) < 1e-12);
    }
}

TEST_CASE("BeH2 point C: triplet B2 lies below the singlet A1") {
    const CompiledSystem cs(parse_system(beh2_dump("C")));
    const auto t = minimize(cs, spec_for(cs.sys, "B2", SpinState::Triplet));
    const auto s = minimize(cs, spec_for(cs.sys, "A1", SpinState::Singlet));
    CHECK(t.energy < s.energy);
}

TEST_CASE("overlap trace uses the target state") {
    const CompiledSystem cs(parse_system(h2o_dump("2.1")));
    const auto fci = solve(cs.sys);
    const auto spec = spec_for(cs.sys, "A2", SpinState::Singlet);
    const auto target = fci.embed(sector_minimum(fci, spec.sigma, spec.spin));
    const auto r = minimize(cs, spec, {}, &target);
    const auto psi0 = prepare_reference(spec);
    REQUIRE(r.trace.front().overlap2.has_value());
    CHECK(std::abs(*r.trace.front().overlap2 - std::norm(overlap(psi0, target))) < 1e-12);
    CHECK(1.0 - *r.trace.back().overlap2 <= 0.01);
    const auto csv = trace_csv(r.trace);
    CHECK(csv.rfind("iter,energy,grad_norm,s2,sector_weight,overlap2\n", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r.trace.size() + 1);
}

TEST_CASE("iteration cap yields an unconverged result instead of an error") {
    const CompiledSystem cs(parse_system(h2o_dump("0.9")));
    VqeOptions opt;
    opt.optimizer.max_iterations = 2;
    VqeResult r;
    CHECK_NOTHROW(r = minimize(cs, spec_for(cs.sys, "B1", SpinState::Singlet), opt));
    CHECK_FALSE(r.converged());
    CHECK(r.status == LbfgsStatus::MaxIterations);
    CHECK(r.iterations == 2);
}

TEST_CASE("runs are deterministic") {
    const CompiledSystem cs(toy_system("A1"));
    const auto spec = spec_for(cs.sys, "A1", SpinState::Triplet);
    const auto a = minimize(cs, spec), b = minimize(cs, spec);
    CHECK(a.energy == b.energy);
    CHECK(a.parameters == b.parameters);
}
