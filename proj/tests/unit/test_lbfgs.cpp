// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/lbfgs.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace symvqe;

namespace {

double rosenbrock(const std::vector<double>& x, std::vector<double>& g) {
    double f = 0.0;
    std::fill(g.begin(), g.end(), 0.0);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i], b = 1.0 - x[i];
        f += 100.0 * a * a + b * b;
        g[i] += -400.0 * a * x[i] - 2.0 * b;
        g[i + 1] += 200.0 * a;
    }
    return f;
}

} // namespace

TEST_CASE("Rosenbrock minimum") {
    LbfgsOptions opt;
    opt.tol_energy = 0.0;
    opt.tol_gradient = 1e-9;
    for (const auto& x0 : std::vector<std::vector<double>>{{-1.2, 1.0}, {0.0, 0.0, 0.0, 0.0, 0.0}, {2.0, -1.0, 0.5}}) {
        const auto r = lbfgs_minimize(rosenbrock, x0, opt);
        CHECK(r.status == LbfgsStatus::GradientConverged);
        CHECK(r.converged());
        for (double v : r.x) CHECK(std::abs(v - 1.0) < 1e-6);
        CHECK(r.f < 1e-12);
        CHECK(r.evaluations >= r.iterations);
    }
}

TEST_CASE("convex quadratic converges in few iterations") {
    const std::vector<double> d = {1.0, 3.0, 10.0, 0.5};
    auto quad = [&d](const std::vector<double>& x, std::vector<double>& g) {
        double f = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            f += 0.5 * d[i] * (x[i] - 1.0 * i) * (x[i] - 1.0 * i);
            g[i] = d[i] * (x[i] - 1.0 * i);
        }
        return f;
    };
    LbfgsOptions opt;
    opt.tol_energy = 0.0;
    opt.tol_gradient = 1e-10;
    const auto r = lbfgs_minimize(quad, {5.0, 5.0, 5.0, 5.0}, opt);
    CHECK(r.converged());
    CHECK(r.iterations < 30);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(r.x[i] - 1.0 * i) < 1e-9);
}

TEST_CASE("accepted steps never increase the objective") {
    std::vector<double> seen;
    int first_iteration = -1;
    const auto r = lbfgs_minimize(rosenbrock, {-1.2, 1.0, -0.5}, {},
                                  [&](int it, const std::vector<double>&, double f, const std::vector<double>&) {
                                      if (first_iteration < 0) first_iteration = it;
                                      seen.push_back(f);
                                  });
    CHECK(first_iteration == 0);
    REQUIRE(seen.size() == static_cast<std::size_t>(r.iterations) + 1);
    for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i] <= seen[i - 1]);
    CHECK(seen.back() == r.f);
}

TEST_CASE("iteration cap is reported, not thrown") {
    LbfgsOptions opt;
    opt.max_iterations = 3;
    LbfgsResult r;
    CHECK_NOTHROW(r = lbfgs_minimize(rosenbrock, {-1.2, 1.0}, opt));
    CHECK(r.status == LbfgsStatus::MaxIterations);
    CHECK_FALSE(r.converged());
    CHECK(r.iterations == 3);
}

TEST_CASE("energy tolerance stops a slowly improving run") {
    LbfgsOptions opt;
    opt.tol_energy = 1e-3;
    opt.tol_gradient = 0.0;
    const auto r = lbfgs_minimize(rosenbrock, {-1.2, 1.0}, opt);
    CHECK(r.status == LbfgsStatus::EnergyConverged);
}

TEST_CASE("non-finite objective values throw") {
    auto bad = [](const std::vector<double>& x, std::vector<double>& g) {
        g[0] = 1.0;
        return x[0] < 0.5 ? std::numeric_limits<double>::quiet_NaN() : x[0];
    };
    CHECK_THROWS_AS((void)lbfgs_minimize(bad, {1.0}), std::runtime_error);
    auto bad_grad = [](const std::vector<double>& x, std::vector<double>& g) {
        g[0] = std::numeric_limits<double>::infinity();
        return x[0];
    };
    CHECK_THROWS_AS((void)lbfgs_minimize(bad_grad, {1.0}), std::runtime_error);
}

TEST_CASE("a stationary start converges immediately") {
    auto flat = [](const std::vector<double>& x, std::vector<double>& g) {
        g[0] = 2.0 * x[0];
        return x[0] * x[0];
    };
    const auto r = lbfgs_minimize(flat, {0.0});
    CHECK(r.status == LbfgsStatus::GradientConverged);
    CHECK(r.iterations == 0);
    CHECK(to_string(r.status) == "gradient-converged");
}
