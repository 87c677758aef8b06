// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lbfgs.hpp
 * @brief Limited-memory BFGS with a strong-Wolfe line search.
 */

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace symvqe {

struct LbfgsOptions {
    int memory = 10;
    int max_iterations = 2000;
    double tol_energy = 1e-9;    ///< stop when |f_k - f_{k-1}| < tol_energy
    double tol_gradient = 1e-7;  ///< stop when max |g_i| < tol_gradient
    int max_line_search = 40;
    double c1 = 1e-4;
    double c2 = 0.9;
};

enum class LbfgsStatus { EnergyConverged, GradientConverged, MaxIterations, LineSearchStalled };

[[nodiscard]] std::string to_string(LbfgsStatus status);

struct LbfgsResult {
    std::vector<double> x;
    double f = 0.0;
    std::vector<double> g;
    int iterations = 0;
    int evaluations = 0;
    LbfgsStatus status = LbfgsStatus::MaxIterations;

    [[nodiscard]] bool converged() const noexcept {
        return status == LbfgsStatus::EnergyConverged || status == LbfgsStatus::GradientConverged;
    }
};

/** Returns f(x) and writes the gradient into g (already sized). */
using Objective = std::function<double(const std::vector<double>& x, std::vector<double>& g)>;

/** Called for the starting point (iteration 0) and after every accepted step. */
using IterationCallback =
    std::function<void(int iteration, const std::vector<double>& x, double f, const std::vector<double>& g)>;

/** Throws std::runtime_error when the objective returns a non-finite value. */
[[nodiscard]] LbfgsResult lbfgs_minimize(const Objective& objective, std::vector<double> x0,
                                         const LbfgsOptions& options = {},
                                         const IterationCallback& callback = nullptr);

} // namespace symvqe
