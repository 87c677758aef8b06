// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/lbfgs.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace symvqe {

namespace {

using Vec = Eigen::VectorXd;

struct Point {
    double alpha = 0.0;
    double f = 0.0;
    double slope = 0.0;  // directional derivative
    Vec x;
    Vec g;
};

class Evaluator {
public:
    Evaluator(const Objective& obj, int& count) : obj_(obj), count_(count) {}

    double operator()(const Vec& x, Vec& g) {
        std::vector<double> xs(x.data(), x.data() + x.size());
        std::vector<double> gs(static_cast<std::size_t>(x.size()), 0.0);
        const double f = obj_(xs, gs);
        ++count_;
        g = Eigen::Map<const Vec>(gs.data(), static_cast<Eigen::Index>(gs.size()));
        if (!std::isfinite(f) || !g.allFinite()) throw std::runtime_error("objective returned a non-finite value");
        return f;
    }

private:
    const Objective& obj_;
    int& count_;
};

// Minimizer of the cubic through (a, fa, da) and (b, fb, db), safeguarded into [lo, hi].
double cubic_min(double a, double fa, double da, double b, double fb, double db) {
    const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
    const double disc = d1 * d1 - da * db;
    if (disc < 0.0) return 0.5 * (a + b);
    const double d2 = std::copysign(std::sqrt(disc), b - a);
    const double t = b - (b - a) * (db + d2 - d1) / (db - da + 2.0 * d2);
    const double lo = std::min(a, b), hi = std::max(a, b);
    const double margin = 0.1 * (hi - lo);
    if (!std::isfinite(t) || t < lo + margin || t > hi - margin) return 0.5 * (a + b);
    return t;
}

bool line_search(Evaluator& eval, Point start, const Vec& dir, double alpha0, const LbfgsOptions& opt,
                 Point& out) {
    start.alpha = 0.0;
    auto probe = [&](double alpha) {
        Point p;
        p.alpha = alpha;
        p.x = start.x + alpha * dir;
        p.f = eval(p.x, p.g);
        p.slope = p.g.dot(dir);
        return p;
    };
    const double f0 = start.f, d0 = start.slope;

    auto zoom = [&](Point lo, Point hi, int budget) {
        for (int i = 0; i < budget; ++i) {
            const double a = cubic_min(lo.alpha, lo.f, lo.slope, hi.alpha, hi.f, hi.slope);
            Point p = probe(a);
            if (p.f > f0 + opt.c1 * a * d0 || p.f >= lo.f) {
                hi = std::move(p);
            } else {
                if (std::abs(p.slope) <= -opt.c2 * d0) {
                    out = std::move(p);
                    return true;
                }
                if (p.slope * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
                lo = std::move(p);
            }
            if (std::abs(hi.alpha - lo.alpha) < 1e-16 * std::max(1.0, lo.alpha)) break;
        }
        // Accept a sufficient-decrease point when curvature cannot be met at this precision.
        if (lo.alpha > 0.0 && lo.f < f0) {
            out = std::move(lo);
            return true;
        }
        return false;
    };

    Point prev = start;
    double alpha = alpha0;
    for (int i = 0; i < opt.max_line_search; ++i) {
        Point p = probe(alpha);
        if (p.f > f0 + opt.c1 * alpha * d0 || (i > 0 && p.f >= prev.f)) {
            return zoom(std::move(prev), std::move(p), opt.max_line_search);
        }
        if (std::abs(p.slope) <= -opt.c2 * d0) {
            out = std::move(p);
            return true;
        }
        if (p.slope >= 0.0) return zoom(std::move(p), std::move(prev), opt.max_line_search);
        prev = std::move(p);
        alpha *= 2.0;
    }
    if (prev.alpha > 0.0 && prev.f < f0) {
        out = std::move(prev);
        return true;
    }
    return false;
}

} // namespace

std::string to_string(LbfgsStatus status) {
    switch (status) {
    case LbfgsStatus::EnergyConverged: return "energy-converged";
    case LbfgsStatus::GradientConverged: return "gradient-converged";
    case LbfgsStatus::MaxIterations: return "max-iterations";
    case LbfgsStatus::LineSearchStalled: return "line-search-stalled";
    }
    return "unknown";
}

LbfgsResult lbfgs_minimize(const Objective& objective, std::vector<double> x0, const LbfgsOptions& opt,
                           const IterationCallback& callback) {
    LbfgsResult res;
    Evaluator eval(objective, res.evaluations);
    const auto n = static_cast<Eigen::Index>(x0.size());

    Point cur;
    cur.x = Eigen::Map<const Vec>(x0.data(), n);
    cur.f = eval(cur.x, cur.g);

    auto report = [&](int it) {
        if (!callback) return;
        std::vector<double> xs(cur.x.data(), cur.x.data() + n), gs(cur.g.data(), cur.g.data() + n);
        callback(it, xs, cur.f, gs);
    };
    auto finish = [&](LbfgsStatus status) {
        res.status = status;
        res.x.assign(cur.x.data(), cur.x.data() + n);
        res.g.assign(cur.g.data(), cur.g.data() + n);
        res.f = cur.f;
        return res;
    };

    report(0);
    if (n == 0 || cur.g.lpNorm<Eigen::Infinity>() < opt.tol_gradient) return finish(LbfgsStatus::GradientConverged);

    std::deque<std::pair<Vec, Vec>> mem;  // (s, y)
    bool restarted = false;
    for (int it = 1; it <= opt.max_iterations; ++it) {
        // Two-loop recursion.
        Vec q = cur.g;
        std::vector<double> alpha(mem.size());
        for (std::size_t i = mem.size(); i-- > 0;) {
            const auto& [s, y] = mem[i];
            alpha[i] = s.dot(q) / y.dot(s);
            q -= alpha[i] * y;
        }
        if (!mem.empty()) {
            const auto& [s, y] = mem.back();
            q *= s.dot(y) / y.dot(y);
        }
        for (std::size_t i = 0; i < mem.size(); ++i) {
            const auto& [s, y] = mem[i];
            const double beta = y.dot(q) / y.dot(s);
            q += (alpha[i] - beta) * s;
        }
        Vec dir = -q;
        cur.slope = cur.g.dot(dir);
        if (!(cur.slope < 0.0)) {
            mem.clear();
            dir = -cur.g;
            cur.slope = cur.g.dot(dir);
        }
        const double alpha0 = mem.empty() ? std::min(1.0, 1.0 / cur.g.norm()) : 1.0;

        Point next;
        if (!line_search(eval, cur, dir, alpha0, opt, next)) {
            if (mem.empty() || restarted) {
                res.iterations = it - 1;
                return finish(LbfgsStatus::LineSearchStalled);
            }
            mem.clear();
            restarted = true;
            --it;
            continue;
        }
        restarted = false;
        const double df = std::abs(next.f - cur.f);
        Vec s = next.x - cur.x, y = next.g - cur.g;
        cur = std::move(next);
        res.iterations = it;
        report(it);
        if (s.dot(y) > 1e-16 * y.squaredNorm()) {
            mem.emplace_back(std::move(s), std::move(y));
            if (static_cast<int>(mem.size()) > opt.memory) mem.pop_front();
        }
        if (cur.g.lpNorm<Eigen::Infinity>() < opt.tol_gradient) return finish(LbfgsStatus::GradientConverged);
        if (df < opt.tol_energy) return finish(LbfgsStatus::EnergyConverged);
    }
    return finish(LbfgsStatus::MaxIterations);
}

} // namespace symvqe
