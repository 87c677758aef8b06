// Copyright 2026 The symvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <symvqe/fermion_operator.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace symvqe {

namespace {

// Canonical order: creators before annihilators, ascending mode within each run.
bool in_order(const LadderOp& left, const LadderOp& right) noexcept {
    if (left.create != right.create) return left.create;
    return left.mode < right.mode;
}

} // namespace

FermionOperator::FermionOperator(const LadderString& ops, Complex coefficient) {
    if (coefficient != 0.0) add_normal_ordered(ops, coefficient);
}

FermionOperator FermionOperator::identity(Complex coefficient) {
    return FermionOperator(LadderString{}, coefficient);
}

void FermionOperator::add_normal_ordered(const LadderString& start, Complex start_coef) {
    std::vector<std::pair<LadderString, Complex>> work{{start, start_coef}};
    while (!work.empty()) {
        auto [ops, coef] = std::move(work.back());
        work.pop_back();
        bool done = true;
        for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
            const LadderOp l = ops[i];
            const LadderOp r = ops[i + 1];
            if (in_order(l, r)) continue;
            done = false;
            if (l.create == r.create && l.mode == r.mode) {
                coef = 0.0;  // a a = a+ a+ = 0
                break;
            }
            if (!l.create && r.create && l.mode == r.mode) {
                // a_p a+_p = 1 - a+_p a_p
                LadderString contracted;
                contracted.reserve(ops.size() - 2);
                contracted.insert(contracted.end(), ops.begin(), ops.begin() + static_cast<long>(i));
                contracted.insert(contracted.end(), ops.begin() + static_cast<long>(i) + 2, ops.end());
                work.emplace_back(std::move(contracted), coef);
            }
            std::swap(ops[i], ops[i + 1]);
            coef = -coef;
            work.emplace_back(std::move(ops), coef);
            coef = 0.0;
            break;
        }
        if (done && coef != 0.0) {
            auto it = terms_.try_emplace(std::move(ops), 0.0).first;
            it->second += coef;
            if (it->second == 0.0) terms_.erase(it);
        }
    }
}

Complex FermionOperator::constant() const {
    auto it = terms_.find(LadderString{});
    return it == terms_.end() ? Complex{} : it->second;
}

int FermionOperator::mode_count() const noexcept {
    int n = 0;
    for (const auto& [ops, c] : terms_)
        for (const auto& op : ops) n = std::max(n, op.mode + 1);
    return n;
}

FermionOperator FermionOperator::adjoint() const {
    FermionOperator out;
    for (const auto& [ops, c] : terms_) {
        LadderString rev(ops.rbegin(), ops.rend());
        for (auto& op : rev) op.create = !op.create;
        out.add_normal_ordered(rev, std::conj(c));
    }
    return out;
}

FermionOperator& FermionOperator::prune(double tol) {
    std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
    return *this;
}

bool FermionOperator::approx_equal(const FermionOperator& other, double tol) const {
    const FermionOperator diff = *this - other;
    return std::all_of(diff.terms_.begin(), diff.terms_.end(),
                       [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

bool FermionOperator::is_anti_hermitian(double tol) const {
    return (*this + adjoint()).approx_equal(FermionOperator{}, tol);
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
    for (const auto& [ops, c] : other.terms_) {
        auto it = terms_.try_emplace(ops, 0.0).first;
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    }
    return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& other) {
    for (const auto& [ops, c] : other.terms_) {
        auto it = terms_.try_emplace(ops, 0.0).first;
        it->second -= c;
        if (it->second == 0.0) terms_.erase(it);
    }
    return *this;
}

FermionOperator& FermionOperator::operator*=(Complex scalar) {
    if (scalar == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [ops, c] : terms_) c *= scalar;
    return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
    FermionOperator out;
    for (const auto& [la, ca] : a.terms_) {
        for (const auto& [lb, cb] : b.terms_) {
            LadderString ops = la;
            ops.insert(ops.end(), lb.begin(), lb.end());
            out.add_normal_ordered(ops, ca * cb);
        }
    }
    return out;
}

FermionOperator& FermionOperator::operator*=(const FermionOperator& other) {
    *this = *this * other;
    return *this;
}

FermionOperator commutator(const FermionOperator& a, const FermionOperator& b) {
    return a * b - b * a;
}

FermionOperator spin_flip(const FermionOperator& op, int n_spatial) {
    FermionOperator out;
    for (const auto& [ops, c] : op.terms()) {
        LadderString flipped = ops;
        for (auto& l : flipped) {
            if (l.mode >= 2 * n_spatial) throw std::out_of_range("spin_flip: mode outside register");
            l.mode = l.mode < n_spatial ? l.mode + n_spatial : l.mode - n_spatial;
        }
        out += FermionOperator(flipped, c);
    }
    return out;
}

bool apply_string(const LadderString& ops, std::uint64_t& bits, double& sign) noexcept {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const std::uint64_t bit = std::uint64_t{1} << it->mode;
        const bool occupied = (bits & bit) != 0;
        if (occupied == it->create) return false;
        if (std::popcount(bits & (bit - 1)) & 1) sign = -sign;
        bits ^= bit;
    }
    return true;
}

std::vector<std::pair<Complex, std::uint64_t>> apply(const FermionOperator& op, std::uint64_t bits) {
    std::map<std::uint64_t, Complex> acc;
    for (const auto& [ops, c] : op.terms()) {
        std::uint64_t b = bits;
        double sign = 1.0;
        if (apply_string(ops, b, sign)) acc[b] += sign * c;
    }
    std::vector<std::pair<Complex, std::uint64_t>> out;
    for (const auto& [b, c] : acc)
        if (c != 0.0) out.emplace_back(c, b);
    return out;
}

std::string format_string(const LadderString& ops, int n_spatial) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) ss << ' ';
        ss << (ops[i].create ? "a+(" : "a(");
        if (n_spatial > 0) {
            const auto so = SpinOrbital::from_flat(ops[i].mode, n_spatial);
            ss << so.spatial << (so.spin == Spin::Up ? 'u' : 'd');
        } else {
            ss << ops[i].mode;
        }
        ss << ')';
    }
    return ss.str();
}

std::string FermionOperator::to_string(int n_spatial) const {
    std::ostringstream ss;
    bool first = true;
    for (const auto& [ops, c] : terms_) {
        if (!first) ss << " + ";
        first = false;
        char buf[64];
        if (c.imag() == 0.0) {
            std::snprintf(buf, sizeof buf, "%.12g", c.real());
        } else {
            std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
        }
        ss << buf;
        if (!ops.empty()) ss << ' ' << format_string(ops, n_spatial);
    }
    return first ? "0" : ss.str();
}

} // namespace symvqe
