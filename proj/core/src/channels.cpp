// Copyright 2026 The usynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "usynth/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "usynth/geometry.hpp"

namespace usynth {

namespace {

const Complex kMinusI{0.0, -1.0};

// Hermitian basis of n x n matrices, each element given by one upper entry
// with implied conjugate completion: E_kk, E_kl + E_lk, -i E_kl + i E_lk.
struct BasisElement {
    std::size_t k;
    std::size_t l;
    Complex v;
};

std::vector<BasisElement> hermitian_basis(std::size_t n) {
    std::vector<BasisElement> out;
    out.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back({k, k, 1.0});
        for (std::size_t l = k + 1; l < n; ++l) {
            out.push_back({k, l, 1.0});
            out.push_back({k, l, kMinusI});
        }
    }
    return out;
}

// tr(G M) for Hermitian M.
double basis_trace(const BasisElement &g, const ComplexMatrix &m) {
    if (g.k == g.l) return (g.v * m(g.k, g.k)).real();
    return 2.0 * (g.v * m(g.l, g.k)).real();
}

void add_hermitian(std::vector<SdpEntry> &out, std::size_t block, const ComplexMatrix &m, double scale = 1.0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r; c < m.cols(); ++c) {
            const Complex v = scale * m(r, c);
            if (v != Complex{}) out.push_back({block, r, c, r == c ? Complex(v.real()) : v});
        }
}

// Adds the n^2 constraints T + T' - rho (x) I = 0 on blocks (t, tp, rho).
void add_tester_constraints(SdpProblem &p, std::size_t d1, std::size_t d2, std::size_t t, std::size_t tp,
                            std::size_t rho) {
    for (const auto &g : hermitian_basis(d1 * d2)) {
        SdpConstraint c;
        c.entries.push_back({t, g.k, g.l, g.v});
        c.entries.push_back({tp, g.k, g.l, g.v});
        const std::size_t i = g.k / d2, a = g.k % d2;
        const std::size_t j = g.l / d2, b = g.l % d2;
        if (a == b) c.entries.push_back({rho, i, j, -g.v});
        p.constraints.push_back(std::move(c));
    }
    SdpConstraint tr;
    for (std::size_t i = 0; i < d1; ++i) tr.entries.push_back({rho, i, i, 1.0});
    tr.rhs = 1.0;
    p.constraints.push_back(std::move(tr));
}

void check_same_dims(const ChoiOperator &a, const ChoiOperator &b) {
    if (a.d1 != b.d1 || a.d2 != b.d2 || a.j.dim() != b.j.dim())
        throw Error(ErrorKind::DimensionMismatch, "Choi operators have different dimensions");
}

SdpSolution solve_checked(const SdpProblem &p, const SdpOptions &o, const char *what) {
    SdpSolution sol = solve(p, o);
    if (sol.status != SdpStatus::Optimal) {
        throw Error(ErrorKind::SdpFailure, std::string(what) + " SDP ended with status " + status_name(sol.status) +
                                               " (gap " + std::to_string(sol.gap) + ")");
    }
    return sol;
}

}  // namespace

void ProbabilityDistribution::validate(double tol) const {
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < -tol) throw Error(ErrorKind::InvalidArgument, "negative or non-finite weight");
        total += w;
    }
    if (std::abs(total - 1.0) > tol) throw Error(ErrorKind::InvalidArgument, "weights do not sum to one");
}

ProbabilityDistribution ProbabilityDistribution::normalized(std::vector<double> raw) {
    double total = 0.0;
    for (auto &w : raw) {
        if (!std::isfinite(w)) throw Error(ErrorKind::NonFinite, "non-finite weight");
        w = std::max(w, 0.0);
        total += w;
    }
    if (!(total > 0.0)) throw Error(ErrorKind::InvalidArgument, "no positive weight to normalize");
    for (auto &w : raw) w /= total;
    return {std::move(raw)};
}

ProbabilityDistribution ProbabilityDistribution::point_mass(std::size_t n, std::size_t at) {
    if (at >= n) throw Error(ErrorKind::InvalidArgument, "point mass index out of range");
    std::vector<double> w(n, 0.0);
    w[at] = 1.0;
    return {std::move(w)};
}

ChoiOperator choi(const Unitary &u) {
    const std::size_t d = u.dim();
    ComplexMatrix j(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t jj = 0; jj < d; ++jj)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) j(i * d + a, jj * d + b) = u(a, i) * std::conj(u(b, jj));
    return {HermitianMatrix::symmetrized(j), d, d};
}

ChoiOperator mix(const std::vector<ChoiOperator> &channels, const std::vector<double> &p) {
    if (channels.empty()) throw Error(ErrorKind::EmptyCandidates, "nothing to mix");
    if (channels.size() != p.size()) throw Error(ErrorKind::DimensionMismatch, "weights and channels differ in length");
    ComplexMatrix acc(channels[0].j.dim(), channels[0].j.dim());
    for (std::size_t x = 0; x < channels.size(); ++x) {
        check_same_dims(channels[0], channels[x]);
        acc.axpy(p[x], channels[x].j.matrix());
    }
    return {HermitianMatrix::symmetrized(acc), channels[0].d1, channels[0].d2};
}

double unitary_distance(const Unitary &u, const Unitary &v) {
    if (u.dim() != v.dim()) throw Error(ErrorKind::DimensionMismatch, "unitaries differ in dimension");
    const auto eig = unitary_eig(u.adjoint() * v);
    const double r = project_onto_hull(eig.values, 0.0).distance;
    return std::sqrt(std::max(0.0, 1.0 - r * r));
}

SdpProblem diamond_problem(const ChoiOperator &a, const ChoiOperator &b) {
    check_same_dims(a, b);
    const std::size_t n = a.d1 * a.d2;
    SdpProblem p;
    const std::size_t t = p.add_block(BlockKind::Dense, n);
    const std::size_t tp = p.add_block(BlockKind::Dense, n);
    const std::size_t rho = p.add_block(BlockKind::Dense, a.d1);
    add_hermitian(p.objective, t, a.j.matrix() - b.j.matrix());
    add_tester_constraints(p, a.d1, a.d2, t, tp, rho);
    return p;
}

DiamondResult diamond_distance(const ChoiOperator &a, const ChoiOperator &b, const SdpOptions &options) {
    const SdpSolution sol = solve_checked(diamond_problem(a, b), options, "diamond-norm");
    return {std::max(0.0, sol.primal_value), sol.gap, sol.iterations};
}

SdpProblem optimal_mix_problem(const ChoiOperator &target, const std::vector<ChoiOperator> &candidates,
                               MixLowering lowering) {
    if (candidates.empty()) throw Error(ErrorKind::EmptyCandidates, "optimal_mix needs at least one candidate");
    for (const auto &c : candidates) check_same_dims(target, c);
    const std::size_t d1 = target.d1, d2 = target.d2, n = d1 * d2;
    const std::size_t nx = candidates.size();
    SdpProblem p;

    if (lowering == MixLowering::PrimalForm) {
        const std::size_t t = p.add_block(BlockKind::Dense, n);
        const std::size_t tp = p.add_block(BlockKind::Dense, n);
        const std::size_t rho = p.add_block(BlockKind::Dense, d1);
        const std::size_t q = p.add_block(BlockKind::Diagonal, nx + 1);  // q_x then t
        add_hermitian(p.objective, t, target.j);
        p.objective.push_back({q, nx, nx, -1.0});
        add_tester_constraints(p, d1, d2, t, tp, rho);
        for (std::size_t x = 0; x < nx; ++x) {
            SdpConstraint c;
            add_hermitian(c.entries, t, candidates[x].j);
            c.entries.push_back({q, x, x, 1.0});
            c.entries.push_back({q, nx, nx, -1.0});
            p.constraints.push_back(std::move(c));
        }
        return p;
    }

    const std::size_t s = p.add_block(BlockKind::Dense, n);
    const std::size_t s1 = p.add_block(BlockKind::Dense, n);
    const std::size_t z = p.add_block(BlockKind::Dense, d1);
    const std::size_t lp = p.add_block(BlockKind::Diagonal, nx + 2);  // p_x, slack, r
    const std::size_t slack = nx, r = nx + 1;
    p.objective.push_back({lp, r, r, -1.0});
    // S1 - S - sum p_x J_x = -J(A).
    for (const auto &g : hermitian_basis(n)) {
        SdpConstraint c;
        c.entries.push_back({s1, g.k, g.l, g.v});
        c.entries.push_back({s, g.k, g.l, -g.v});
        for (std::size_t x = 0; x < nx; ++x) {
            const double v = basis_trace(g, candidates[x].j);
            if (v != 0.0) c.entries.push_back({lp, x, x, -v});
        }
        c.rhs = -basis_trace(g, target.j);
        p.constraints.push_back(std::move(c));
    }
    // Z + tr_2 S - r I = 0.
    for (const auto &g : hermitian_basis(d1)) {
        SdpConstraint c;
        c.entries.push_back({z, g.k, g.l, g.v});
        for (std::size_t a = 0; a < d2; ++a) c.entries.push_back({s, g.k * d2 + a, g.l * d2 + a, g.v});
        if (g.k == g.l) c.entries.push_back({lp, r, r, -1.0});
        p.constraints.push_back(std::move(c));
    }
    SdpConstraint total;
    for (std::size_t x = 0; x <= slack; ++x) total.entries.push_back({lp, x, x, 1.0});
    total.rhs = 1.0;
    p.constraints.push_back(std::move(total));
    return p;
}

namespace {

MixResult solve_mix(const ChoiOperator &target, const std::vector<ChoiOperator> &candidates, MixLowering lowering,
                    const SdpOptions &o) {
    const SdpProblem p = optimal_mix_problem(target, candidates, lowering);
    const SdpSolution sol = solve_checked(p, o, "optimal-mix");
    const std::size_t nx = candidates.size();
    std::vector<double> raw(nx);
    MixResult out;
    if (lowering == MixLowering::DualForm) {
        const ComplexMatrix &lp = sol.x[3];
        for (std::size_t x = 0; x < nx; ++x) raw[x] = lp(x, 0).real();
        out.value = -sol.primal_value;
    } else {
        const std::size_t base = sol.y.size() - nx;
        for (std::size_t x = 0; x < nx; ++x) raw[x] = sol.y[base + x];
        out.value = sol.primal_value;
    }
    out.value = std::max(0.0, out.value);
    out.gap = sol.gap;
    out.iterations = sol.iterations;
    double total = 0.0;
    for (double w : raw) total += std::max(w, 0.0);
    if (total > 0.0) {
        out.p = ProbabilityDistribution::normalized(std::move(raw));
    } else {
        out.p = ProbabilityDistribution::point_mass(nx, 0);
    }
    return out;
}

}  // namespace

MixResult optimal_mix(const ChoiOperator &target, const std::vector<ChoiOperator> &candidates,
                      const MixOptions &options) {
    MixResult out = solve_mix(target, candidates, options.lowering, options.sdp);
    if (options.paranoid) {
        const MixLowering other =
            options.lowering == MixLowering::DualForm ? MixLowering::PrimalForm : MixLowering::DualForm;
        out.cross_check_value = solve_mix(target, candidates, other, options.sdp).value;
        out.cross_checked = true;
    }
    return out;
}

void check_density(const ComplexMatrix &rho, double tol) {
    if (!rho.is_square() || !rho.all_finite()) throw Error(ErrorKind::NotDensity, "density matrix must be square and finite");
    if (!is_hermitian(rho, tol)) throw Error(ErrorKind::NotDensity, "density matrix is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > tol) throw Error(ErrorKind::NotDensity, "density matrix trace is not one");
    const auto ev = hermitian_eig(HermitianMatrix::symmetrized(rho)).values;
    if (ev.back() < -tol) throw Error(ErrorKind::NotDensity, "density matrix is not positive semidefinite");
}

double fidelity(const ComplexMatrix &rho, const ComplexMatrix &sigma) {
    check_density(rho);
    check_density(sigma);
    if (rho.rows() != sigma.rows()) throw Error(ErrorKind::DimensionMismatch, "states differ in dimension");
    const auto a = psd_sqrt(HermitianMatrix::symmetrized(rho));
    const auto b = psd_sqrt(HermitianMatrix::symmetrized(sigma));
    const double f = trace_norm(a.matrix() * b.matrix());
    return std::clamp(f * f, 0.0, 1.0);
}

double trace_distance(const ComplexMatrix &rho, const ComplexMatrix &sigma) {
    check_density(rho);
    check_density(sigma);
    if (rho.rows() != sigma.rows()) throw Error(ErrorKind::DimensionMismatch, "states differ in dimension");
    return std::clamp(0.5 * trace_norm(rho - sigma), 0.0, 1.0);
}

}  // namespace usynth
