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

#include "usynth/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include "usynth/error.hpp"
#include "usynth/geometry.hpp"
#include "usynth/json_io.hpp"

namespace usynth {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform grid over [lo, hi] with spacing at most `step`, both ends included.
std::vector<double> closed_grid(double lo, double hi, double step) {
    if (hi <= lo) return {lo};
    const int n = static_cast<int>(std::ceil((hi - lo) / step - 1e-12));
    std::vector<double> out;
    for (int k = 0; k <= n; ++k) out.push_back(lo + (hi - lo) * k / n);
    return out;
}

// Grid over [-pi, pi) with spacing at most `step`.
std::vector<double> circle_grid(double step) {
    const int n = std::max(1, static_cast<int>(std::ceil(2.0 * kPi / step - 1e-12)));
    std::vector<double> out;
    for (int k = 0; k < n; ++k) out.push_back(-kPi + 2.0 * kPi * k / n);
    return out;
}

std::string phase_key(const ComplexMatrix &m) {
    Complex ref(1.0, 0.0);
    for (const auto &z : m.data())
        if (std::abs(z) > 0.1) {
            ref = std::conj(z) / std::abs(z);
            break;
        }
    std::string key;
    for (const auto &z : m.data()) {
        const Complex w = z * ref;
        key += std::to_string(std::llround(w.real() * 1e6)) + ',' + std::to_string(std::llround(w.imag() * 1e6)) + ';';
    }
    return key;
}

std::vector<Unitary> close_group(const std::vector<ComplexMatrix> &gens, std::size_t limit) {
    const std::size_t d = gens[0].rows();
    std::vector<ComplexMatrix> elems{ComplexMatrix::identity(d)};
    std::unordered_set<std::string> seen{phase_key(elems[0])};
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const auto &g : gens) {
            ComplexMatrix m = elems[k] * g;
            if (seen.insert(phase_key(m)).second) {
                elems.push_back(std::move(m));
                if (elems.size() > limit) throw Error(ErrorKind::BudgetExceeded, "group closure did not terminate");
            }
        }
    }
    std::vector<Unitary> out;
    out.reserve(elems.size());
    for (auto &e : elems) out.emplace_back(e, 1e-9);
    return out;
}

ComplexMatrix diag_phases(const std::vector<double> &phases) {
    ComplexMatrix m(phases.size(), phases.size());
    for (std::size_t i = 0; i < phases.size(); ++i) m(i, i) = std::polar(1.0, phases[i]);
    return m;
}

void check_family_args(double eps, std::size_t d, double mesh) {
    if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorKind::InvalidArgument, "family needs eps in (0, 1]");
    if (d < 2 || d > 4) throw Error(ErrorKind::InvalidArgument, "family needs d in {2, 3, 4}");
    if (!(mesh > 0.0) || !std::isfinite(mesh)) throw Error(ErrorKind::InvalidArgument, "mesh must be positive");
}

}  // namespace

BoundPoint theorem1_bounds(double eps, std::size_t d) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw Error(ErrorKind::InvalidArgument, "eps must lie in [0, 1]");
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 2");
    BoundPoint b;
    b.eps = eps;
    b.d = d;
    // 1 - sqrt(1 - e^2) without cancellation for small e.
    b.delta = eps * eps / (1.0 + std::sqrt(1.0 - eps * eps));
    const double dd = static_cast<double>(d);
    b.lower = 4.0 * b.delta / dd * (1.0 - b.delta / dd);
    b.upper = eps * eps;
    b.weak_lower = 2.0 * eps * eps / dd;
    return b;
}

std::vector<BoundPoint> curve_sweep(std::size_t d, const std::vector<double> &eps_grid) {
    std::vector<BoundPoint> rows;
    rows.reserve(eps_grid.size());
    for (double e : eps_grid) rows.push_back(theorem1_bounds(e, d));
    return rows;
}

std::string curve_csv(const std::vector<BoundPoint> &rows) {
    std::ostringstream out;
    out << "eps,delta,lower,upper\n";
    for (const auto &r : rows)
        out << format_number(r.eps) << ',' << format_number(r.delta) << ',' << format_number(r.lower) << ','
            << format_number(r.upper) << '\n';
    return out.str();
}

std::vector<double> linear_grid(double a, double b, double step) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(step > 0.0) || b < a)
        throw Error(ErrorKind::InvalidArgument, "grid needs finite a <= b and step > 0");
    std::vector<double> out;
    for (long k = 0;; ++k) {
        const double x = a + static_cast<double>(k) * step;
        if (x > b + step * 1e-9) break;
        out.push_back(std::min(x, b));
    }
    return out;
}

AxialResult axial_optimal(double target_theta, const std::vector<double> &thetas) {
    if (thetas.empty()) throw Error(ErrorKind::EmptyCandidates, "axial_optimal needs at least one angle");
    std::vector<std::complex<double>> pts;
    for (double t : thetas) {
        if (!std::isfinite(t)) throw Error(ErrorKind::NonFinite, "non-finite angle");
        pts.push_back(std::polar(1.0, t));
    }
    const auto proj = project_onto_hull(pts, std::polar(1.0, target_theta));
    std::vector<double> w(thetas.size(), 0.0);
    for (const auto &[i, x] : proj.weights) w[i] += x;
    AxialResult r;
    r.p = ProbabilityDistribution::normalized(w);
    r.value = proj.distance / 2.0;
    return r;
}

std::vector<Unitary> clifford_group(std::size_t d) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    const ComplexMatrix h{{s, s}, {s, -s}};
    const ComplexMatrix ph{{1.0, 0.0}, {0.0, i}};
    switch (d) {
        case 2:
            return close_group({h, ph}, 24);
        case 3: {
            const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
            ComplexMatrix f(3, 3);
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k) f(j, k) = std::pow(w, static_cast<double>(j * k)) / std::sqrt(3.0);
            ComplexMatrix p = ComplexMatrix::identity(3);
            p(2, 2) = w;
            return close_group({f, p}, 216);
        }
        case 4: {
            const ComplexMatrix id = ComplexMatrix::identity(2);
            ComplexMatrix cnot(4, 4);
            cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
            return close_group({kron(h, id), kron(id, h), kron(ph, id), kron(id, ph), cnot}, 11520);
        }
        default:
            throw Error(ErrorKind::InvalidArgument, "clifford_group supports d in {2, 3, 4}");
    }
}

std::vector<Unitary> lower_family(double eps, std::size_t d, double mesh) {
    check_family_args(eps, d, mesh);
    const double a = std::asin(eps);
    if (mesh > a) throw Error(ErrorKind::MeshTooCoarse, "mesh is coarser than the eigenphase arc");
    // Symmetric about zero so the optimal tuple (all extra phases 0) is present.
    const int half = static_cast<int>(std::ceil(a / mesh - 1e-12));
    std::vector<double> grid;
    for (int j = -half; j <= half; ++j) grid.push_back(a * j / half);
    // Extra eigenphases as nondecreasing tuples; order does not matter after
    // conjugating by the whole group.
    std::vector<std::vector<double>> tuples{{a, -a}};
    for (std::size_t k = 2; k < d; ++k) {
        std::vector<std::vector<double>> next;
        for (const auto &t : tuples)
            for (double g : grid)
                if (t.size() == 2 || g >= t.back()) {
                    auto u = t;
                    u.push_back(g);
                    next.push_back(std::move(u));
                }
        tuples = std::move(next);
    }
    const auto group = clifford_group(d);
    std::vector<Unitary> out;
    out.reserve(group.size() * tuples.size());
    for (const auto &t : tuples) {
        const ComplexMatrix dm = diag_phases(t);
        for (const auto &c : group) out.emplace_back(c.matrix() * dm * c.adjoint().matrix(), 1e-9);
    }
    return out;
}

std::vector<Unitary> upper_family(double eps, std::size_t d, double mesh) {
    check_family_args(eps, d, mesh);
    const double theta_max = std::acos(eps);
    if (eps < 1.0 && mesh > theta_max) throw Error(ErrorKind::MeshTooCoarse, "mesh is coarser than the rotation range");
    const auto thetas = closed_grid(0.0, theta_max, mesh);
    const auto phases = circle_grid(mesh);
    // Levels 2.. share one phase relative to the rotation block; without it
    // the family misses the torus of U(d-1) that the target needs.
    const std::vector<double> rest = d > 2 ? phases : std::vector<double>{0.0};
    std::vector<Unitary> out;
    out.reserve(thetas.size() * phases.size() * phases.size() * rest.size());
    for (double th : thetas) {
        for (double ga : rest) {
            ComplexMatrix r = ComplexMatrix::identity(d);
            r(0, 0) = std::cos(th);
            r(0, 1) = -std::sin(th);
            r(1, 0) = std::sin(th);
            r(1, 1) = std::cos(th);
            for (std::size_t k = 2; k < d; ++k) r(k, k) = std::polar(1.0, ga);
            for (double al : phases) {
                ComplexMatrix v1 = ComplexMatrix::identity(d);
                v1(1, 1) = std::polar(1.0, al);
                const ComplexMatrix left = v1 * r;
                for (double be : phases) {
                    ComplexMatrix m = left;
                    const Complex ph = std::polar(1.0, be);
                    for (std::size_t row = 0; row < d; ++row) m(row, 1) *= ph;
                    out.emplace_back(m, 1e-9);
                }
            }
        }
    }
    return out;
}

Unitary upper_worst_target(std::size_t d) {
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 2");
    ComplexMatrix r = ComplexMatrix::identity(d);
    r(0, 0) = 0.0;
    r(0, 1) = -1.0;
    r(1, 0) = 1.0;
    r(1, 1) = 0.0;
    return Unitary(r);
}

SharpnessResult sharpness(Family family, double eps, std::size_t d, double mesh, const MixOptions &options) {
    SharpnessResult r;
    std::vector<Unitary> members;
    Unitary target = Unitary::identity(d);
    if (family == Family::Lower) {
        members = lower_family(eps, d, mesh);
        r.bound = theorem1_bounds(eps, d).lower;
    } else {
        const auto all = upper_family(eps, d, mesh);
        target = upper_worst_target(d);
        for (const auto &m : all)
            if (unitary_distance(target, m) <= 2.0 * eps + mesh) members.push_back(m);
        r.family_size = all.size();
        r.bound = eps * eps;
    }
    if (family == Family::Lower) r.family_size = members.size();
    r.candidates = members.size();
    std::vector<ChoiOperator> chans;
    chans.reserve(members.size());
    for (const auto &m : members) chans.push_back(choi(m));
    const auto mixres = optimal_mix(choi(target), chans, options);
    r.value = mixres.value;
    r.gap = mixres.gap;
    r.slack = r.value - r.bound;
    return r;
}

std::vector<MagicVector> deep_hole_covering(const MagicVector &target, double eps, Rng &rng) {
    if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::InvalidArgument, "deep_hole_covering needs eps in (0, 1)");
    const double phi = std::asin(eps);
    const double fine = std::sin(phi / 3.0);
    // Outside 2 phi the global eps-covering suffices; inside, a fine local
    // net keeps the annulus between the tetrahedron and the removed ball
    // covered.
    std::vector<MagicVector> base;
    if (3.0 * phi >= kPi / 2.0) {
        base = sphere_covering(fine);
    } else {
        base = sphere_covering(eps);
        const auto local = cap_covering(target, std::sin(3.0 * phi), fine);
        base.insert(base.end(), local.begin(), local.end());
    }
    const double inner = std::cos(phi);
    std::vector<MagicVector> out;
    for (const auto &v : base)
        if (std::abs(v.dot(target)) <= inner) out.push_back(v);

    // Random orthonormal frame of the tangent space at target.
    const auto &t = target.u();
    std::vector<std::array<double, 4>> frame;
    while (frame.size() < 3) {
        auto g = random_unit_vector(4, rng);
        std::array<double, 4> v{g[0], g[1], g[2], g[3]};
        auto remove = [&v](const std::array<double, 4> &b) {
            double s = 0.0;
            for (std::size_t i = 0; i < 4; ++i) s += v[i] * b[i];
            for (std::size_t i = 0; i < 4; ++i) v[i] -= s * b[i];
        };
        remove(t);
        for (const auto &f : frame) remove(f);
        double n = 0.0;
        for (double x : v) n += x * x;
        n = std::sqrt(n);
        if (n < 1e-3) continue;
        for (double &x : v) x /= n;
        frame.push_back(v);
    }
    const double r3 = 1.0 / std::sqrt(3.0);
    const double tet[4][3] = {{r3, r3, r3}, {r3, -r3, -r3}, {-r3, r3, -r3}, {-r3, -r3, r3}};
    for (const auto &n : tet) {
        std::array<double, 4> v{};
        for (std::size_t i = 0; i < 4; ++i)
            v[i] = std::cos(phi) * t[i] + std::sin(phi) * (n[0] * frame[0][i] + n[1] * frame[1][i] + n[2] * frame[2][i]);
        out.push_back(MagicVector::from_raw(v));
    }
    return out;
}

}  // namespace usynth
