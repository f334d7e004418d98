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


// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "usynth/bounds.hpp"
#include "usynth/channels.hpp"
#include "usynth/error.hpp"
#include "usynth/qubit1.hpp"
#include "usynth/random.hpp"
#include "usynth/synth.hpp"

namespace {

using namespace usynth;
constexpr double kPi = std::numbers::pi;

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Unitary phase_gate(double theta) { return Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, theta)}}); }

MagicVector random_magic(Rng &rng) {
    const auto v = random_unit_vector(4, rng);
    return MagicVector::from_raw({v[0], v[1], v[2], v[3]});
}

// Point at geodesic angle `angle` from c in a random direction.
MagicVector displaced(const MagicVector &c, double angle, Rng &rng) {
    auto g = random_unit_vector(4, rng);
    double dot = 0.0, nn = 0.0;
    for (int i = 0; i < 4; ++i) dot += g[i] * c[i];
    for (int i = 0; i < 4; ++i) {
        g[i] -= dot * c[i];
        nn += g[i] * g[i];
    }
    std::array<double, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = std::cos(angle) * c[i] + std::sin(angle) * g[i] / std::sqrt(nn);
    return MagicVector::from_raw(v);
}

std::vector<ChoiOperator> chois_of(const std::vector<MagicVector> &vs, const std::vector<std::size_t> &idx) {
    std::vector<ChoiOperator> out;
    for (std::size_t i : idx) out.push_back(choi(magic_unembed(vs[i])));
    return out;
}

// 1. Hexagon of rotations about one axis, target at pi/2.
Verdict hexagon() {
    std::vector<double> th;
    std::vector<Unitary> us;
    std::vector<MagicVector> ms;
    std::vector<ChoiOperator> cs;
    for (int k = 0; k < 6; ++k) {
        th.push_back(k * kPi / 3);
        us.push_back(phase_gate(th.back()));
        ms.push_back(magic_embed(us.back()));
        cs.push_back(choi(us.back()));
    }
    const Unitary target = phase_gate(kPi / 2);
    const MagicVector mt = magic_embed(target);
    const double s = std::sin(kPi / 12);

    // Deterministic error.
    double det_geom = 1.0, det_magic = 1.0, det_sdp = 1.0;
    for (int k = 0; k < 6; ++k) {
        det_geom = std::min(det_geom, std::abs(std::sin((kPi / 2 - th[k]) / 2)));
        det_magic = std::min(det_magic, distance_1q(mt, ms[k]));
        det_sdp = std::min(det_sdp, diamond_distance(choi(target), cs[k]).value);
    }
    // Probabilistic error: hull projection, eigenvalue path at the SDP's p,
    // and the mixing SDP itself.
    const auto ax = axial_optimal(kPi / 2, th);
    const auto sdp = optimal_mix(choi(target), cs);
    const double eig = mix_distance_1q(mt, ms, sdp.p);
    const double det_spread = std::max({det_geom, det_magic, det_sdp}) - std::min({det_geom, det_magic, det_sdp});
    const double prob_spread = std::max({ax.value, eig, sdp.value}) - std::min({ax.value, eig, sdp.value});
    const bool ok = det_spread <= 1e-7 && prob_spread <= 1e-7 && std::abs(det_magic - s) <= 1e-7 &&
                    std::abs(ax.value - s * s) <= 1e-7;
    return {ok, fmt("det %.9f (target %.9f, spread %.1e), prob axial %.9f eig %.9f sdp %.9f (target %.9f, spread %.1e)",
                    det_magic, s, det_spread, ax.value, eig, sdp.value, s * s, prob_spread)};
}

// 2. Qubit bounds coincide, and a covering with the target as a deepest
// point attains eps^2.
Verdict qubit_coincidence() {
    Rng rng(2002);
    bool ok = true;
    std::string detail;
    const int targets = 50;
    for (double eps : {0.1, 0.3, 0.5}) {
        const auto b = theorem1_bounds(eps, 2);
        const double identity_err = std::abs(b.lower - eps * eps);
        ok = ok && identity_err <= 1e-12;
        double worst = 0.0, best = 1.0;
        std::size_t max_support = 0;
        for (int t = 0; t < targets; ++t) {
            const auto target = random_magic(rng);
            const auto net = deep_hole_covering(target, eps, rng);
            // At eps = 1/2 the 2 eps ball is everything; nothing to filter.
            std::vector<std::size_t> idx;
            if (eps < 0.5) {
                idx = support_filter(target, net, eps);
            } else {
                for (std::size_t i = 0; i < net.size(); ++i) idx.push_back(i);
            }
            max_support = std::max(max_support, idx.size());
            const double v = optimal_mix(choi(magic_unembed(target)), chois_of(net, idx)).value;
            worst = std::max(worst, v);
            best = std::min(best, v);
        }
        const double slack = eps * eps - best;
        // SDP accuracy above eps^2 is tolerated at 1e-7.
        const bool here = worst <= eps * eps + 1e-7 && slack <= 0.1 * eps * eps;
        ok = ok && here;
        detail += fmt("eps %.1f: |lower-eps^2| %.1e, value in [%.9f, %.9f] vs %.4f, slack %.1e, support <= %zu; ",
                      eps, identity_err, best, worst, eps * eps, std::max(slack, 0.0), max_support);
    }
    return {ok, detail + fmt("%d targets each", targets)};
}

// 3. Diamond SDP against the magic-basis eigenvalue path.
Verdict eigen_path() {
    Rng rng(3003);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        const Unitary target = haar_unitary(2, rng);
        const std::size_t n = 1 + rng() % 5;
        std::vector<ChoiOperator> cs;
        std::vector<MagicVector> ms;
        for (std::size_t k = 0; k < n; ++k) {
            const Unitary u = haar_unitary(2, rng);
            cs.push_back(choi(u));
            ms.push_back(magic_embed(u));
        }
        const auto p = random_simplex(n, rng);
        const double sdp = diamond_distance(choi(target), mix(cs, p)).value;
        const double eig = mix_distance_1q(magic_embed(target), ms, ProbabilityDistribution{p});
        worst = std::max(worst, std::abs(sdp - eig));
    }
    return {worst <= 1e-7, fmt("500 instances, max |sdp - eig| %.2e", worst)};
}

// 4. Dual and primal lowerings of the mixing SDP agree.
Verdict strong_duality() {
    Rng rng(4004);
    double worst = 0.0;
    int count = 0;
    for (std::size_t d : {2, 3}) {
        for (int t = 0; t < 50; ++t) {
            const Unitary target = haar_unitary(d, rng);
            std::vector<ChoiOperator> cs;
            const std::size_t n = 2 + rng() % 5;
            for (std::size_t k = 0; k < n; ++k) {
                ComplexMatrix h = random_hermitian(d, rng).matrix();
                h *= Complex(0.1 + 0.4 * uniform01(rng));
                cs.push_back(choi(target * unitary_exp(HermitianMatrix::symmetrized(h))));
            }
            MixOptions o;
            o.paranoid = true;
            const auto r = optimal_mix(choi(target), cs, o);
            worst = std::max(worst, std::abs(r.value - r.cross_check_value));
            ++count;
        }
    }
    return {worst <= 1e-7, fmt("%d instances (d = 2, 3), max |dual - primal| %.2e", count, worst)};
}

// 5. Restricting to candidates within 2 eps loses nothing on a covering.
Verdict support_restriction() {
    Rng rng(5005);
    double worst = 0.0;
    std::size_t min_full = SIZE_MAX, max_full = 0, dropped_min = SIZE_MAX;
    int verified = 0;
    for (int t = 0; t < 100; ++t) {
        const double eps = 0.1 + 0.2 * uniform01(rng);
        const double phi = std::asin(eps);
        const auto target = random_magic(rng);
        const auto center = displaced(target, 0.5 * phi * uniform01(rng), rng);
        // Covers the cap of angle 3.5 phi - 0.5 phi >= 3 phi around the target.
        auto net = cap_covering(center, std::sin(std::min(3.5 * phi, kPi / 2)), eps);
        for (int k = 0; k < 20; ++k) net.push_back(random_magic(rng));
        // Sample check that the net covers the 2 eps ball at radius eps.
        bool covered = true;
        for (int s = 0; s < 300 && covered; ++s) {
            const auto q = displaced(target, 2 * phi * std::cbrt(uniform01(rng)), rng);
            double best = 1.0;
            for (const auto &n : net) best = std::min(best, distance_1q(n, q));
            covered = best <= eps;
        }
        if (!covered) continue;
        ++verified;
        std::vector<std::size_t> all(net.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        const auto idx = support_filter(target, net, eps);
        const auto tc = choi(magic_unembed(target));
        const double full = optimal_mix(tc, chois_of(net, all)).value;
        const double restricted = optimal_mix(tc, chois_of(net, idx)).value;
        worst = std::max(worst, std::abs(full - restricted));
        min_full = std::min(min_full, net.size());
        max_full = std::max(max_full, net.size());
        dropped_min = std::min(dropped_min, net.size() - idx.size());
    }
    return {verified == 100 && worst <= 1e-7,
            fmt("%d verified coverings (|X| %zu..%zu, at least %zu dropped), max |full - restricted| %.2e", verified,
                min_full, max_full, dropped_min, worst)};
}

// 6. The lower bound is attained in d = 3.
Verdict lower_sharpness() {
    const auto r = sharpness(Family::Lower, 0.6, 3, 0.02);
    const double dev = std::abs(r.value - r.bound);
    return {dev <= 5e-3 && r.gap <= 1e-7,
            fmt("value %.10f, bound %.10f, |slack| %.2e (allowed 5e-3), %zu candidates, gap %.1e", r.value, r.bound,
                dev, r.candidates, r.gap)};
}

// 7. Optimal mixing beats the Campbell mixture.
Verdict campbell() {
    Rng rng(7007);
    bool ok = true;
    double worst_dom = -1.0, worst_ratio = 0.0, worst_res = 0.0;
    int solved = 0;
    for (int t = 0; t < 50; ++t) {
        const double eps = 0.05 + 0.2 * uniform01(rng);
        const double phi = std::asin(eps);
        const auto target = random_magic(rng);
        const auto center = displaced(target, 0.5 * phi * uniform01(rng), rng);
        const auto net = cap_covering(center, std::sin(3.0 * phi), eps);
        const auto idx = support_filter(target, net, eps);
        std::vector<Unitary> us;
        for (std::size_t i : idx) us.push_back(magic_unembed(net[i]));
        const Unitary tu = magic_unembed(target);
        const auto cm = campbell_mix(tu, us);
        std::vector<MagicVector> ms;
        for (std::size_t i : idx) ms.push_back(net[i]);
        const double camp = mix_distance_1q(target, ms, cm.p);
        const double best = optimal_mix(choi(tu), chois_of(net, idx)).value;
        ok = ok && best <= camp + 1e-8 && camp <= eps * eps + 1e-7 && best <= eps * eps + 1e-7 && cm.residual <= 1e-8;
        worst_dom = std::max(worst_dom, best - camp);
        worst_ratio = std::max(worst_ratio, camp / (eps * eps));
        worst_res = std::max(worst_res, cm.residual);
        ++solved;
    }
    return {ok, fmt("%d nets, max(sdp - campbell) %.2e, max campbell/eps^2 %.4f, max residual %.2e", solved, worst_dom,
                    worst_ratio, worst_res)};
}

// 8. Full pipeline on the Clifford+T pool.
Verdict pipeline() {
    const auto pool = enumerate_sequences(GateSet::clifford_t(), 12);
    const double delta = 1e-6;
    Rng rng(8008);
    bool ok = true;
    double eps_max = 0.0, worst_prob_ratio = 0.0, worst_det = 0.0;
    int targets = 0;
    bool reproducible = true;
    for (int t = 0; t < 10; ++t) {
        const Unitary target = haar_unitary(2, rng);
        // Smallest eps on a 0.01 grid for which the pool covers the 2 eps
        // ball; eps is then the reported covering radius bound.
        std::string first;
        double used = 0.0;
        for (int k = 5; k < 50 && first.empty(); ++k) {
            const double eps = k / 100.0;
            ProbSynthParams params;
            params.samples = 16;
            try {
                const auto r = prob_synth(target, eps, delta, pool, 42 + t, params);
                first = to_json(r);
                used = eps;
                ok = ok && r.prob_error <= eps * eps + delta && r.det_error <= eps && r.achieved_radius <= eps;
                worst_prob_ratio = std::max(worst_prob_ratio, (r.prob_error - delta) / (eps * eps));
                worst_det = std::max(worst_det, r.det_error / eps);
                reproducible = reproducible && to_json(prob_synth(target, eps, delta, pool, 42 + t, params)) == first;
            } catch (const CoveringUnreachableError &) {
            }
        }
        if (first.empty()) {
            ok = false;
            continue;
        }
        ++targets;
        eps_max = std::max(eps_max, used);
    }
    ok = ok && reproducible && targets == 10;
    return {ok, fmt("pool %zu sequences, %d targets, eps <= %.2f, max prob_error/eps^2 %.4f, max det_error/eps %.3f, "
                    "bytes %s",
                    pool.size(), targets, eps_max, worst_prob_ratio, worst_det,
                    reproducible ? "identical" : "DIFFER")};
}

// 9. Fuchs-van de Graaf inequalities.
Verdict fuchs_van_de_graaf() {
    Rng rng(9009);
    double worst_low = -1.0, worst_high = -1.0, worst_pure = 0.0;
    for (int t = 0; t < 10000; ++t) {
        const auto rho = random_density(2, 1 + rng() % 2, rng).matrix();
        const auto sigma = random_density(2, 1 + rng() % 2, rng).matrix();
        const double f = fidelity(rho, sigma), d = trace_distance(rho, sigma);
        worst_low = std::max(worst_low, 1.0 - std::sqrt(f) - d);
        worst_high = std::max(worst_high, d - std::sqrt(std::max(0.0, 1.0 - f)));
    }
    for (int t = 0; t < 1000; ++t) {
        const auto rho = random_density(2, 1, rng).matrix();
        const auto sigma = random_density(2, 1, rng).matrix();
        const double f = fidelity(rho, sigma), d = trace_distance(rho, sigma);
        worst_pure = std::max(worst_pure, std::abs(d - std::sqrt(std::max(0.0, 1.0 - f))));
    }
    const bool ok = worst_low <= 1e-12 && worst_high <= 1e-12 && worst_pure <= 1e-9;
    return {ok, fmt("10000 pairs, max violation %.1e / %.1e, pure-state equality gap %.1e", std::max(worst_low, 0.0),
                    std::max(worst_high, 0.0), worst_pure)};
}

}  // namespace

int main(int argc, char **argv) {
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    struct Criterion {
        const char *name;
        Verdict (*run)();
    };
    const Criterion all[] = {
        {"axial hexagon, three paths", hexagon},
        {"qubit bound coincidence", qubit_coincidence},
        {"diamond SDP vs eigenvalue path", eigen_path},
        {"strong duality of mixing SDP", strong_duality},
        {"support restriction", support_restriction},
        {"lower-bound sharpness, d = 3", lower_sharpness},
        {"domination of Campbell mixture", campbell},
        {"Clifford+T pipeline", pipeline},
        {"Fuchs-van de Graaf", fuchs_van_de_graaf},
    };
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (int i = 1; i <= 9; ++i) which.push_back(i);
    int failed = 0;
    for (int k : which) {
        if (k < 1 || k > 9) {
            std::fprintf(stderr, "no criterion %d\n", k);
            return 2;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = all[k - 1].run();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %d (%s): %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", k, all[k - 1].name,
                    v.detail.c_str(), secs);
        failed += !v.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(which.size()) - failed, which.size());
    return failed == 0 ? 0 : 1;
}
