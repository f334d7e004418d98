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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "usynth/bounds.hpp"
#include "usynth/channels.hpp"
#include "usynth/qubit1.hpp"
#include "usynth/random.hpp"

namespace usynth {
namespace {

using oracle::kPi;

std::vector<ChoiOperator> chois(const std::vector<Unitary> &us) {
    std::vector<ChoiOperator> out;
    for (const auto &u : us) out.push_back(choi(u));
    return out;
}

Unitary diag_phases(const std::vector<double> &phases) {
    ComplexMatrix m(phases.size(), phases.size());
    for (std::size_t i = 0; i < phases.size(); ++i) m(i, i) = std::polar(1.0, phases[i]);
    return Unitary(m);
}

TEST(BoundPointTest, Examples) {
    const auto z = theorem1_bounds(0.0, 3);
    EXPECT_EQ(z.lower, 0.0);
    EXPECT_EQ(z.upper, 0.0);
    EXPECT_EQ(z.delta, 0.0);

    const auto p = theorem1_bounds(0.6, 4);
    EXPECT_NEAR(p.delta, 0.2, 1e-15);
    EXPECT_NEAR(p.lower, 0.19, 1e-15);
    EXPECT_NEAR(p.upper, 0.36, 1e-15);
    EXPECT_NEAR(p.weak_lower, 0.18, 1e-15);

    const auto one = theorem1_bounds(1.0, 2);
    EXPECT_EQ(one.delta, 1.0);
    EXPECT_NEAR(one.lower, 1.0, 1e-15);
}

TEST(BoundPointTest, QubitBoundsCoincide) {
    for (int k = 0; k <= 1000; ++k) {
        const double eps = k / 1000.0;
        const auto b = theorem1_bounds(eps, 2);
        EXPECT_NEAR(b.lower, eps * eps, 1e-12) << eps;
        EXPECT_NEAR(b.upper, eps * eps, 1e-12) << eps;
    }
}

TEST(BoundPointTest, OrderedForEveryDimension) {
    for (std::size_t d = 2; d <= 8; ++d)
        for (int k = 1; k < 100; ++k) {
            const auto b = theorem1_bounds(k / 100.0, d);
            EXPECT_LE(b.weak_lower, b.lower + 1e-15);
            EXPECT_LE(b.lower, b.upper + 1e-15);
            if (d > 2) {
                EXPECT_LT(b.lower, b.upper);
            }
        }
}

TEST(BoundPointTest, RejectsOutOfRange) {
    EXPECT_THROW(theorem1_bounds(-0.1, 2), Error);
    EXPECT_THROW(theorem1_bounds(1.1, 2), Error);
    EXPECT_THROW(theorem1_bounds(0.5, 1), Error);
    EXPECT_THROW(theorem1_bounds(std::nan(""), 2), Error);
}

TEST(CurveTest, ZeroGridAndHeader) {
    const std::string csv = curve_csv(curve_sweep(4, {0.0}));
    EXPECT_EQ(csv, "eps,delta,lower,upper\n0,0,0,0\n");
}

TEST(CurveTest, QubitColumnsIdentical) {
    const auto rows = curve_sweep(2, linear_grid(0.0, 1.0, 0.01));
    ASSERT_EQ(rows.size(), 101u);
    for (const auto &r : rows) EXPECT_NEAR(r.lower, r.upper, 1e-12);
}

TEST(CurveTest, CsvRoundTripsNumbers) {
    const auto rows = curve_sweep(4, linear_grid(0.0, 1.0, 0.05));
    std::istringstream in(curve_csv(rows));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "eps,delta,lower,upper");
    std::size_t n = 0;
    while (std::getline(in, line)) {
        double e, dl, lo, up;
        ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &e, &dl, &lo, &up), 4) << line;
        EXPECT_NEAR(e, rows[n].eps, 1e-12);
        EXPECT_NEAR(dl, rows[n].delta, 1e-12);
        EXPECT_NEAR(lo, rows[n].lower, 1e-12);
        EXPECT_NEAR(up, rows[n].upper, 1e-12);
        if (e > 0.0 && e < 1.0) {
            EXPECT_LT(lo, up);
        }
        ++n;
    }
    EXPECT_EQ(n, rows.size());
}

TEST(LinearGridTest, IncludesEndpoint) {
    const auto g = linear_grid(0.1, 0.5, 0.1);
    ASSERT_EQ(g.size(), 5u);
    EXPECT_NEAR(g.back(), 0.5, 1e-12);
    EXPECT_EQ(linear_grid(0.3, 0.3, 0.1).size(), 1u);
    EXPECT_THROW(linear_grid(0.0, 1.0, 0.0), Error);
    EXPECT_THROW(linear_grid(1.0, 0.0, 0.1), Error);
}

TEST(AxialTest, HexagonInstance) {
    std::vector<double> th;
    for (int k = 0; k < 6; ++k) th.push_back(k * kPi / 3);
    const auto r = axial_optimal(kPi / 2, th);
    const double s = std::sin(kPi / 12);
    EXPECT_NEAR(r.value, s * s, 1e-12);
    EXPECT_NEAR(r.p[1], 0.5, 1e-12);
    EXPECT_NEAR(r.p[2], 0.5, 1e-12);
    EXPECT_NEAR(r.p[0] + r.p[3] + r.p[4] + r.p[5], 0.0, 1e-12);
}

TEST(AxialTest, DiameterAndMember) {
    const auto r = axial_optimal(kPi / 2, {0.0, kPi});
    EXPECT_NEAR(r.value, 0.5, 1e-12);
    EXPECT_NEAR(r.p[0], 0.5, 1e-12);
    const auto m = axial_optimal(1.0, {0.3, 1.0, 2.0});
    EXPECT_NEAR(m.value, 0.0, 1e-12);
    EXPECT_NEAR(m.p[1], 1.0, 1e-12);
    EXPECT_THROW(axial_optimal(0.0, {}), Error);
}

TEST(AxialTest, SupportIsAnEdge) {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> th;
        for (int k = 0; k < 7; ++k) th.push_back(2 * kPi * uniform01(rng));
        const auto r = axial_optimal(2 * kPi * uniform01(rng), th);
        int support = 0;
        for (std::size_t k = 0; k < r.p.size(); ++k) support += r.p[k] > 1e-12;
        EXPECT_LE(support, 2);
        r.p.validate(1e-12);
    }
}

TEST(AxialTest, AgreesWithOptimalMix) {
    Rng rng(32);
    for (int t = 0; t < 25; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<double> th;
        std::vector<Unitary> us;
        for (int k = 0; k < n; ++k) {
            th.push_back(2 * kPi * uniform01(rng));
            us.push_back(Unitary(oracle::phase(th.back())));
        }
        const double target = 2 * kPi * uniform01(rng);
        const auto ax = axial_optimal(target, th);
        const auto sdp = optimal_mix(choi(Unitary(oracle::phase(target))), chois(us));
        EXPECT_NEAR(ax.value, sdp.value, 1e-7);
    }
}

TEST(CliffordTest, SizesAndFramePotential) {
    const std::size_t sizes[] = {24, 216, 11520};
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto g = clifford_group(d);
        ASSERT_EQ(g.size(), sizes[d - 2]);
        // The group is closed, so the frame potential reduces to a sum over
        // single elements: |G|^-1 sum |tr V|^4, which is 2 for a 2-design.
        double fp = 0.0;
        for (const auto &v : g) fp += std::pow(std::abs(v.matrix().trace()), 4);
        EXPECT_NEAR(fp / g.size(), 2.0, 1e-9) << d;
    }
    EXPECT_THROW(clifford_group(5), Error);
}

TEST(CliffordTest, DistinctChannels) {
    const auto g = clifford_group(3);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            ASSERT_GT(unitary_distance(g[i], g[j]), 1e-6) << i << " " << j;
}

TEST(LowerFamilyTest, MembersSitOnTheHullBoundary) {
    for (std::size_t d : {2, 3}) {
        const double eps = 0.6;
        const auto fam = lower_family(eps, d, 0.2);
        for (const auto &w : fam) {
            const auto ev = oracle::unitary_eigenvalues(w.matrix());
            EXPECT_NEAR(oracle::origin_hull_distance(ev), std::sqrt(1 - eps * eps), 1e-9);
            EXPECT_NEAR(oracle::unitary_channel_distance(ComplexMatrix::identity(d), w.matrix()), eps, 1e-9);
        }
    }
}

TEST(LowerFamilyTest, Errors) {
    EXPECT_THROW(lower_family(0.1, 2, 0.5), Error);
    EXPECT_THROW(lower_family(0.0, 2, 0.1), Error);
    EXPECT_THROW(lower_family(0.5, 5, 0.1), Error);
    EXPECT_THROW(lower_family(0.5, 2, 0.0), Error);
}

TEST(SharpnessTest, LowerQubit) {
    const auto r = sharpness(Family::Lower, 0.5, 2, 0.1);
    EXPECT_NEAR(r.bound, 0.25, 1e-12);
    EXPECT_NEAR(r.value, 0.25, 1e-7);
}

TEST(SharpnessTest, LowerQutrit) {
    const auto r = sharpness(Family::Lower, 0.6, 3, 0.2);
    EXPECT_NEAR(r.bound, 0.8 / 3 * (1 - 0.2 / 3), 1e-12);
    EXPECT_NEAR(r.value, r.bound, 1e-6);
    EXPECT_NEAR(r.slack, r.value - r.bound, 1e-15);
}

TEST(UpperFamilyTest, Members) {
    const double eps = 0.3;
    for (std::size_t d : {2, 3}) {
        const auto fam = upper_family(eps, d, 0.4);
        const auto tgt = upper_worst_target(d);
        double nearest = 1.0;
        for (const auto &v : fam) {
            EXPECT_GE(std::abs(v.matrix()(0, 0)), eps - 1e-12);
            nearest = std::min(nearest, unitary_distance(tgt, v));
        }
        // The rotation stops at arccos eps, so nothing is closer than eps.
        EXPECT_GE(nearest, eps - 1e-9);
        EXPECT_LE(nearest, eps + 0.4);
    }
}

TEST(UpperFamilyTest, RotationBlockEndpoint) {
    // At theta = arccos eps the eigenphases are +-theta.
    const double eps = 0.3;
    ComplexMatrix r{{eps, -std::sqrt(1 - eps * eps)}, {std::sqrt(1 - eps * eps), eps}};
    const auto ev = oracle::unitary_eigenvalues(r);
    EXPECT_NEAR(oracle::origin_hull_distance(ev), eps, 1e-12);
}

TEST(SharpnessTest, UpperQubit) {
    const auto r = sharpness(Family::Upper, 0.3, 2, 0.2);
    EXPECT_NEAR(r.bound, 0.09, 1e-15);
    EXPECT_NEAR(r.value, 0.09, 1e-7);
    EXPECT_LT(r.candidates, r.family_size);
}

TEST(SharpnessTest, UpperQutrit) {
    const auto r = sharpness(Family::Upper, 0.5, 3, 0.35);
    EXPECT_NEAR(r.value, 0.25, 1e-6);
}

TEST(SharpnessTest, UpperAtEpsOne) {
    const auto r = sharpness(Family::Upper, 1.0, 2, 0.5);
    EXPECT_NEAR(r.value, 1.0, 1e-7);
}

TEST(DeepHoleTest, NearestMembersAtEps) {
    Rng rng(41);
    for (double eps : {0.1, 0.3, 0.5}) {
        const auto v = random_unit_vector(4, rng);
        const auto target = MagicVector::from_raw({v[0], v[1], v[2], v[3]});
        const auto net = deep_hole_covering(target, eps, rng);
        std::size_t at_eps = 0;
        double nearest = 1.0;
        for (const auto &n : net) {
            const double dist = distance_1q(target, n);
            nearest = std::min(nearest, dist);
            at_eps += std::abs(dist - eps) < 1e-12;
        }
        EXPECT_NEAR(nearest, eps, 1e-12);
        EXPECT_EQ(at_eps, 4u);
    }
}

TEST(DeepHoleTest, CoversEverything) {
    Rng rng(42);
    const double eps = 0.3;
    const auto target = MagicVector::from_raw({0.3, 0.1, -0.5, 0.2});
    const auto net = deep_hole_covering(target, eps, rng);
    const double phi = std::asin(eps);
    for (int s = 0; s < 4000; ++s) {
        // Half the samples within 3 phi of the target, where the construction
        // is most delicate.
        std::array<double, 4> q;
        if (s % 2 == 0) {
            auto g = random_unit_vector(4, rng);
            for (int i = 0; i < 4; ++i) q[i] = g[i];
        } else {
            auto g = random_unit_vector(4, rng);
            double dot = 0.0, nn = 0.0;
            for (int i = 0; i < 4; ++i) dot += g[i] * target[i];
            for (int i = 0; i < 4; ++i) {
                g[i] -= dot * target[i];
                nn += g[i] * g[i];
            }
            const double a = 3 * phi * uniform01(rng);
            for (int i = 0; i < 4; ++i) q[i] = std::cos(a) * target[i] + std::sin(a) * g[i] / std::sqrt(nn);
        }
        const auto w = MagicVector::from_raw(q);
        double best = 1.0;
        for (const auto &n : net) best = std::min(best, distance_1q(n, w));
        ASSERT_LE(best, eps + 1e-12) << s;
    }
}

TEST(DeepHoleTest, OptimalValueIsEpsSquared) {
    Rng rng(43);
    for (double eps : {0.2, 0.4}) {
        const auto v = random_unit_vector(4, rng);
        const auto target = MagicVector::from_raw({v[0], v[1], v[2], v[3]});
        const auto net = deep_hole_covering(target, eps, rng);
        std::vector<ChoiOperator> cs;
        for (std::size_t i : support_filter(target, net, eps)) cs.push_back(choi(magic_unembed(net[i])));
        const auto r = optimal_mix(choi(magic_unembed(target)), cs);
        EXPECT_NEAR(r.value, eps * eps, 1e-7);
    }
}

TEST(DeepHoleTest, Errors) {
    Rng rng(44);
    const MagicVector t({1.0, 0.0, 0.0, 0.0});
    EXPECT_THROW(deep_hole_covering(t, 0.0, rng), Error);
    EXPECT_THROW(deep_hole_covering(t, 1.0, rng), Error);
}

TEST(SandwichTest, RandomInstances) {
    // lower(nearest distance) <= optimal value <= eps^2 when the set is an
    // eps-covering around the target.
    Rng rng(45);
    for (int t = 0; t < 10; ++t) {
        const double eps = 0.1 + 0.3 * uniform01(rng);
        const auto v = random_unit_vector(4, rng);
        const auto target = MagicVector::from_raw({v[0], v[1], v[2], v[3]});
        const auto g = random_unit_vector(4, rng);
        const auto center = MagicVector::from_raw({v[0] + 0.3 * eps * g[0], v[1] + 0.3 * eps * g[1],
                                                   v[2] + 0.3 * eps * g[2], v[3] + 0.3 * eps * g[3]});
        const auto net = cap_covering(center, std::sin(3 * std::asin(eps)), eps);
        std::vector<ChoiOperator> cs;
        double nearest = 1.0;
        for (std::size_t i : support_filter(target, net, eps)) {
            const auto &n = net[i];
            cs.push_back(choi(magic_unembed(n)));
            nearest = std::min(nearest, distance_1q(target, n));
        }
        const double value = optimal_mix(choi(magic_unembed(target)), cs).value;
        EXPECT_GE(value, theorem1_bounds(nearest, 2).lower - 1e-7);
        EXPECT_LE(value, theorem1_bounds(eps, 2).upper + 1e-7);
    }
    for (int t = 0; t < 10; ++t) {
        const Unitary target = haar_unitary(3, rng);
        std::vector<ChoiOperator> cs;
        double nearest = 1.0;
        for (int k = 0; k < 8; ++k) {
            ComplexMatrix h = random_hermitian(3, rng).matrix();
            h *= Complex(0.2);
            const auto u = target * unitary_exp(HermitianMatrix::symmetrized(h));
            cs.push_back(choi(u));
            nearest = std::min(nearest, unitary_distance(target, u));
        }
        const double value = optimal_mix(choi(target), cs).value;
        EXPECT_GE(value, theorem1_bounds(nearest, 3).lower - 1e-7);
        EXPECT_LE(value, nearest + 1e-8);
    }
}

}  // namespace
}  // namespace usynth
