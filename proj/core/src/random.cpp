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

#include "usynth/random.hpp"

#include <cmath>
#include <numbers>

namespace usynth {

double standard_normal(Rng &rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {
Complex complex_normal(Rng &rng) {
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    return {re, im};
}
}  // namespace

Unitary haar_unitary(std::size_t d, Rng &rng) {
    ComplexMatrix g(d, d);
    for (auto &v : g.data()) v = complex_normal(rng);
    // Modified Gram-Schmidt, run twice for orthogonality at machine precision.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t k = 0; k < c; ++k) {
                Complex dot{};
                for (std::size_t r = 0; r < d; ++r) dot += std::conj(g(r, k)) * g(r, c);
                for (std::size_t r = 0; r < d; ++r) g(r, c) -= dot * g(r, k);
            }
            double nrm = 0.0;
            for (std::size_t r = 0; r < d; ++r) nrm += std::norm(g(r, c));
            nrm = std::sqrt(nrm);
            for (std::size_t r = 0; r < d; ++r) g(r, c) /= nrm;
        }
    }
    return Unitary(g);
}

HermitianMatrix random_hermitian(std::size_t d, Rng &rng) {
    ComplexMatrix a(d, d);
    for (auto &v : a.data()) v = complex_normal(rng);
    return HermitianMatrix::symmetrized(a + a.adjoint());
}

HermitianMatrix random_density(std::size_t d, std::size_t rank, Rng &rng) {
    ComplexMatrix g(d, rank);
    for (auto &v : g.data()) v = complex_normal(rng);
    ComplexMatrix rho = g * g.adjoint();
    rho *= Complex(1.0 / rho.trace().real());
    return HermitianMatrix::symmetrized(rho);
}

std::vector<double> random_unit_vector(std::size_t n, Rng &rng) {
    std::vector<double> v(n);
    double nrm = 0.0;
    do {
        nrm = 0.0;
        for (auto &x : v) {
            x = standard_normal(rng);
            nrm += x * x;
        }
    } while (nrm == 0.0);
    nrm = std::sqrt(nrm);
    for (auto &x : v) x /= nrm;
    return v;
}

std::vector<double> random_simplex(std::size_t n, Rng &rng) {
    std::vector<double> p(n);
    double total = 0.0;
    for (auto &x : p) {
        double u = uniform01(rng);
        while (u <= 0.0) u = uniform01(rng);
        x = -std::log(u);
        total += x;
    }
    for (auto &x : p) x /= total;
    return p;
}

}  // namespace usynth
