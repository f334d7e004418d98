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

#include "usynth/qubit1.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "usynth/error.hpp"

namespace usynth {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kShellSafety = 0.9;

std::array<double, 4> canonical_sign(std::array<double, 4> v) {
    std::size_t lead = 0;
    for (std::size_t i = 1; i < 4; ++i)
        if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
    if (v[lead] < 0)
        for (double &x : v) x = -x;
    for (double &x : v)
        if (x == 0.0) x = 0.0;  // no negative zeros
    return v;
}

double norm4(const std::array<double, 4> &v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

// Points of S^2 at mutual covering radius theta: latitude rings with
// azimuthal counts scaled by the ring radius.
std::vector<std::array<double, 3>> sphere_grid(double theta) {
    if (theta >= kPi) return {{0.0, 0.0, 1.0}};
    const int rings = static_cast<int>(std::ceil(kPi / theta));
    const double step = kPi / rings;
    std::vector<std::array<double, 3>> out;
    for (int j = 0; j <= rings; ++j) {
        const double beta = j * step;
        const double sb = std::sin(beta);
        const double cb = std::cos(beta);
        int count = 1;
        if (j != 0 && j != rings) count = std::max(1, static_cast<int>(std::ceil(kPi * sb / (theta - step / 2.0))));
        // Stagger alternate rings; costs nothing and evens out the gaps.
        const double offset = (j % 2) ? kPi / count : 0.0;
        for (int i = 0; i < count; ++i) {
            const double phi = offset + 2.0 * kPi * i / count;
            out.push_back({sb * std::cos(phi), sb * std::sin(phi), cb});
        }
    }
    return out;
}

// Orthonormal complement of c, by Gram-Schmidt over the standard basis.
std::array<std::array<double, 4>, 3> complement_frame(const std::array<double, 4> &c) {
    std::array<std::array<double, 4>, 3> frame{};
    std::vector<std::array<double, 4>> basis{c};
    for (std::size_t k = 0; k < 4 && basis.size() < 4; ++k) {
        std::array<double, 4> e{};
        e[k] = 1.0;
        for (const auto &b : basis) {
            double d = 0.0;
            for (std::size_t i = 0; i < 4; ++i) d += b[i] * e[i];
            for (std::size_t i = 0; i < 4; ++i) e[i] -= d * b[i];
        }
        const double n = norm4(e);
        if (n < 0.5) continue;  // e_k nearly parallel to what we have
        for (double &x : e) x /= n;
        basis.push_back(e);
    }
    for (std::size_t k = 0; k < 3; ++k) frame[k] = basis[k + 1];
    return frame;
}

}  // namespace

MagicVector::MagicVector(const std::array<double, 4> &u, double tol) {
    for (double x : u)
        if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "magic vector has a non-finite component");
    const double n = norm4(u);
    if (std::abs(n - 1.0) > tol)
        throw Error(ErrorKind::InvalidArgument, "magic vector is not unit norm (|u| = " + std::to_string(n) + ")");
    u_ = canonical_sign(u);
}

MagicVector MagicVector::from_raw(const std::array<double, 4> &v) {
    for (double x : v)
        if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "magic vector has a non-finite component");
    const double n = norm4(v);
    if (n == 0.0) throw Error(ErrorKind::InvalidArgument, "cannot normalize the zero vector");
    return MagicVector({v[0] / n, v[1] / n, v[2] / n, v[3] / n}, 1e-12);
}

double MagicVector::dot(const MagicVector &w) const {
    return u_[0] * w.u_[0] + u_[1] * w.u_[1] + u_[2] * w.u_[2] + u_[3] * w.u_[3];
}

ComplexMatrix magic_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, s);
    ComplexMatrix b(4, 4);
    b(0, 0) = s;
    b(3, 0) = s;
    b(0, 1) = i;
    b(3, 1) = -i;
    b(1, 2) = i;
    b(2, 2) = i;
    b(1, 3) = s;
    b(2, 3) = -s;
    return b;
}

MagicVector magic_embed(const Unitary &u) {
    if (u.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "magic_embed needs a 2x2 unitary");
    const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    const Complex scale = 1.0 / std::sqrt(det);
    const Complex v00 = u(0, 0) * scale;
    const Complex v10 = u(1, 0) * scale;
    // Rounding in U leaves |v| within a few ulps of one; renormalize.
    return MagicVector::from_raw({v00.real(), v00.imag(), v10.imag(), v10.real()});
}

Unitary magic_unembed(const MagicVector &m) {
    const auto &u = m.u();
    ComplexMatrix v(2, 2);
    v(0, 0) = Complex(u[0], u[1]);
    v(0, 1) = Complex(-u[3], u[2]);
    v(1, 0) = Complex(u[3], u[2]);
    v(1, 1) = Complex(u[0], -u[1]);
    return Unitary(v);
}

double distance_1q(const MagicVector &u, const MagicVector &w) {
    const double c = u.dot(w);
    return std::sqrt(std::max(0.0, 1.0 - c * c));
}

RealMatrix mix_difference_1q(const MagicVector &target, const std::vector<MagicVector> &candidates,
                             const std::vector<double> &p) {
    if (candidates.size() != p.size())
        throw Error(ErrorKind::DimensionMismatch, "weights and candidates differ in length");
    RealMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = target[r] * target[c];
    for (std::size_t x = 0; x < candidates.size(); ++x) {
        if (p[x] == 0.0) continue;
        const auto &w = candidates[x];
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(r, c) -= p[x] * w[r] * w[c];
    }
    return m;
}

double mix_distance_1q(const MagicVector &target, const std::vector<MagicVector> &candidates,
                       const ProbabilityDistribution &p) {
    p.validate();
    const auto ev = symmetric_eigenvalues(mix_difference_1q(target, candidates, p.weights));
    double s = 0.0;
    for (double l : ev) s += std::abs(l);
    return s / 2.0;
}

std::vector<std::size_t> support_filter(const MagicVector &target, const std::vector<MagicVector> &candidates,
                                        double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw Error(ErrorKind::InvalidArgument, "support_filter needs 0 < eps < 1/2");
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < candidates.size(); ++x)
        if (distance_1q(target, candidates[x]) <= 2.0 * eps) keep.push_back(x);
    if (keep.empty())
        throw Error(ErrorKind::EmptySupport, "no candidate within 2 eps of the target; the covering premise fails");
    return keep;
}

namespace {

// Shells at angles k * step around c out to `cap` (radians), each a grid on
// S^2 fine enough that every point within `cap` is within angle r of a grid
// point.
std::vector<MagicVector> shell_covering(const MagicVector &center, double cap, double r) {
    const int shells = static_cast<int>(std::ceil(cap / (kShellSafety * r)));
    const double step = cap / shells;
    const auto &c = center.u();
    const auto frame = complement_frame(c);

    std::vector<MagicVector> out{center};
    for (int k = 1; k <= shells; ++k) {
        const double alpha = k * step;
        // A point at angle a within step/2 of this shell moves onto it at cost
        // |a - alpha|; sliding along the shell costs sin(alpha) times the
        // S^2 angle.
        const double theta = (r - step / 2.0) / std::sin(alpha);
        for (const auto &n : sphere_grid(theta)) {
            std::array<double, 4> v{};
            for (std::size_t i = 0; i < 4; ++i)
                v[i] = std::cos(alpha) * c[i] +
                       std::sin(alpha) * (n[0] * frame[0][i] + n[1] * frame[1][i] + n[2] * frame[2][i]);
            out.push_back(MagicVector::from_raw(v));
        }
    }
    return out;
}

}  // namespace

std::vector<MagicVector> cap_covering(const MagicVector &center, double cap_radius, double mesh) {
    if (!std::isfinite(cap_radius) || !std::isfinite(mesh) || cap_radius < 0.0 || cap_radius >= 1.0 || mesh <= 0.0 ||
        mesh >= 1.0)
        throw Error(ErrorKind::InvalidArgument, "cap_covering needs 0 <= cap_radius < 1 and 0 < mesh < 1");
    if (cap_radius == 0.0) return {center};
    if (mesh > cap_radius) throw Error(ErrorKind::InvalidArgument, "cap_covering needs mesh <= cap_radius");
    // Work with geodesic angles on S^3; distance_1q is the sine of the angle.
    return shell_covering(center, std::asin(cap_radius), std::asin(mesh));
}

std::vector<MagicVector> sphere_covering(double mesh) {
    if (!(mesh > 0.0 && mesh < 1.0)) throw Error(ErrorKind::InvalidArgument, "sphere_covering needs 0 < mesh < 1");
    // Every channel has a representative within pi/2 of any fixed vector.
    return shell_covering(MagicVector({1.0, 0.0, 0.0, 0.0}), std::numbers::pi / 2, std::asin(mesh));
}

}  // namespace usynth
