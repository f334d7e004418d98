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

#ifndef USYNTH_QUBIT1_HPP_
#define USYNTH_QUBIT1_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "usynth/channels.hpp"
#include "usynth/linalg.hpp"

namespace usynth {

/// Unit vector in R^4 representing a single-qubit unitary channel in the
/// magic basis. u and -u describe the same channel; the stored sign puts the
/// first largest-magnitude component positive.
class MagicVector {
   public:
    /// Throws InvalidArgument unless |u| = 1 within tol, NonFinite on NaN/inf.
    explicit MagicVector(const std::array<double, 4> &u, double tol = 1e-10);

    /// Normalizes and canonicalizes an arbitrary nonzero vector.
    static MagicVector from_raw(const std::array<double, 4> &v);

    const std::array<double, 4> &u() const noexcept { return u_; }
    double operator[](std::size_t i) const { return u_[i]; }
    double dot(const MagicVector &w) const;

    bool operator==(const MagicVector &) const = default;

   private:
    std::array<double, 4> u_{};
};

/// Columns are Psi_1..Psi_4 in the computational basis |00>, |01>, |10>, |11>.
ComplexMatrix magic_basis();

/// Throws NotUnitary, DimensionMismatch if U is not 2x2.
MagicVector magic_embed(const Unitary &u);

/// The SU(2) element [[u1 + i u2, -u4 + i u3], [u4 + i u3, u1 - i u2]].
Unitary magic_unembed(const MagicVector &u);

/// sqrt(1 - (u.w)^2): half-diamond distance of the two channels.
double distance_1q(const MagicVector &u, const MagicVector &w);

/// Half-diamond distance between the target channel and the p-mixture of the
/// candidates, via the eigenvalues of uu^T - sum p(x) w_x w_x^T.
double mix_distance_1q(const MagicVector &target, const std::vector<MagicVector> &candidates,
                       const ProbabilityDistribution &p);

/// uu^T - sum p(x) w_x w_x^T, the magic-basis form of (J - sum p J_x) / 2.
RealMatrix mix_difference_1q(const MagicVector &target, const std::vector<MagicVector> &candidates,
                             const std::vector<double> &p);

/// Indices x with distance_1q(target, w_x) <= 2 eps, in increasing order.
/// Throws InvalidArgument unless 0 < eps < 1/2; EmptySupport if nothing is
/// kept.
std::vector<std::size_t> support_filter(const MagicVector &target, const std::vector<MagicVector> &candidates,
                                        double eps);

/// Finite set S such that every v with distance_1q(center, v) <= cap_radius
/// has some s in S with distance_1q(s, v) <= mesh. Built from shells around
/// the center, each shell a latitude/longitude grid on S^2. The center is
/// always the first element.
std::vector<MagicVector> cap_covering(const MagicVector &center, double cap_radius, double mesh);

/// Covering of every single-qubit channel at the given mesh; same
/// construction as cap_covering around (1, 0, 0, 0) out to angle pi/2.
std::vector<MagicVector> sphere_covering(double mesh);

}  // namespace usynth

#endif  // USYNTH_QUBIT1_HPP_
