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

#ifndef USYNTH_BOUNDS_HPP_
#define USYNTH_BOUNDS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "usynth/channels.hpp"
#include "usynth/linalg.hpp"
#include "usynth/qubit1.hpp"
#include "usynth/random.hpp"

namespace usynth {

/// Worst-case error bounds for probabilistic mixing against a set whose
/// deterministic error is eps, with delta = 1 - sqrt(1 - eps^2).
struct BoundPoint {
    double eps = 0.0;
    std::size_t d = 2;
    double delta = 0.0;
    double lower = 0.0;       // (4 delta / d)(1 - delta / d)
    double upper = 0.0;       // eps^2
    double weak_lower = 0.0;  // 2 eps^2 / d
};

/// Throws InvalidArgument unless eps is in [0, 1] and d >= 2.
BoundPoint theorem1_bounds(double eps, std::size_t d);

std::vector<BoundPoint> curve_sweep(std::size_t d, const std::vector<double> &eps_grid);

/// Header "eps,delta,lower,upper", 12 significant digits, one row per point.
std::string curve_csv(const std::vector<BoundPoint> &rows);

/// a, a + step, ... up to b (inclusive within step * 1e-9).
std::vector<double> linear_grid(double a, double b, double step);

struct AxialResult {
    ProbabilityDistribution p;  // over the input angles
    double value = 0.0;         // half-diamond distance of the best mixture
};

/// Rotations about a common axis by the given angles (radians). The value
/// is half the distance from e^{i target} to the convex hull of the points
/// e^{i theta_x}; p lives on at most two angles.
AxialResult axial_optimal(double target_theta, const std::vector<double> &thetas);

/// The Clifford group of C^d modulo phases, d in {2, 3, 4}: 24, 216 and
/// 11520 elements. Each is a unitary 2-design.
std::vector<Unitary> clifford_group(std::size_t d);

/// Unitaries at distance at least eps from the identity whose eigenvalue hull
/// comes within sqrt(1 - eps^2) of the origin: diagonal tuples
/// (e^{ia}, e^{-ia}, e^{i phi_3}, ...) with sin a = eps and phi_k on a grid of
/// spacing <= mesh in [-a, a], conjugated by every Clifford element. Mixing
/// them against the identity attains the lower bound up to SDP accuracy.
/// Throws MeshTooCoarse if mesh > a.
std::vector<Unitary> lower_family(double eps, std::size_t d, double mesh);

/// diag(1, V1) (R_theta (+) I) diag(1, V2) with theta on a grid over
/// [0, arccos eps] and V1, V2 phase gates diag(e^{i alpha}, 1, ...) with
/// alpha on a grid over [-pi, pi). For d >= 3 levels 2.. also carry a common
/// phase from the same grid; the rest of U(d-1) is not meshed. For d = 2 this
/// is the whole family up to global phase. Throws MeshTooCoarse if mesh > arccos(eps) (for eps < 1).
std::vector<Unitary> upper_family(double eps, std::size_t d, double mesh);

/// R_{pi/2} (+) I: the worst target for upper_family.
Unitary upper_worst_target(std::size_t d);

enum class Family { Lower, Upper };

struct SharpnessResult {
    double value = 0.0;  // optimal mixing value over the meshed family
    double bound = 0.0;  // the bound it should approach
    double slack = 0.0;  // value - bound
    double gap = 0.0;    // SDP duality gap
    std::size_t family_size = 0;
    std::size_t candidates = 0;  // members passed to the SDP
};

/// Lower: target identity against lower_family, bound (4 delta/d)(1 - delta/d).
/// Upper: target upper_worst_target against the members of upper_family within
/// 2 eps (plus mesh) of it, bound eps^2. Dropping far members can only raise
/// the value, and the value is at least eps^2 for any subfamily.
SharpnessResult sharpness(Family family, double eps, std::size_t d, double mesh, const MixOptions &options = {});

/// An eps-covering of all single-qubit channels for which `target` is a
/// deepest point: the nearest members sit at distance exactly eps, on a
/// regular tetrahedron around it with random orientation. Built from a
/// global covering with the open eps-ball around target removed; eps in
/// (0, 1).
std::vector<MagicVector> deep_hole_covering(const MagicVector &target, double eps, Rng &rng);

}  // namespace usynth

#endif  // USYNTH_BOUNDS_HPP_
