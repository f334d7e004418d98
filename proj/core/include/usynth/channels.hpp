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

#ifndef USYNTH_CHANNELS_HPP_
#define USYNTH_CHANNELS_HPP_

#include <cstddef>
#include <vector>

#include "usynth/linalg.hpp"
#include "usynth/sdp.hpp"

namespace usynth {

/// Choi operator J = sum_ij |i><j| (x) Phi(|i><j|) on H1 (x) H2, indexed as
/// (i*d2 + a, j*d2 + b).
struct ChoiOperator {
    HermitianMatrix j;
    std::size_t d1 = 0;
    std::size_t d2 = 0;
};

/// Weights over a finite index set; nonnegative and summing to one.
struct ProbabilityDistribution {
    std::vector<double> weights;

    std::size_t size() const noexcept { return weights.size(); }
    double operator[](std::size_t i) const { return weights[i]; }

    /// Throws InvalidArgument unless every weight is >= -tol and the total is
    /// within tol of one.
    void validate(double tol = 1e-8) const;
    /// Clamps negatives to zero and rescales to total one. Throws
    /// InvalidArgument if nothing positive remains.
    static ProbabilityDistribution normalized(std::vector<double> raw);
    static ProbabilityDistribution point_mass(std::size_t n, std::size_t at);
};

ChoiOperator choi(const Unitary &u);

/// sum_x p(x) J_x.
ChoiOperator mix(const std::vector<ChoiOperator> &channels, const std::vector<double> &p);

/// Half-diamond distance between the unitary channels of U and V:
/// sqrt(1 - r^2), r the distance from 0 to conv(eig(U^dagger V)).
double unitary_distance(const Unitary &u, const Unitary &v);

struct DiamondResult {
    double value = 0.0;  // half-diamond distance
    double gap = 0.0;
    int iterations = 0;
};

/// Half-diamond distance of two channels given by their Choi operators, from
/// the tester SDP: maximize <J(A - B), T> subject to T + T' = rho (x) I,
/// tr rho = 1. Throws SdpFailure when the solver does not certify optimality.
DiamondResult diamond_distance(const ChoiOperator &a, const ChoiOperator &b, const SdpOptions &options = {});

/// The SDP above, exposed for inspection and dumping.
SdpProblem diamond_problem(const ChoiOperator &a, const ChoiOperator &b);

enum class MixLowering {
    /// Variables S, S1 = S - J(A) + sum p J(B_x), Z = r I - tr_2 S, (p, s, r);
    /// p is read off the primal.
    DualForm,
    /// Tester variables T, T', rho, q, t; p is the dual multiplier of the
    /// per-candidate constraints.
    PrimalForm,
};

struct MixOptions {
    SdpOptions sdp;
    MixLowering lowering = MixLowering::DualForm;
    /// Solve both lowerings and record the second value.
    bool paranoid = false;
};

struct MixResult {
    ProbabilityDistribution p;
    double value = 0.0;  // min_p half-diamond distance
    double gap = 0.0;
    int iterations = 0;
    /// Set in paranoid mode: value from the other lowering.
    double cross_check_value = 0.0;
    bool cross_checked = false;
};

/// Optimal mixing distribution: min over p of (1/2)||A - sum p(x) B_x||_diamond.
/// Returned weights are renormalized to total one; moving leftover mass onto
/// any candidate keeps the dual certificate feasible, so the value does not
/// increase. Throws EmptyCandidates, DimensionMismatch, SdpFailure.
MixResult optimal_mix(const ChoiOperator &target, const std::vector<ChoiOperator> &candidates,
                      const MixOptions &options = {});

SdpProblem optimal_mix_problem(const ChoiOperator &target, const std::vector<ChoiOperator> &candidates,
                               MixLowering lowering);

/// Throws NotDensity unless rho is Hermitian, PSD and unit trace within tol.
void check_density(const ComplexMatrix &rho, double tol = 1e-8);

/// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, computed as ||sqrt(rho) sqrt(sigma)||_1^2.
double fidelity(const ComplexMatrix &rho, const ComplexMatrix &sigma);

/// trace_norm(rho - sigma) / 2.
double trace_distance(const ComplexMatrix &rho, const ComplexMatrix &sigma);

}  // namespace usynth

#endif  // USYNTH_CHANNELS_HPP_
