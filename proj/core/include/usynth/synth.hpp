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

#ifndef USYNTH_SYNTH_HPP_
#define USYNTH_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "usynth/channels.hpp"
#include "usynth/linalg.hpp"
#include "usynth/qubit1.hpp"

namespace usynth {

struct Gate {
    std::string label;
    Unitary u;
};

/// Named single-qubit generators. Labels are unique and nonempty.
class GateSet {
   public:
    explicit GateSet(std::vector<Gate> gates);

    /// H, T, Tdg, S, Sdg.
    static GateSet clifford_t();

    const std::vector<Gate> &gates() const noexcept { return gates_; }
    /// Throws InvalidArgument for an unknown label.
    const Gate &at(std::string_view label) const;

   private:
    std::vector<Gate> gates_;
};

/// {"gates": [{"label": "H", "matrix": {...}}, ...]}
GateSet gate_set_from_json(std::string_view text);
std::string gate_set_to_json(const GateSet &gs);

/// Labels read as a matrix product: {"H", "T"} realizes H*T, so the last label
/// acts first.
struct GateSequence {
    std::vector<std::string> labels;
    Unitary realized = Unitary::identity(2);
    MagicVector magic = MagicVector({1.0, 0.0, 0.0, 0.0});

    std::size_t length() const noexcept { return labels.size(); }
    /// Labels joined by spaces; "I" for the empty sequence.
    std::string str() const;
};

GateSequence make_sequence(const GateSet &gs, const std::vector<std::string> &labels);

/// Shorter first, then lexicographic by label list.
bool sequence_less(const GateSequence &a, const GateSequence &b);

struct EnumerateOptions {
    /// Sequences whose channels lie within this distance of an earlier one are
    /// dropped.
    double dedup_tol = 1e-9;
    /// BudgetExceeded once more distinct sequences than this would be kept.
    std::size_t max_count = 2'000'000;
};

/// Every channel reachable with at most max_len generators, one
/// representative each (the least under sequence_less), listed in that order.
std::vector<GateSequence> enumerate_sequences(const GateSet &gs, std::size_t max_len,
                                              const EnumerateOptions &options = {});

struct DetSynthResult {
    std::size_t index = 0;  // into the pool
    double error = 0.0;     // distance_1q to the target
};

/// Closest pool entry; near ties (1e-12) go to sequence_less. Throws EmptyPool.
DetSynthResult det_synth(const MagicVector &target, const std::vector<GateSequence> &pool);
DetSynthResult det_synth(const Unitary &target, const std::vector<GateSequence> &pool);

struct ProbSynthParams {
    double c = 0.5;        // covering mesh, as a fraction of eps
    double c_prime = 0.5;  // deterministic accuracy, as a fraction of eps
    MixOptions mix;
    std::size_t samples = 0;
    /// Weights at or below this are dropped from the reported support.
    double prune = 1e-9;
};

struct SynthesisResult {
    std::vector<GateSequence> support;
    ProbabilityDistribution p;
    /// Distance from the target to its closest candidate.
    double det_error = 0.0;
    /// Half-diamond distance of the returned mixture, evaluated exactly.
    double prob_error = 0.0;
    double eps = 0.0;
    double delta = 0.0;
    /// c eps + worst deterministic error: a certified covering radius of the
    /// candidates over the 2 eps ball.
    double achieved_radius = 0.0;
    std::size_t covering_size = 0;
    std::size_t candidate_count = 0;  // after support filtering
    std::uint64_t seed = 0;
    std::vector<std::size_t> samples;  // indices into support
};

/// Covering of the 2 eps ball at mesh c eps, per-point deterministic
/// synthesis, support restriction, optimal mixing SDP, sampling. Throws
/// InvalidArgument for eps outside (0, 1/2), delta <= 0 or c + c' > 1;
/// CoveringUnreachableError if some covering point has no pool entry within
/// c' eps.
SynthesisResult prob_synth(const Unitary &target, double eps, double delta, const std::vector<GateSequence> &pool,
                           std::uint64_t seed, const ProbSynthParams &params = {});

/// Serialized with sequences as label arrays; numbers at 12 significant
/// digits. Byte-identical for identical inputs.
std::string to_json(const SynthesisResult &r);

struct CampbellResult {
    ProbabilityDistribution p;
    double residual = 0.0;  // ||sum p(x) H_x||_F
    int iterations = 0;
};

struct CampbellOptions {
    double branch_margin = 1e-6;
    int max_iter = 10000;
    double tol = 1e-9;
};

/// H_x = -i log(U^dagger U_x) after removing the global phase of U^dagger U_x,
/// made traceless. Minimizes ||sum p H_x||_F over the simplex by Frank-Wolfe
/// with away steps. Throws EmptyCandidates, DimensionMismatch, BranchCut.
CampbellResult campbell_mix(const Unitary &target, const std::vector<Unitary> &candidates,
                            const CampbellOptions &options = {});

/// n i.i.d. draws from p, by inverse CDF on a generator seeded with `seed`.
std::vector<std::size_t> sample(const ProbabilityDistribution &p, std::uint64_t seed, std::size_t n);

}  // namespace usynth

#endif  // USYNTH_SYNTH_HPP_
