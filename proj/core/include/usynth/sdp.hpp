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

#ifndef USYNTH_SDP_HPP_
#define USYNTH_SDP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "usynth/linalg.hpp"

namespace usynth {

// Standard form handled here (maximization):
//
//   primal:  maximize  <C, X>   s.t.  <A_i, X> = b_i,  X >= 0
//   dual:    minimize  b^T y    s.t.  Z = sum_i y_i A_i - C >= 0
//
// X is block diagonal. A block is either a dense Hermitian matrix or a
// nonnegative diagonal (a vector of LP variables). Coefficient matrices are
// given sparsely: an entry (block, row, col, v) with row < col stands for v at
// (row, col) and conj(v) at (col, row).

enum class BlockKind { Dense, Diagonal };

struct BlockSpec {
    BlockKind kind = BlockKind::Dense;
    std::size_t dim = 0;
};

struct SdpEntry {
    std::size_t block = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    Complex value;
};

struct SdpConstraint {
    std::vector<SdpEntry> entries;
    double rhs = 0.0;
};

struct SdpProblem {
    std::vector<BlockSpec> blocks;
    std::vector<SdpEntry> objective;
    std::vector<SdpConstraint> constraints;

    std::size_t add_block(BlockKind kind, std::size_t dim) {
        blocks.push_back({kind, dim});
        return blocks.size() - 1;
    }
};

/// Throws InvalidArgument / NonFinite on out-of-range or malformed entries.
void validate(const SdpProblem &problem);

/// Dense Hermitian matrix of the objective or of a constraint on one block.
ComplexMatrix block_matrix(const SdpProblem &problem, const std::vector<SdpEntry> &entries, std::size_t block);

enum class SdpStatus { Optimal, MaxIter, Infeasible };
const char *status_name(SdpStatus status);

struct SdpOptions {
    // gap_tol is absolute; feas_tol scales with 1 + max |b| and 1 + max |C|.
    double gap_tol = 1e-8;
    double feas_tol = 1e-8;
    int max_iter = 200;
    bool keep_history = false;
};

struct SdpIterate {
    double primal_value = 0.0;
    double dual_value = 0.0;
    double primal_residual = 0.0;  // max_i |<A_i, X> - b_i|
    double dual_residual = 0.0;    // max abs entry of sum y_i A_i - C - Z
    double complementarity = 0.0;  // <X, Z>
    double x_abs_sum = 0.0;        // sum of |X_ij| over all blocks
    double y_abs_sum = 0.0;        // sum of |y_i|
};

struct SdpSolution {
    SdpStatus status = SdpStatus::MaxIter;
    std::vector<ComplexMatrix> x;  // one per block; Diagonal blocks as d x 1 columns
    std::vector<ComplexMatrix> z;
    std::vector<double> y;
    double primal_value = 0.0;
    double dual_value = 0.0;
    double gap = 0.0;  // |primal_value - dual_value|
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    int iterations = 0;
    std::vector<SdpIterate> history;
};

// ---------------------------------------------------------------------------
// Real symmetric form used by the interior-point core.

struct RealEntry {
    std::size_t block = 0;
    std::size_t row = 0;  // row <= col; symmetric completion implied
    std::size_t col = 0;
    double value = 0.0;
};

struct RealConstraint {
    std::vector<RealEntry> entries;
    double rhs = 0.0;
};

struct RealSdpProblem {
    std::vector<BlockSpec> blocks;
    std::vector<RealEntry> objective;
    std::vector<RealConstraint> constraints;
};

struct RealSdpSolution {
    SdpStatus status = SdpStatus::MaxIter;
    std::vector<RealMatrix> x;  // Diagonal blocks stored as n x 1
    std::vector<RealMatrix> z;
    std::vector<double> y;
    double primal_value = 0.0;
    double dual_value = 0.0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    int iterations = 0;
    std::vector<SdpIterate> history;
};

/// [[Re M, -Im M], [Im M, Re M]].
RealMatrix embed_hermitian(const ComplexMatrix &m);

/// Inverse of embed_hermitian on its range; for a general symmetric 2n x 2n
/// input returns the Hermitian matrix it projects onto.
ComplexMatrix unembed_hermitian(const RealMatrix &m);

/// Lowers a complex problem to real symmetric blocks. Dense n x n blocks
/// become 2n x 2n blocks holding embed_hermitian(X); their coefficient
/// matrices are embedded and halved so every trace <A, X> is unchanged.
/// Diagonal blocks map to themselves. Objective values and the dual vector y
/// are therefore identical in both forms.
RealSdpProblem real_embed(const SdpProblem &problem);

/// Infeasible primal-dual path following (Mehrotra predictor-corrector with
/// Nesterov-Todd scaling).
RealSdpSolution solve_real(const RealSdpProblem &problem, const SdpOptions &options = {});

/// real_embed + solve_real + recovery of complex blocks.
SdpSolution solve(const SdpProblem &problem, const SdpOptions &options = {});

/// JSON dump {"blocks", "C", "A", "b"} with matrices in the repo format, for
/// cross-checking against an external solver.
std::string dump_problem_json(const SdpProblem &problem);

}  // namespace usynth

#endif  // USYNTH_SDP_HPP_
