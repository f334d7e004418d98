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

#ifndef USYNTH_RANDOM_HPP_
#define USYNTH_RANDOM_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "usynth/linalg.hpp"

namespace usynth {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits, identical on every platform
/// (std::uniform_real_distribution is implementation-defined).
inline double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Standard normal by Box-Muller on uniform01.
double standard_normal(Rng &rng);

/// Haar-random unitary from Gram-Schmidt on a complex Ginibre matrix.
Unitary haar_unitary(std::size_t d, Rng &rng);

/// A + A^dagger with standard complex Gaussian A.
HermitianMatrix random_hermitian(std::size_t d, Rng &rng);

/// Density matrix G G^dagger / tr with complex Gaussian G of the given rank.
HermitianMatrix random_density(std::size_t d, std::size_t rank, Rng &rng);

/// Uniform point on the unit sphere in R^n.
std::vector<double> random_unit_vector(std::size_t n, Rng &rng);

/// Uniform point on the probability simplex with n entries.
std::vector<double> random_simplex(std::size_t n, Rng &rng);

}  // namespace usynth

#endif  // USYNTH_RANDOM_HPP_
