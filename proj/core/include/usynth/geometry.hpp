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

#ifndef USYNTH_GEOMETRY_HPP_
#define USYNTH_GEOMETRY_HPP_

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace usynth {

/// Closest point of conv(points) to a query point in the plane, with the
/// barycentric weights that realize it. Weights are supported on at most two
/// hull vertices when the query lies outside the hull, and at most three
/// otherwise.
struct HullProjection {
    double distance = 0.0;
    std::complex<double> point;
    std::vector<std::pair<std::size_t, double>> weights;  // (index into input, weight)
};

/// Indices of the convex hull vertices in counter-clockwise order. Collinear
/// and duplicate points are dropped.
std::vector<std::size_t> convex_hull(const std::vector<std::complex<double>> &points);

/// Exact projection by vertex/edge case analysis. Throws InvalidArgument on an
/// empty point set.
HullProjection project_onto_hull(const std::vector<std::complex<double>> &points, std::complex<double> query);

}  // namespace usynth

#endif  // USYNTH_GEOMETRY_HPP_
