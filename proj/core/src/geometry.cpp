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

#include "usynth/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "usynth/error.hpp"

namespace usynth {

namespace {

using Pt = std::complex<double>;

double cross(Pt o, Pt a, Pt b) { return (a - o).real() * (b - o).imag() - (a - o).imag() * (b - o).real(); }

// Closest point on segment [a, b] to q, returned as the weight on b.
double segment_param(Pt a, Pt b, Pt q) {
    const Pt ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return 0.0;
    const double t = ((q - a).real() * ab.real() + (q - a).imag() * ab.imag()) / len2;
    return std::clamp(t, 0.0, 1.0);
}

}  // namespace

std::vector<std::size_t> convex_hull(const std::vector<Pt> &points) {
    const std::size_t n = points.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (points[a].real() != points[b].real()) return points[a].real() < points[b].real();
        if (points[a].imag() != points[b].imag()) return points[a].imag() < points[b].imag();
        return a < b;
    });
    // Drop exact duplicates (keep the lowest index).
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
              idx.end());
    if (idx.size() < 3) return idx;

    double scale = 0.0;
    for (const auto &p : points) scale = std::max(scale, std::abs(p));
    const double tol = 1e-14 * std::max(1.0, scale * scale);

    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i : idx) {
        while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= tol) --k;
        hull[k++] = i;
    }
    const std::size_t lower = k + 1;
    for (std::size_t ii = idx.size() - 1; ii-- > 0;) {
        const std::size_t i = idx[ii];
        while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= tol) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    if (hull.size() >= 3) return hull;
    // Collinear within tol: the chain can lose an endpoint, so take the
    // extremes directly.
    auto farthest = [&](std::size_t from) {
        std::size_t best = from;
        for (std::size_t i : idx)
            if (std::abs(points[i] - points[from]) > std::abs(points[best] - points[from])) best = i;
        return best;
    };
    const std::size_t a = farthest(idx.front());
    const std::size_t b = farthest(a);
    if (a == b) return {a};
    return {std::min(a, b), std::max(a, b)};
}

HullProjection project_onto_hull(const std::vector<Pt> &points, Pt query) {
    if (points.empty()) throw Error(ErrorKind::InvalidArgument, "hull of an empty point set");
    const auto hull = convex_hull(points);
    HullProjection out;

    if (hull.size() == 1) {
        out.point = points[hull[0]];
        out.distance = std::abs(query - out.point);
        out.weights = {{hull[0], 1.0}};
        return out;
    }

    const std::size_t m = hull.size();
    if (m >= 3) {
        bool inside = true;
        for (std::size_t e = 0; e < m && inside; ++e)
            if (cross(points[hull[e]], points[hull[(e + 1) % m]], query) < 0.0) inside = false;
        if (inside) {
            // Fan triangulation from hull[0]; find the triangle holding the query.
            const Pt a = points[hull[0]];
            for (std::size_t t = 1; t + 1 < m; ++t) {
                const Pt b = points[hull[t]];
                const Pt c = points[hull[t + 1]];
                const double area = cross(a, b, c);
                const double wa = cross(query, b, c) / area;
                const double wb = cross(a, query, c) / area;
                const double wc = cross(a, b, query) / area;
                if (wa >= -1e-12 && wb >= -1e-12 && wc >= -1e-12) {
                    out.point = query;
                    out.distance = 0.0;
                    for (auto [i, w] : {std::pair{hull[0], wa}, std::pair{hull[t], wb}, std::pair{hull[t + 1], wc}}) {
                        w = std::max(w, 0.0);
                        if (w > 0.0) out.weights.emplace_back(i, w);
                    }
                    double s = 0.0;
                    for (auto &pw : out.weights) s += pw.second;
                    for (auto &pw : out.weights) pw.second /= s;
                    return out;
                }
            }
        }
    }

    // Outside (or degenerate segment hull): closest edge.
    const std::size_t edges = m == 2 ? 1 : m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < edges; ++e) {
        const std::size_t i = hull[e];
        const std::size_t j = hull[(e + 1) % m];
        const double t = segment_param(points[i], points[j], query);
        const Pt p = points[i] + t * (points[j] - points[i]);
        const double dist = std::abs(query - p);
        if (dist < best) {
            best = dist;
            out.point = p;
            out.distance = dist;
            out.weights.clear();
            if (t < 1.0) out.weights.emplace_back(i, 1.0 - t);
            if (t > 0.0) out.weights.emplace_back(j, t);
        }
    }
    return out;
}

}  // namespace usynth
