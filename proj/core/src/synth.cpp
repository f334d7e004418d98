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

#include "usynth/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>

#include "json_detail.hpp"
#include "usynth/error.hpp"
#include "usynth/json_io.hpp"
#include "usynth/parallel.hpp"
#include "usynth/random.hpp"

namespace usynth {

namespace {

constexpr double kTieTol = 1e-12;

bool labels_less(const std::vector<std::string> &a, const std::vector<std::string> &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Hash grid over canonical magic vectors for approximate dedup.
class MagicIndex {
   public:
    explicit MagicIndex(double tol) : tol_(tol), cell_(4.0 * std::max(tol, 1e-15)) {}

    // Position of a stored vector within tol of m (either sign), or npos.
    std::size_t find(const MagicVector &m, const std::vector<GateSequence> &stored) const {
        for (double sign : {1.0, -1.0}) {
            std::array<double, 4> v{};
            for (std::size_t i = 0; i < 4; ++i) v[i] = sign * m[i];
            std::array<std::vector<long long>, 4> axes;
            for (std::size_t i = 0; i < 4; ++i) {
                const double s = v[i] / cell_;
                const auto c = static_cast<long long>(std::floor(s));
                axes[i].push_back(c);
                const double frac = s - static_cast<double>(c);
                if (frac * cell_ <= 2.0 * tol_) axes[i].push_back(c - 1);
                if ((1.0 - frac) * cell_ <= 2.0 * tol_) axes[i].push_back(c + 1);
            }
            for (auto a : axes[0])
                for (auto b : axes[1])
                    for (auto c : axes[2])
                        for (auto d : axes[3]) {
                            const auto it = cells_.find(key({a, b, c, d}));
                            if (it == cells_.end()) continue;
                            for (std::size_t idx : it->second)
                                if (distance_1q(stored[idx].magic, m) <= tol_) return idx;
                        }
        }
        return npos;
    }

    void insert(const MagicVector &m, std::size_t idx) {
        std::array<long long, 4> c{};
        for (std::size_t i = 0; i < 4; ++i) c[i] = static_cast<long long>(std::floor(m[i] / cell_));
        cells_[key(c)].push_back(idx);
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

   private:
    static std::size_t key(const std::array<long long, 4> &c) {
        std::size_t h = 1469598103934665603ULL;
        for (long long x : c) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }

    double tol_;
    double cell_;
    std::unordered_map<std::size_t, std::vector<std::size_t>> cells_;
};

std::vector<double> frobenius_coords(const ComplexMatrix &h) {
    std::vector<double> out;
    out.reserve(2 * h.rows() * h.cols());
    for (const auto &z : h.data()) {
        out.push_back(z.real());
        out.push_back(z.imag());
    }
    return out;
}

}  // namespace

GateSet::GateSet(std::vector<Gate> gates) : gates_(std::move(gates)) {
    if (gates_.empty()) throw Error(ErrorKind::InvalidArgument, "gate set is empty");
    std::set<std::string> seen;
    for (const auto &g : gates_) {
        if (g.label.empty()) throw Error(ErrorKind::InvalidArgument, "gate label is empty");
        if (!seen.insert(g.label).second) throw Error(ErrorKind::InvalidArgument, "duplicate gate label " + g.label);
        if (g.u.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "gate " + g.label + " is not 2x2");
    }
}

GateSet GateSet::clifford_t() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex w = std::polar(1.0, std::numbers::pi / 4);
    const Complex i(0.0, 1.0);
    return GateSet({
        {"H", Unitary(ComplexMatrix{{s, s}, {s, -s}})},
        {"T", Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, w}})},
        {"Tdg", Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, std::conj(w)}})},
        {"S", Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, i}})},
        {"Sdg", Unitary(ComplexMatrix{{1.0, 0.0}, {0.0, -i}})},
    });
}

const Gate &GateSet::at(std::string_view label) const {
    for (const auto &g : gates_)
        if (g.label == label) return g;
    throw Error(ErrorKind::InvalidArgument, "unknown gate label " + std::string(label));
}

GateSet gate_set_from_json(std::string_view text) {
    const auto j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("gates") || !j["gates"].is_array())
        throw Error(ErrorKind::ParseError, "gate set needs a \"gates\" array");
    std::vector<Gate> gates;
    for (const auto &g : j["gates"]) {
        if (!g.is_object() || !g.contains("label") || !g["label"].is_string() || !g.contains("matrix"))
            throw Error(ErrorKind::ParseError, "each gate needs a string label and a matrix");
        gates.push_back({g["label"].get<std::string>(), Unitary(detail::matrix_from(g["matrix"]))});
    }
    return GateSet(std::move(gates));
}

std::string gate_set_to_json(const GateSet &gs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &g : gs.gates()) arr.push_back({{"label", g.label}, {"matrix", detail::matrix_json(g.u.matrix())}});
    return nlohmann::json{{"gates", std::move(arr)}}.dump();
}

std::string GateSequence::str() const {
    if (labels.empty()) return "I";
    std::string out;
    for (const auto &l : labels) {
        if (!out.empty()) out += ' ';
        out += l;
    }
    return out;
}

GateSequence make_sequence(const GateSet &gs, const std::vector<std::string> &labels) {
    ComplexMatrix m = ComplexMatrix::identity(2);
    for (const auto &l : labels) m = m * gs.at(l).u.matrix();
    Unitary u(m, 1e-6);
    return {labels, u, magic_embed(u)};
}

bool sequence_less(const GateSequence &a, const GateSequence &b) { return labels_less(a.labels, b.labels); }

std::vector<GateSequence> enumerate_sequences(const GateSet &gs, std::size_t max_len, const EnumerateOptions &options) {
    if (!(options.dedup_tol >= 0.0)) throw Error(ErrorKind::InvalidArgument, "dedup_tol must be nonnegative");
    std::vector<const Gate *> order;
    for (const auto &g : gs.gates()) order.push_back(&g);
    std::sort(order.begin(), order.end(), [](const Gate *a, const Gate *b) { return a->label < b->label; });

    std::vector<GateSequence> out;
    MagicIndex index(options.dedup_tol);
    out.push_back(GateSequence{});
    index.insert(out[0].magic, 0);

    // Extending only representatives loses nothing: if p ~ q then p g ~ q g,
    // and q g is no larger than p g under sequence_less. Since the previous
    // level is sorted and generators are visited in label order, each level
    // is produced already sorted.
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t k = level_begin; k < level_end; ++k) {
            for (const Gate *g : order) {
                GateSequence s;
                s.labels = out[k].labels;
                s.labels.push_back(g->label);
                const ComplexMatrix m = out[k].realized.matrix() * g->u.matrix();
                s.realized = Unitary(m, 1e-6);
                s.magic = magic_embed(s.realized);
                if (index.find(s.magic, out) != MagicIndex::npos) continue;
                if (out.size() >= options.max_count)
                    throw Error(ErrorKind::BudgetExceeded,
                                "more than " + std::to_string(options.max_count) + " distinct sequences");
                index.insert(s.magic, out.size());
                out.push_back(std::move(s));
            }
        }
        level_begin = level_end;
        if (level_begin == out.size()) break;  // closed under the generators
    }
    return out;
}

DetSynthResult det_synth(const MagicVector &target, const std::vector<GateSequence> &pool) {
    if (pool.empty()) throw Error(ErrorKind::EmptyPool, "deterministic synthesis needs a nonempty pool");
    DetSynthResult best{0, distance_1q(target, pool[0].magic)};
    for (std::size_t i = 1; i < pool.size(); ++i) {
        const double e = distance_1q(target, pool[i].magic);
        if (e < best.error - kTieTol ||
            (e <= best.error + kTieTol && sequence_less(pool[i], pool[best.index])))
            best = {i, e};
    }
    return best;
}

DetSynthResult det_synth(const Unitary &target, const std::vector<GateSequence> &pool) {
    return det_synth(magic_embed(target), pool);
}

SynthesisResult prob_synth(const Unitary &target, double eps, double delta, const std::vector<GateSequence> &pool,
                           std::uint64_t seed, const ProbSynthParams &params) {
    if (!(eps > 0.0 && eps < 0.5)) throw Error(ErrorKind::InvalidArgument, "prob_synth needs 0 < eps < 1/2");
    if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "prob_synth needs delta > 0");
    if (!(params.c > 0.0 && params.c_prime > 0.0 && params.c + params.c_prime <= 1.0 + 1e-12))
        throw Error(ErrorKind::InvalidArgument, "need c > 0, c' > 0 and c + c' <= 1");
    if (pool.empty()) throw Error(ErrorKind::EmptyPool, "prob_synth needs a nonempty pool");

    const MagicVector t = magic_embed(target);
    const auto covering = cap_covering(t, 2.0 * eps, params.c * eps);

    std::vector<DetSynthResult> det(covering.size());
    parallel_for(covering.size(), [&](std::size_t i) { det[i] = det_synth(covering[i], pool); });
    double worst = 0.0;
    for (const auto &d : det) worst = std::max(worst, d.error);
    const double achieved = params.c * eps + worst;
    if (worst > params.c_prime * eps)
        throw CoveringUnreachableError("deterministic synthesis reaches only " + format_number(worst) +
                                           " against the required " + format_number(params.c_prime * eps) +
                                           "; achieved covering radius " + format_number(achieved),
                                       achieved);

    std::vector<std::size_t> cand;
    for (const auto &d : det) cand.push_back(d.index);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<MagicVector> cand_magic;
    for (auto i : cand) cand_magic.push_back(pool[i].magic);
    const auto keep = support_filter(t, cand_magic, eps);

    std::vector<std::size_t> support_idx;
    std::vector<MagicVector> support_magic;
    for (auto k : keep) {
        support_idx.push_back(cand[k]);
        support_magic.push_back(cand_magic[k]);
    }

    SynthesisResult r;
    r.eps = eps;
    r.delta = delta;
    r.seed = seed;
    r.achieved_radius = achieved;
    r.covering_size = covering.size();
    r.candidate_count = support_idx.size();

    std::size_t closest = 0;
    r.det_error = 1.0;
    for (std::size_t k = 0; k < support_magic.size(); ++k) {
        const double e = distance_1q(t, support_magic[k]);
        if (e < r.det_error - kTieTol) {
            r.det_error = e;
            closest = k;
        }
    }

    std::vector<double> w(support_idx.size(), 0.0);
    if (r.det_error > kTieTol) {
        std::vector<ChoiOperator> chans;
        for (auto i : support_idx) chans.push_back(choi(pool[i].realized));
        MixOptions mo = params.mix;
        mo.sdp.gap_tol = std::min(mo.sdp.gap_tol, delta);
        w = optimal_mix(choi(target), chans, mo).p.weights;
        for (double &x : w)
            if (x <= params.prune) x = 0.0;
    } else {
        w[closest] = 1.0;
    }
    auto p = ProbabilityDistribution::normalized(w);
    double value = mix_distance_1q(t, support_magic, p);
    if (value > r.det_error) {
        p = ProbabilityDistribution::point_mass(w.size(), closest);
        value = r.det_error;
    }

    for (std::size_t k = 0; k < support_idx.size(); ++k) {
        if (p[k] == 0.0) continue;
        r.support.push_back(pool[support_idx[k]]);
        r.p.weights.push_back(p[k]);
    }
    r.prob_error = value;
    r.samples = sample(r.p, seed, params.samples);
    return r;
}

std::string to_json(const SynthesisResult &r) {
    nlohmann::json support = nlohmann::json::array();
    for (const auto &s : r.support) support.push_back(s.labels);
    nlohmann::json p = nlohmann::json::array();
    for (double x : r.p.weights) p.push_back(round_significant(x));
    nlohmann::json samples = nlohmann::json::array();
    for (auto i : r.samples) samples.push_back(r.support[i].labels);
    nlohmann::json j;
    j["eps"] = round_significant(r.eps);
    j["delta"] = round_significant(r.delta);
    j["seed"] = r.seed;
    j["det_error"] = round_significant(r.det_error);
    j["prob_error"] = round_significant(r.prob_error);
    j["achieved_radius"] = round_significant(r.achieved_radius);
    j["covering_size"] = r.covering_size;
    j["candidate_count"] = r.candidate_count;
    j["support"] = std::move(support);
    j["p"] = std::move(p);
    j["samples"] = std::move(samples);
    return j.dump();
}

CampbellResult campbell_mix(const Unitary &target, const std::vector<Unitary> &candidates,
                            const CampbellOptions &options) {
    if (candidates.empty()) throw Error(ErrorKind::EmptyCandidates, "campbell_mix needs candidates");
    const std::size_t d = target.dim();
    const std::size_t n = candidates.size();
    std::vector<std::vector<double>> h;
    for (const auto &c : candidates) {
        if (c.dim() != d) throw Error(ErrorKind::DimensionMismatch, "candidate dimension differs from target");
        ComplexMatrix w = target.adjoint().matrix() * c.matrix();
        const Complex tr = w.trace();
        if (std::abs(tr) > 1e-12) w *= std::conj(tr) / std::abs(tr);
        ComplexMatrix hx = unitary_log(Unitary(w, 1e-6), options.branch_margin).matrix();
        const Complex shift = hx.trace() / static_cast<double>(d);
        for (std::size_t i = 0; i < d; ++i) hx(i, i) -= shift;
        h.push_back(frobenius_coords(hx));
    }
    RealMatrix g(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            double s = 0.0;
            for (std::size_t k = 0; k < h[a].size(); ++k) s += h[a][k] * h[b][k];
            g(a, b) = g(b, a) = s;
        }

    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (g(i, i) < g(start, start)) start = i;
    std::vector<double> p(n, 0.0);
    p[start] = 1.0;
    std::vector<double> gp(n);  // G p
    for (std::size_t i = 0; i < n; ++i) gp[i] = g(i, start);
    auto objective = [&] {
        double f = 0.0;
        for (std::size_t i = 0; i < n; ++i) f += p[i] * gp[i];
        return std::max(0.0, f);
    };

    CampbellResult r;
    int it = 0;
    for (; it < options.max_iter; ++it) {
        const double f = objective();
        if (std::sqrt(f) <= options.tol) break;
        // Gradient is 2 G p; the factor does not affect vertex choice.
        std::size_t s = 0, v = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (gp[i] < gp[s]) s = i;
            if (p[i] > 0.0 && (v == n || gp[i] > gp[v])) v = i;
        }
        const double fw_gap = f - gp[s];  // -<grad/2, e_s - p>
        const double away_gap = gp[v] - f;
        if (fw_gap <= 1e-16 * std::max(1.0, f)) break;  // optimal
        std::vector<double> dir(n, 0.0);
        double gmax;
        if (fw_gap >= away_gap) {
            for (std::size_t i = 0; i < n; ++i) dir[i] = -p[i];
            dir[s] += 1.0;
            gmax = 1.0;
        } else {
            for (std::size_t i = 0; i < n; ++i) dir[i] = p[i];
            dir[v] -= 1.0;
            gmax = p[v] / (1.0 - p[v]);
        }
        // f(p + t dir) = f + 2 t dir.Gp + t^2 dir.G dir.
        std::vector<double> gd(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (dir[i] == 0.0) continue;
            for (std::size_t k = 0; k < n; ++k) gd[k] += g(k, i) * dir[i];
        }
        double lin = 0.0, quad = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            lin += dir[i] * gp[i];
            quad += dir[i] * gd[i];
        }
        if (lin >= 0.0) break;
        const double step = quad > 0.0 ? std::min(gmax, -lin / quad) : gmax;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] += step * dir[i];
            if (p[i] < 1e-15) p[i] = 0.0;
            gp[i] += step * gd[i];
        }
    }
    r.iterations = it;
    r.p = ProbabilityDistribution::normalized(p);
    // Recompute the residual from scratch on the final weights.
    std::vector<double> acc(h[0].size(), 0.0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += r.p[x] * h[x][k];
    double s = 0.0;
    for (double a : acc) s += a * a;
    r.residual = std::sqrt(s);
    return r;
}

std::vector<std::size_t> sample(const ProbabilityDistribution &p, std::uint64_t seed, std::size_t n) {
    if (n == 0) return {};
    p.validate();
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += std::max(0.0, p[i]);
        cdf[i] = acc;
        if (p[i] > 0.0) last = i;
    }
    Rng rng(seed);
    std::vector<std::size_t> out(n);
    for (auto &o : out) {
        const double u = uniform01(rng) * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        o = std::min(static_cast<std::size_t>(it - cdf.begin()), last);
    }
    return out;
}

}  // namespace usynth
