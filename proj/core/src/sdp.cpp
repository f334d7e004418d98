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

#include "usynth/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json_detail.hpp"

namespace usynth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Triplet {
    std::size_t r;
    std::size_t c;
    double v;
};

// One constraint (or the objective) restricted to one block, with both
// halves of symmetric pairs listed explicitly.
struct BlockPart {
    std::size_t block;
    std::vector<Triplet> full;
};

using Sparse = std::vector<BlockPart>;

Sparse compile(const std::vector<RealEntry> &entries, const std::vector<BlockSpec> &blocks) {
    Sparse out;
    std::vector<std::size_t> slot(blocks.size(), static_cast<std::size_t>(-1));
    for (const auto &e : entries) {
        if (e.value == 0.0) continue;
        if (slot[e.block] == static_cast<std::size_t>(-1)) {
            slot[e.block] = out.size();
            out.push_back({e.block, {}});
        }
        auto &full = out[slot[e.block]].full;
        full.push_back({e.row, e.col, e.value});
        if (e.row != e.col) full.push_back({e.col, e.row, e.value});
    }
    return out;
}

// Block-diagonal variable. Dense blocks are n x n, diagonal blocks n x 1.
using Blocks = std::vector<RealMatrix>;

Blocks zeros_like(const std::vector<BlockSpec> &blocks) {
    Blocks out;
    for (const auto &b : blocks) out.emplace_back(b.dim, b.kind == BlockKind::Dense ? b.dim : 1);
    return out;
}

double inner(const Blocks &a, const Blocks &b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto da = a[k].data();
        const auto db = b[k].data();
        for (std::size_t i = 0; i < da.size(); ++i) acc += da[i] * db[i];
    }
    return acc;
}

double apply(const Sparse &s, const Blocks &x, const std::vector<BlockSpec> &blocks) {
    double acc = 0.0;
    for (const auto &part : s) {
        const RealMatrix &m = x[part.block];
        if (blocks[part.block].kind == BlockKind::Dense) {
            for (const auto &t : part.full) acc += t.v * m(t.r, t.c);
        } else {
            for (const auto &t : part.full) acc += t.v * m(t.r, 0);
        }
    }
    return acc;
}

void accumulate(const Sparse &s, double scale, Blocks &out, const std::vector<BlockSpec> &blocks) {
    if (scale == 0.0) return;
    for (const auto &part : s) {
        RealMatrix &m = out[part.block];
        if (blocks[part.block].kind == BlockKind::Dense) {
            for (const auto &t : part.full) m(t.r, t.c) += scale * t.v;
        } else {
            for (const auto &t : part.full) m(t.r, 0) += scale * t.v;
        }
    }
}

double max_abs(const Blocks &b) {
    double m = 0.0;
    for (const auto &blk : b) m = std::max(m, blk.max_abs());
    return m;
}

void symmetrize(RealMatrix &m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) m(i, j) = m(j, i) = 0.5 * (m(i, j) + m(j, i));
}

// Per-block Nesterov-Todd scaling data.
struct Scaling {
    RealMatrix r;      // W = R R^T, R^T Z R = R^{-1} X R^{-T} = diag(lambda)
    RealMatrix rinv;
    RealMatrix w;
    RealMatrix lx_inv;  // inverse Cholesky factors for step lengths
    RealMatrix lz_inv;
    std::vector<double> lambda;
};

class InteriorPoint {
   public:
    InteriorPoint(const RealSdpProblem &p, const SdpOptions &o) : opt_(o), blocks_(p.blocks) {
        // Internally: minimize <C', X> s.t. A(X) = b, A^T y' + Z = C', with
        // C' = -C and y = -y'.
        for (const auto &c : p.constraints) {
            a_.push_back(compile(c.entries, blocks_));
            b_.push_back(c.rhs);
        }
        c_ = zeros_like(blocks_);
        accumulate(compile(p.objective, blocks_), -1.0, c_, blocks_);
        m_ = a_.size();
        nu_ = 0.0;
        for (const auto &b : blocks_) nu_ += static_cast<double>(b.dim);
        // Constraints touching each diagonal block, as dense rows.
        b_scale_ = 1.0 + max_abs_vec(b_);
        c_scale_ = 1.0 + max_abs(c_);
        init_point();
    }

    RealSdpSolution run() {
        RealSdpSolution sol;
        int stalled = 0;
        for (int iter = 0;; ++iter) {
            residuals();
            const double pobj = -inner(c_, x_);
            double dobj = 0.0;
            for (std::size_t i = 0; i < m_; ++i) dobj -= b_[i] * y_[i];
            const double xz = inner(x_, z_);
            const double rp_max = max_abs_vec(rp_);
            const double rd_max = max_abs(rd_);
            if (opt_.keep_history) {
                double xs = 0.0, ys = 0.0;
                for (const auto &blk : x_)
                    for (double v : blk.data()) xs += std::abs(v);
                for (double v : y_) ys += std::abs(v);
                sol.history.push_back({pobj, dobj, rp_max, rd_max, xz, xs, ys});
            }
            sol.iterations = iter;
            sol.primal_value = pobj;
            sol.dual_value = dobj;
            sol.primal_residual = rp_max;
            sol.dual_residual = rd_max;

            // Objective gap plus both feasibilities certify optimality; on
            // degenerate problems <X, Z> can lag behind while further steps
            // only erode primal feasibility. Residuals are relative to the data.
            if (std::abs(pobj - dobj) <= opt_.gap_tol && rp_max <= opt_.feas_tol * b_scale_ && rd_max <= opt_.feas_tol * c_scale_) {
                sol.status = SdpStatus::Optimal;
                break;
            }
            if (infeasibility_certificate(pobj)) {
                sol.status = SdpStatus::Infeasible;
                break;
            }
            if (iter >= opt_.max_iter || stalled >= 4) {
                sol.status = SdpStatus::MaxIter;
                break;
            }
            if (!step(xz)) {
                sol.status = SdpStatus::MaxIter;
                break;
            }
            stalled = (last_alpha_p_ < 1e-8 && last_alpha_d_ < 1e-8) ? stalled + 1 : 0;
        }
        sol.x = x_;
        sol.z = z_;
        sol.y.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) sol.y[i] = -y_[i];
        return sol;
    }

   private:
    static double max_abs_vec(const std::vector<double> &v) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }

    void init_point() {
        x_ = zeros_like(blocks_);
        z_ = zeros_like(blocks_);
        y_.assign(m_, 0.0);
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            const double n = static_cast<double>(blocks_[k].dim);
            double xi = std::max(10.0, std::sqrt(n));
            double eta = std::max(10.0, std::sqrt(n));
            for (std::size_t i = 0; i < m_; ++i) {
                double fro = 0.0;
                for (const auto &part : a_[i])
                    if (part.block == k)
                        for (const auto &t : part.full) fro += t.v * t.v;
                fro = std::sqrt(fro);
                xi = std::max(xi, n * (1.0 + std::abs(b_[i])) / (1.0 + fro));
                eta = std::max(eta, fro);
            }
            eta = std::max(eta, c_[k].frobenius_norm());
            for (std::size_t i = 0; i < blocks_[k].dim; ++i) {
                if (blocks_[k].kind == BlockKind::Dense) {
                    x_[k](i, i) = xi;
                    z_[k](i, i) = eta;
                } else {
                    x_[k](i, 0) = xi;
                    z_[k](i, 0) = eta;
                }
            }
        }
    }

    void residuals() {
        rp_.assign(m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) rp_[i] = b_[i] - apply(a_[i], x_, blocks_);
        rd_ = c_;
        for (std::size_t k = 0; k < blocks_.size(); ++k) rd_[k] -= z_[k];
        for (std::size_t i = 0; i < m_; ++i) accumulate(a_[i], -y_[i], rd_, blocks_);
    }

    bool infeasibility_certificate(double pobj) {
        // Primal infeasible: b^T y' > 0 with A^T y' <= 0 up to tolerance.
        double by = 0.0;
        for (std::size_t i = 0; i < m_; ++i) by += b_[i] * y_[i];
        const double ymax = max_abs_vec(y_);
        if (by > 0.0 && ymax > 1e8) {
            // A^T y' = C' - Z - R_d; Z >= 0, so A^T y' / by <= (C' - R_d)/by.
            Blocks cr = c_;
            for (std::size_t k = 0; k < cr.size(); ++k) cr[k] -= rd_[k];
            if (max_abs(cr) / by <= 1e-8) return true;
        }
        // Dual infeasible: X >= 0 with A(X) = 0 and <C', X> < 0.
        const double cx = -pobj;
        const double xmax = max_abs(x_);
        if (cx < 0.0 && xmax > 1e8) {
            double ax = 0.0;
            for (std::size_t i = 0; i < m_; ++i) ax = std::max(ax, std::abs(b_[i] - rp_[i]));
            if (ax / -cx <= 1e-8) return true;
        }
        return false;
    }

    bool compute_scaling() {
        sc_.assign(blocks_.size(), {});
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            Scaling &s = sc_[k];
            const std::size_t n = blocks_[k].dim;
            if (blocks_[k].kind == BlockKind::Diagonal) {
                s.w = RealMatrix(n, 1);
                s.lambda.resize(n);
                for (std::size_t i = 0; i < n; ++i) {
                    const double x = x_[k](i, 0), z = z_[k](i, 0);
                    if (!(x > 0.0) || !(z > 0.0)) return false;
                    s.w(i, 0) = x / z;
                    s.lambda[i] = std::sqrt(x * z);
                }
                continue;
            }
            auto lx = cholesky(x_[k]);
            auto lz = cholesky(z_[k]);
            if (!lx || !lz) return false;
            const RealSvd svd = svd_jacobi(lz->transpose() * *lx);
            s.lambda = svd.values;
            for (double l : s.lambda)
                if (!(l > 0.0)) return false;
            RealMatrix r = *lx * svd.v;
            for (std::size_t j = 0; j < n; ++j) {
                const double f = 1.0 / std::sqrt(s.lambda[j]);
                for (std::size_t i = 0; i < n; ++i) r(i, j) *= f;
            }
            s.lx_inv = invert_lower(*lx);
            s.lz_inv = invert_lower(*lz);
            // R^{-1} = Lambda^{1/2} V^T Lx^{-1}.
            RealMatrix rinv = svd.v.transpose() * s.lx_inv;
            for (std::size_t i = 0; i < n; ++i) {
                const double f = std::sqrt(s.lambda[i]);
                for (std::size_t j = 0; j < n; ++j) rinv(i, j) *= f;
            }
            s.w = r * r.transpose();
            symmetrize(s.w);
            s.r = std::move(r);
            s.rinv = std::move(rinv);
        }
        return true;
    }

    bool build_schur() {
        RealMatrix mm(m_, m_);
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            if (blocks_[k].kind == BlockKind::Dense) {
                const RealMatrix &w = sc_[k].w;
                const std::size_t n = blocks_[k].dim;
                // For each constraint touching block k form W A_i W densely,
                // then contract against the sparse A_j.
                std::vector<std::pair<std::size_t, const BlockPart *>> touching;
                for (std::size_t i = 0; i < m_; ++i)
                    for (const auto &part : a_[i])
                        if (part.block == k) touching.emplace_back(i, &part);
                for (std::size_t ti = 0; ti < touching.size(); ++ti) {
                    const auto &[i, pi] = touching[ti];
                    RealMatrix aw(n, n);
                    for (const auto &t : pi->full)
                        for (std::size_t c = 0; c < n; ++c) aw(t.r, c) += t.v * w(t.c, c);
                    const RealMatrix waw = w * aw;
                    for (std::size_t tj = ti; tj < touching.size(); ++tj) {
                        const auto &[j, pj] = touching[tj];
                        double acc = 0.0;
                        for (const auto &t : pj->full) acc += t.v * waw(t.c, t.r);
                        mm(i, j) += acc;
                    }
                }
            } else {
                const RealMatrix &w = sc_[k].w;
                std::vector<std::pair<std::size_t, const BlockPart *>> touching;
                for (std::size_t i = 0; i < m_; ++i)
                    for (const auto &part : a_[i])
                        if (part.block == k) touching.emplace_back(i, &part);
                const std::size_t n = blocks_[k].dim;
                std::vector<double> gi(n);
                for (std::size_t ti = 0; ti < touching.size(); ++ti) {
                    std::fill(gi.begin(), gi.end(), 0.0);
                    for (const auto &t : touching[ti].second->full) gi[t.r] += t.v * w(t.r, 0);
                    for (std::size_t tj = ti; tj < touching.size(); ++tj) {
                        double acc = 0.0;
                        for (const auto &t : touching[tj].second->full) acc += t.v * gi[t.r];
                        mm(touching[ti].first, touching[tj].first) += acc;
                    }
                }
            }
        }
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < i; ++j) mm(i, j) = mm(j, i);
        double diag_max = 0.0;
        for (std::size_t i = 0; i < m_; ++i) diag_max = std::max(diag_max, mm(i, i));
        double reg = 0.0;
        for (int attempt = 0; attempt < 8; ++attempt) {
            RealMatrix trial = mm;
            for (std::size_t i = 0; i < m_; ++i) trial(i, i) += reg;
            if (auto l = cholesky(trial)) {
                schur_ = std::move(*l);
                schur_full_ = std::move(mm);
                return true;
            }
            reg = reg == 0.0 ? 1e-14 * std::max(1.0, diag_max) : reg * 100.0;
        }
        return false;
    }

    // Solves the Newton system for complementarity right-hand side rc.
    void direction(const Blocks &rc, Blocks &dx, std::vector<double> &dy, Blocks &dz) {
        // G = Rc - W Rd W.
        Blocks g = rc;
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            if (blocks_[k].kind == BlockKind::Dense) {
                g[k] -= sc_[k].w * rd_[k] * sc_[k].w;
            } else {
                for (std::size_t i = 0; i < blocks_[k].dim; ++i) g[k](i, 0) -= sc_[k].w(i, 0) * rd_[k](i, 0);
            }
        }
        dy.assign(m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) dy[i] = rp_[i] - apply(a_[i], g, blocks_);
        schur_solve(dy);
        dz = rd_;
        for (std::size_t i = 0; i < m_; ++i) accumulate(a_[i], -dy[i], dz, blocks_);
        dx = rc;
        add_scaled(dz, -1.0, dx);
        // Near the boundary W spans many orders of magnitude and A(dx) misses
        // rp by more than the feasibility tolerance. Correct along
        // W A^T delta W, which leaves the linearized complementarity intact.
        const double rp_scale = 1.0 + max_abs_vec(rp_);
        for (int pass = 0; pass < 2; ++pass) {
            std::vector<double> res(m_);
            double worst = 0.0;
            for (std::size_t i = 0; i < m_; ++i) {
                res[i] = rp_[i] - apply(a_[i], dx, blocks_);
                worst = std::max(worst, std::abs(res[i]));
            }
            if (worst <= 1e-14 * rp_scale) break;
            schur_solve(res);
            Blocks t = zeros_like(blocks_);
            for (std::size_t i = 0; i < m_; ++i) accumulate(a_[i], res[i], t, blocks_);
            Blocks trial = dx;
            add_scaled(t, 1.0, trial);
            double after = 0.0;
            for (std::size_t i = 0; i < m_; ++i)
                after = std::max(after, std::abs(rp_[i] - apply(a_[i], trial, blocks_)));
            if (!(after < worst)) break;
            dx = std::move(trial);
            for (std::size_t i = 0; i < m_; ++i) dy[i] += res[i];
            for (std::size_t k = 0; k < blocks_.size(); ++k) dz[k].axpy(-1.0, t[k]);
        }
        for (std::size_t k = 0; k < blocks_.size(); ++k)
            if (blocks_[k].kind == BlockKind::Dense) {
                symmetrize(dx[k]);
                symmetrize(dz[k]);
            }
    }

    // out += sign * W v W, blockwise.
    void add_scaled(const Blocks &v, double sign, Blocks &out) const {
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            if (blocks_[k].kind == BlockKind::Dense) {
                out[k].axpy(sign, sc_[k].w * v[k] * sc_[k].w);
            } else {
                for (std::size_t i = 0; i < blocks_[k].dim; ++i) out[k](i, 0) += sign * sc_[k].w(i, 0) * v[k](i, 0);
            }
        }
    }

    // Solves M v = rhs in place with the Cholesky factor, then refines
    // against the unregularized M.
    void schur_solve(std::vector<double> &v) const {
        const std::vector<double> rhs = v;
        solve_lower(schur_, v);
        solve_lower_transpose(schur_, v);
        for (int pass = 0; pass < 2; ++pass) {
            std::vector<double> r = rhs;
            double rmax = 0.0;
            for (std::size_t i = 0; i < m_; ++i) {
                for (std::size_t j = 0; j < m_; ++j) r[i] -= schur_full_(i, j) * v[j];
                rmax = std::max(rmax, std::abs(r[i]));
            }
            if (rmax <= 1e-15 * (1.0 + max_abs_vec(rhs))) break;
            solve_lower(schur_, r);
            solve_lower_transpose(schur_, r);
            for (std::size_t i = 0; i < m_; ++i) v[i] += r[i];
        }
    }

    // Largest alpha with V + alpha dV >= 0 (infinity if unbounded).
    double max_step(const Blocks &v, const Blocks &dv, bool primal) const {
        double alpha = kInf;
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            if (blocks_[k].kind == BlockKind::Diagonal) {
                for (std::size_t i = 0; i < blocks_[k].dim; ++i)
                    if (dv[k](i, 0) < 0.0) alpha = std::min(alpha, -v[k](i, 0) / dv[k](i, 0));
                continue;
            }
            const RealMatrix &linv = primal ? sc_[k].lx_inv : sc_[k].lz_inv;
            RealMatrix t = linv * dv[k] * linv.transpose();
            symmetrize(t);
            const auto ev = symmetric_eigenvalues(t);
            const double lmin = ev.back();
            if (lmin < 0.0) alpha = std::min(alpha, -1.0 / lmin);
        }
        return alpha;
    }

    bool step(double xz) {
        if (!compute_scaling()) return false;
        if (!build_schur()) return false;
        const double mu = xz / nu_;

        // Predictor.
        Blocks rc = x_;
        for (auto &b : rc) b *= -1.0;
        Blocks dxa, dza;
        std::vector<double> dya;
        direction(rc, dxa, dya, dza);
        const double ap = std::min(1.0, max_step(x_, dxa, true));
        const double ad = std::min(1.0, max_step(z_, dza, false));
        Blocks xa = x_, za = z_;
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            xa[k].axpy(ap, dxa[k]);
            za[k].axpy(ad, dza[k]);
        }
        const double mu_aff = inner(xa, za) / nu_;
        double sigma = mu > 0.0 ? std::pow(std::max(mu_aff, 0.0) / mu, 3.0) : 0.0;
        sigma = std::clamp(sigma, 0.0, 1.0);

        // Corrector in the scaled space.
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            const Scaling &s = sc_[k];
            const std::size_t n = blocks_[k].dim;
            if (blocks_[k].kind == BlockKind::Diagonal) {
                for (std::size_t i = 0; i < n; ++i) {
                    const double t = sigma * mu - s.lambda[i] * s.lambda[i] - dxa[k](i, 0) * dza[k](i, 0);
                    rc[k](i, 0) = t / z_[k](i, 0);
                }
                continue;
            }
            const RealMatrix dxs = s.rinv * dxa[k] * s.rinv.transpose();
            const RealMatrix dzs = s.r.transpose() * dza[k] * s.r;
            RealMatrix t = dxs * dzs;
            RealMatrix sm(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    double tij = -0.5 * (t(i, j) + t(j, i));
                    if (i == j) tij += sigma * mu - s.lambda[i] * s.lambda[i];
                    sm(i, j) = 2.0 * tij / (s.lambda[i] + s.lambda[j]);
                }
            rc[k] = s.r * sm * s.r.transpose();
            symmetrize(rc[k]);
        }
        Blocks dx, dz;
        std::vector<double> dy;
        direction(rc, dx, dy, dz);
        const double tau = 0.9 + 0.09 * std::min(ap, ad);
        const double alpha_p = std::min(1.0, tau * max_step(x_, dx, true));
        const double alpha_d = std::min(1.0, tau * max_step(z_, dz, false));
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            x_[k].axpy(alpha_p, dx[k]);
            z_[k].axpy(alpha_d, dz[k]);
        }
        for (std::size_t i = 0; i < m_; ++i) y_[i] += alpha_d * dy[i];
        last_alpha_p_ = alpha_p;
        last_alpha_d_ = alpha_d;
        return true;
    }

    SdpOptions opt_;
    std::vector<BlockSpec> blocks_;
    std::vector<Sparse> a_;
    std::vector<double> b_;
    Blocks c_;
    std::size_t m_ = 0;
    double nu_ = 0.0;

    Blocks x_, z_;
    std::vector<double> y_;
    std::vector<double> rp_;
    Blocks rd_;
    std::vector<Scaling> sc_;
    RealMatrix schur_;
    double b_scale_ = 1.0, c_scale_ = 1.0;
    RealMatrix schur_full_;
    double last_alpha_p_ = 1.0;
    double last_alpha_d_ = 1.0;
};

void check_entry(const SdpProblem &p, const SdpEntry &e) {
    if (e.block >= p.blocks.size()) throw Error(ErrorKind::InvalidArgument, "entry refers to a missing block");
    const auto &b = p.blocks[e.block];
    if (e.row >= b.dim || e.col >= b.dim) throw Error(ErrorKind::InvalidArgument, "entry outside its block");
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()))
        throw Error(ErrorKind::NonFinite, "non-finite coefficient");
    if (b.kind == BlockKind::Diagonal && e.row != e.col)
        throw Error(ErrorKind::InvalidArgument, "off-diagonal entry in a diagonal block");
    if (e.row == e.col && std::abs(e.value.imag()) > 1e-12)
        throw Error(ErrorKind::NotHermitian, "imaginary diagonal coefficient");
}

void embed_entries(const SdpProblem &p, const std::vector<SdpEntry> &in, std::vector<RealEntry> &out) {
    for (SdpEntry e : in) {
        if (e.row > e.col) {
            std::swap(e.row, e.col);
            e.value = std::conj(e.value);
        }
        const auto &b = p.blocks[e.block];
        if (b.kind == BlockKind::Diagonal) {
            out.push_back({e.block, e.row, e.row, e.value.real()});
            continue;
        }
        const std::size_t n = b.dim;
        const double re = 0.5 * e.value.real();
        const double im = 0.5 * e.value.imag();
        out.push_back({e.block, e.row, e.col, re});
        out.push_back({e.block, n + e.row, n + e.col, re});
        if (e.row != e.col && im != 0.0) {
            out.push_back({e.block, e.col, n + e.row, im});
            out.push_back({e.block, e.row, n + e.col, -im});
        }
    }
}

}  // namespace

const char *status_name(SdpStatus status) {
    switch (status) {
        case SdpStatus::Optimal: return "Optimal";
        case SdpStatus::MaxIter: return "MaxIter";
        case SdpStatus::Infeasible: return "Infeasible";
    }
    return "Unknown";
}

void validate(const SdpProblem &problem) {
    for (const auto &b : problem.blocks)
        if (b.dim == 0) throw Error(ErrorKind::InvalidArgument, "empty block");
    for (const auto &e : problem.objective) check_entry(problem, e);
    for (const auto &c : problem.constraints) {
        if (!std::isfinite(c.rhs)) throw Error(ErrorKind::NonFinite, "non-finite right-hand side");
        for (const auto &e : c.entries) check_entry(problem, e);
    }
}

ComplexMatrix block_matrix(const SdpProblem &problem, const std::vector<SdpEntry> &entries, std::size_t block) {
    const std::size_t n = problem.blocks.at(block).dim;
    ComplexMatrix m(n, n);
    for (const auto &e : entries) {
        if (e.block != block) continue;
        m(e.row, e.col) += e.value;
        if (e.row != e.col) m(e.col, e.row) += std::conj(e.value);
    }
    return m;
}

RealMatrix embed_hermitian(const ComplexMatrix &m) {
    const std::size_t n = m.rows();
    RealMatrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = out(n + i, n + j) = m(i, j).real();
            out(n + i, j) = m(i, j).imag();
            out(i, n + j) = -m(i, j).imag();
        }
    return out;
}

ComplexMatrix unembed_hermitian(const RealMatrix &m) {
    if (!m.is_square() || m.rows() % 2 != 0) throw Error(ErrorKind::DimensionMismatch, "embedded block must be 2n x 2n");
    const std::size_t n = m.rows() / 2;
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = {0.5 * (m(i, j) + m(n + i, n + j)), 0.5 * (m(n + i, j) - m(n + j, i))};
    return out;
}

RealSdpProblem real_embed(const SdpProblem &problem) {
    validate(problem);
    RealSdpProblem out;
    for (const auto &b : problem.blocks)
        out.blocks.push_back({b.kind, b.kind == BlockKind::Dense ? 2 * b.dim : b.dim});
    embed_entries(problem, problem.objective, out.objective);
    for (const auto &c : problem.constraints) {
        RealConstraint rc;
        rc.rhs = c.rhs;
        embed_entries(problem, c.entries, rc.entries);
        out.constraints.push_back(std::move(rc));
    }
    return out;
}

RealSdpSolution solve_real(const RealSdpProblem &problem, const SdpOptions &options) {
    for (const auto &c : problem.constraints)
        for (const auto &e : c.entries)
            if (e.block >= problem.blocks.size() || e.row > e.col || e.col >= problem.blocks[e.block].dim)
                throw Error(ErrorKind::InvalidArgument, "malformed real constraint entry");
    InteriorPoint ip(problem, options);
    return ip.run();
}

SdpSolution solve(const SdpProblem &problem, const SdpOptions &options) {
    const RealSdpProblem real = real_embed(problem);
    RealSdpSolution rs = solve_real(real, options);
    SdpSolution out;
    out.status = rs.status;
    out.y = std::move(rs.y);
    out.primal_value = rs.primal_value;
    out.dual_value = rs.dual_value;
    out.gap = std::abs(rs.primal_value - rs.dual_value);
    out.primal_residual = rs.primal_residual;
    out.dual_residual = rs.dual_residual;
    out.iterations = rs.iterations;
    out.history = std::move(rs.history);
    for (std::size_t k = 0; k < problem.blocks.size(); ++k) {
        if (problem.blocks[k].kind == BlockKind::Dense) {
            out.x.push_back(unembed_hermitian(rs.x[k]));
            ComplexMatrix z = unembed_hermitian(rs.z[k]);
            z *= Complex(2.0);
            out.z.push_back(std::move(z));
        } else {
            const std::size_t n = problem.blocks[k].dim;
            ComplexMatrix x(n, 1), z(n, 1);
            for (std::size_t i = 0; i < n; ++i) {
                x(i, 0) = rs.x[k](i, 0);
                z(i, 0) = rs.z[k](i, 0);
            }
            out.x.push_back(std::move(x));
            out.z.push_back(std::move(z));
        }
    }
    return out;
}

std::string dump_problem_json(const SdpProblem &problem) {
    validate(problem);
    nlohmann::json j;
    j["blocks"] = nlohmann::json::array();
    for (const auto &b : problem.blocks)
        j["blocks"].push_back({{"kind", b.kind == BlockKind::Dense ? "dense" : "diagonal"}, {"dim", b.dim}});
    j["C"] = nlohmann::json::array();
    for (std::size_t k = 0; k < problem.blocks.size(); ++k)
        j["C"].push_back(detail::matrix_json(block_matrix(problem, problem.objective, k)));
    j["A"] = nlohmann::json::array();
    j["b"] = nlohmann::json::array();
    for (const auto &c : problem.constraints) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < problem.blocks.size(); ++k)
            row.push_back(detail::matrix_json(block_matrix(problem, c.entries, k)));
        j["A"].push_back(std::move(row));
        j["b"].push_back(c.rhs);
    }
    return j.dump();
}

}  // namespace usynth
