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

#include "usynth/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <numeric>

namespace usynth {

namespace {

void require_square(const ComplexMatrix &m, const char *what) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " requires a square matrix");
}

double hermitian_defect(const ComplexMatrix &m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

double unitary_defect(const ComplexMatrix &m) {
    ComplexMatrix g = m.adjoint() * m;
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    return g.max_abs();
}

template <typename T>
T unit_phase(const T &x, double mag) {
    return x / mag;
}

// Cyclic Jacobi on a Hermitian (or real symmetric) matrix, modified in place.
// For the pivot a_pq = g e^{i phi} the rotation is
//   Q = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
// which first makes the pivot real and then zeroes it.
template <typename T>
void jacobi(Matrix<T> &a, Matrix<T> *v) {
    const std::size_t n = a.rows();
    if (v) *v = Matrix<T>::identity(n);
    if (n < 2) return;

    double scale = a.frobenius_norm();
    if (scale == 0.0) return;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(2.0 * off) <= eps * scale * 0.5) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const T apq = a(p, q);
                const double g = std::abs(apq);
                if (g == 0.0) continue;
                const double app = detail::real_of(a(p, p));
                const double aqq = detail::real_of(a(q, q));
                // Skip pivots already negligible against both diagonals.
                if (sweep > 3 && g < eps * 1e-2 * (std::abs(app) + std::abs(aqq))) {
                    a(p, q) = T{};
                    a(q, p) = T{};
                    continue;
                }
                const T ph = unit_phase(apq, g);  // e^{i phi}
                const T phc = detail::conj_of(ph);
                const double theta = (aqq - app) / (2.0 * g);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Columns: A <- A Q.
                for (std::size_t k = 0; k < n; ++k) {
                    const T akp = a(k, p);
                    const T akq = a(k, q);
                    a(k, p) = c * akp - s * phc * akq;
                    a(k, q) = s * akp + c * phc * akq;
                }
                // Rows: A <- Q^dagger A.
                for (std::size_t k = 0; k < n; ++k) {
                    const T apk = a(p, k);
                    const T aqk = a(q, k);
                    a(p, k) = c * apk - s * ph * aqk;
                    a(q, k) = s * apk + c * ph * aqk;
                }
                a(p, q) = T{};
                a(q, p) = T{};
                a(p, p) = T{detail::real_of(a(p, p))};
                a(q, q) = T{detail::real_of(a(q, q))};
                if (v) {
                    Matrix<T> &vv = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const T vkp = vv(k, p);
                        const T vkq = vv(k, q);
                        vv(k, p) = c * vkp - s * phc * vkq;
                        vv(k, q) = s * vkp + c * phc * vkq;
                    }
                }
            }
        }
    }
}

template <typename T>
std::pair<std::vector<double>, Matrix<T>> sorted_eig(Matrix<T> a, bool want_vectors) {
    const std::size_t n = a.rows();
    Matrix<T> v;
    jacobi(a, want_vectors ? &v : nullptr);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return detail::real_of(a(i, i)) > detail::real_of(a(j, j));
    });
    std::vector<double> values(n);
    Matrix<T> vecs;
    if (want_vectors) vecs = Matrix<T>(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = detail::real_of(a(order[k], order[k]));
        if (want_vectors)
            for (std::size_t r = 0; r < n; ++r) vecs(r, k) = v(r, order[k]);
    }
    return {std::move(values), std::move(vecs)};
}

double wrap_phase(double x) {
    constexpr double pi = std::numbers::pi;
    x = std::remainder(x, 2.0 * pi);
    if (x <= -pi) x += 2.0 * pi;
    return x;
}

// Hermitian dilation [[0, M], [M^dagger, 0]] whose eigenvalues are +-sigma_i.
ComplexMatrix dilation(const ComplexMatrix &m) {
    const std::size_t r = m.rows(), c = m.cols();
    ComplexMatrix d(r + c, r + c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            d(i, r + j) = m(i, j);
            d(r + j, i) = std::conj(m(i, j));
        }
    return d;
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix &m, double tol) {
    require_square(m, "HermitianMatrix");
    if (!m.all_finite()) throw Error(ErrorKind::NonFinite, "matrix has non-finite entries");
    if (hermitian_defect(m) > tol) throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within tolerance");
    *this = symmetrized(m);
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix &m) {
    require_square(m, "HermitianMatrix");
    HermitianMatrix h;
    h.base_ = m;
    h.base_ += m.adjoint();
    h.base_ *= Complex(0.5);
    return h;
}

Unitary::Unitary(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) throw Error(ErrorKind::NotUnitary, "unitary must be square");
    if (!m.all_finite()) throw Error(ErrorKind::NonFinite, "matrix has non-finite entries");
    if (unitary_defect(m) > tol) throw Error(ErrorKind::NotUnitary, "matrix is not unitary within tolerance");
    base_ = m;
}

Unitary Unitary::adjoint() const { return Unitary(base_.adjoint(), Unchecked{}); }

Unitary operator*(const Unitary &a, const Unitary &b) { return Unitary(a.base_ * b.base_, Unitary::Unchecked{}); }

bool is_hermitian(const ComplexMatrix &m, double tol) { return m.is_square() && hermitian_defect(m) <= tol; }

bool is_unitary(const ComplexMatrix &m, double tol) { return m.is_square() && unitary_defect(m) <= tol; }

HermitianEigen hermitian_eig(const HermitianMatrix &m) {
    auto [values, vectors] = sorted_eig(m.matrix(), true);
    return {std::move(values), std::move(vectors)};
}

HermitianEigen hermitian_eig(const ComplexMatrix &m) { return hermitian_eig(HermitianMatrix(m)); }

SymmetricEigen symmetric_eig(const RealMatrix &m, bool want_vectors) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "symmetric_eig requires a square matrix");
    RealMatrix s = m;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = i + 1; j < s.cols(); ++j) {
            if (std::abs(m(i, j) - m(j, i)) > kTolHermitian * std::max(1.0, std::abs(m(i, j))))
                throw Error(ErrorKind::NotHermitian, "matrix is not symmetric within tolerance");
            s(i, j) = s(j, i) = 0.5 * (m(i, j) + m(j, i));
        }
    auto [values, vectors] = sorted_eig(std::move(s), want_vectors);
    return {std::move(values), std::move(vectors)};
}

std::vector<double> symmetric_eigenvalues(const RealMatrix &m) { return symmetric_eig(m, false).values; }

UnitaryEigen unitary_eig(const Unitary &u) {
    const ComplexMatrix &w = u.matrix();
    const std::size_t d = w.rows();
    const ComplexMatrix id = ComplexMatrix::identity(d);

    // Pick a rotation alpha keeping every eigenvalue of e^{i alpha} W away
    // from -1; with d+1 equally spaced trial angles one of them is at least
    // pi/(d+1) away.
    double best_alpha = 0.0, best_sigma = -1.0;
    for (std::size_t k = 0; k <= d; ++k) {
        const double alpha = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d + 1);
        ComplexMatrix m = id + std::polar(1.0, alpha) * w;
        const auto sv = singular_values(m);
        const double smin = sv.empty() ? 0.0 : sv.back();
        if (smin > best_sigma + 1e-12) {
            best_sigma = smin;
            best_alpha = alpha;
        }
    }
    const ComplexMatrix ws = std::polar(1.0, best_alpha) * w;
    // K = i (I - W')(I + W')^{-1} is Hermitian with eigenvalues tan(psi/2).
    // (I - W') and (I + W')^{-1} commute, so solve (I + W')^T X^T = (I - W')^T.
    const ComplexMatrix plus = id + ws;
    const ComplexMatrix minus = id - ws;
    ComplexMatrix k = lu_solve(plus.transpose(), minus.transpose()).transpose();
    k *= Complex(0.0, 1.0);
    const HermitianMatrix kh = HermitianMatrix::symmetrized(k);
    const auto eig = hermitian_eig(kh);

    std::vector<double> phases(d);
    for (std::size_t i = 0; i < d; ++i) phases[i] = wrap_phase(2.0 * std::atan(eig.values[i]) - best_alpha);
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return phases[a] < phases[b]; });

    UnitaryEigen out;
    out.vectors = ComplexMatrix(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        const std::size_t src = order[c];
        out.phases.push_back(phases[src]);
        out.values.push_back(std::polar(1.0, phases[src]));
        for (std::size_t r = 0; r < d; ++r) out.vectors(r, c) = eig.vectors(r, src);
    }
    return out;
}

HermitianMatrix unitary_log(const Unitary &u, double branch_margin) {
    const auto eig = unitary_eig(u);
    const std::size_t d = u.dim();
    for (double ph : eig.phases) {
        if (std::abs(ph) > std::numbers::pi - branch_margin)
            throw Error(ErrorKind::BranchCut, "eigenphase too close to pi for the principal logarithm");
    }
    ComplexMatrix h(d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                h(i, j) += eig.phases[k] * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    return HermitianMatrix::symmetrized(h);
}

Unitary unitary_exp(const HermitianMatrix &h) {
    const auto eig = hermitian_eig(h);
    const std::size_t d = h.dim();
    ComplexMatrix u(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const Complex e = std::polar(1.0, eig.values[k]);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) u(i, j) += e * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    }
    return Unitary(u);
}

std::vector<double> singular_values(const ComplexMatrix &m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    if (n == 0) return {};
    const auto values = hermitian_eig(HermitianMatrix::symmetrized(dilation(m))).values;
    std::vector<double> out(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
    for (auto &s : out) s = std::max(s, 0.0);
    return out;
}

double trace_norm(const ComplexMatrix &m) {
    if (m.is_square() && is_hermitian(m, 1e-14 * std::max(1.0, m.max_abs()))) {
        const auto values = hermitian_eig(HermitianMatrix::symmetrized(m)).values;
        double acc = 0.0;
        for (double v : values) acc += std::abs(v);
        return acc;
    }
    const auto sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

double operator_norm(const ComplexMatrix &m) {
    const auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

HermitianMatrix psd_sqrt(const HermitianMatrix &m, double clamp) {
    const auto eig = hermitian_eig(m);
    const std::size_t d = m.dim();
    const double top = eig.values.empty() ? 0.0 : std::max(1.0, eig.values.front());
    ComplexMatrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double lam = eig.values[k];
        if (lam <= clamp * top) continue;
        const double s = std::sqrt(lam);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) out(i, j) += s * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    }
    return HermitianMatrix::symmetrized(out);
}

namespace {
template <typename T>
Matrix<T> kron_impl(const Matrix<T> &a, const Matrix<T> &b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T aij = a(i, j);
            if (aij == T{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

void check_bipartite(const ComplexMatrix &m, std::size_t d1, std::size_t d2) {
    if (d1 == 0 || d2 == 0 || m.rows() != d1 * d2 || m.cols() != d1 * d2)
        throw Error(ErrorKind::DimensionMismatch, "operator does not factor as d1*d2");
}
}  // namespace

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) { return kron_impl(a, b); }
RealMatrix kron(const RealMatrix &a, const RealMatrix &b) { return kron_impl(a, b); }

ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t d1, std::size_t d2, Subsystem which) {
    check_bipartite(m, d1, d2);
    if (which == Subsystem::Second) {
        ComplexMatrix out(d1, d1);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j)
                for (std::size_t a = 0; a < d2; ++a) out(i, j) += m(i * d2 + a, j * d2 + a);
        return out;
    }
    ComplexMatrix out(d2, d2);
    for (std::size_t a = 0; a < d2; ++a)
        for (std::size_t b = 0; b < d2; ++b)
            for (std::size_t i = 0; i < d1; ++i) out(a, b) += m(i * d2 + a, i * d2 + b);
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, std::size_t d1, std::size_t d2, Subsystem which) {
    check_bipartite(m, d1, d2);
    ComplexMatrix out(d1 * d2, d1 * d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j)
            for (std::size_t a = 0; a < d2; ++a)
                for (std::size_t b = 0; b < d2; ++b) {
                    const Complex v = m(i * d2 + a, j * d2 + b);
                    if (which == Subsystem::Second)
                        out(i * d2 + b, j * d2 + a) = v;
                    else
                        out(j * d2 + a, i * d2 + b) = v;
                }
    return out;
}

Complex inner_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "inner product shapes differ");
    Complex acc{};
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) acc += std::conj(da[i]) * db[i];
    return acc;
}

std::optional<RealMatrix> cholesky(const RealMatrix &m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "cholesky requires a square matrix");
    const std::size_t n = m.rows();
    RealMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = m(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
        if (!(diag > 0.0)) return std::nullopt;
        const double ljj = std::sqrt(diag);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

void solve_lower(const RealMatrix &l, std::span<double> b) {
    const std::size_t n = l.rows();
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
        b[i] = s / l(i, i);
    }
}

void solve_lower_transpose(const RealMatrix &l, std::span<double> b) {
    const std::size_t n = l.rows();
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * b[k];
        b[ii] = s / l(ii, ii);
    }
}

RealSvd svd_jacobi(const RealMatrix &a) {
    if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "svd_jacobi requires a square matrix");
    const std::size_t n = a.rows();
    RealMatrix g = a;
    RealMatrix v = RealMatrix::identity(n);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int sweep = 0; sweep < 80; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    alpha += g(k, p) * g(k, p);
                    beta += g(k, q) * g(k, q);
                    gamma += g(k, p) * g(k, q);
                }
                if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < n; ++k) {
                    const double gp = g(k, p), gq = g(k, q);
                    g(k, p) = c * gp - s * gq;
                    g(k, q) = s * gp + c * gq;
                    const double vp = v(k, p), vq = v(k, q);
                    v(k, p) = c * vp - s * vq;
                    v(k, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += g(k, j) * g(k, j);
        sigma[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });
    RealSvd out;
    out.u = RealMatrix(n, n);
    out.v = RealMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t src = order[c];
        out.values.push_back(sigma[src]);
        for (std::size_t k = 0; k < n; ++k) {
            out.v(k, c) = v(k, src);
            out.u(k, c) = sigma[src] > 0.0 ? g(k, src) / sigma[src] : 0.0;
        }
    }
    return out;
}

RealMatrix invert_lower(const RealMatrix &l) {
    const std::size_t n = l.rows();
    RealMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        inv(j, j) = 1.0 / l(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = 0.0;
            for (std::size_t k = j; k < i; ++k) s += l(i, k) * inv(k, j);
            inv(i, j) = -s / l(i, i);
        }
    }
    return inv;
}

ComplexMatrix lu_solve(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (!a.is_square() || a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "lu_solve shape mismatch");
    const std::size_t n = a.rows();
    ComplexMatrix lu = a;
    ComplexMatrix x = b;
    const double scale = std::max(1.0, a.max_abs());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
        if (std::abs(lu(piv, k)) <= 1e-14 * scale) throw Error(ErrorKind::InvalidArgument, "matrix is numerically singular");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(piv, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu(i, k) / lu(k, k);
            lu(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
            for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            Complex s = x(ii, j);
            for (std::size_t k = ii + 1; k < n; ++k) s -= lu(ii, k) * x(k, j);
            x(ii, j) = s / lu(ii, ii);
        }
    }
    return x;
}

}  // namespace usynth
