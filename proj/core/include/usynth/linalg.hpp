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

#ifndef USYNTH_LINALG_HPP_
#define USYNTH_LINALG_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "usynth/error.hpp"

namespace usynth {

using Complex = std::complex<double>;

inline constexpr double kTolHermitian = 1e-8;
inline constexpr double kTolUnitary = 1e-8;
inline constexpr double kTolEig = 1e-10;

namespace detail {
inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex &x) { return std::conj(x); }
inline double real_of(double x) { return x; }
inline double real_of(const Complex &x) { return x.real(); }
}  // namespace detail

/// Dense row-major matrix. Sizes in this library stay small (a few dozen rows),
/// so everything is stored densely and copied by value.
template <typename T>
class Matrix {
   public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix data size does not match shape");
        }
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) {
                throw Error(ErrorKind::DimensionMismatch, "ragged matrix initializer");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }
    static Matrix diagonal(std::span<const T> entries) {
        Matrix m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::span<T> data() noexcept { return data_; }
    std::span<const T> data() const noexcept { return data_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix adjoint() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = detail::conj_of((*this)(r, c));
        return out;
    }
    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }
    Matrix conjugate() const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = detail::conj_of(data_[i]);
        return out;
    }

    T trace() const {
        T acc{};
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
        return acc;
    }

    double frobenius_norm() const {
        double acc = 0.0;
        for (const auto &v : data_) acc += std::norm(v);
        return std::sqrt(acc);
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto &v : data_) m = std::max(m, std::abs(v));
        return m;
    }
    bool all_finite() const {
        for (const auto &v : data_) {
            if (!std::isfinite(detail::real_of(v))) return false;
            if constexpr (std::is_same_v<T, Complex>) {
                if (!std::isfinite(v.imag())) return false;
            }
        }
        return true;
    }

    Matrix &operator+=(const Matrix &o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix &operator*=(const T &s) {
        for (auto &v : data_) v *= s;
        return *this;
    }
    /// Adds `s * o` in place.
    void axpy(const T &s, const Matrix &o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T &s) { return a *= s; }
    friend Matrix operator*(const T &s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T aik = a(i, k);
                if (aik == T{}) continue;
                const T *brow = &b.data_[k * b.cols_];
                T *orow = &out.data_[i * out.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    void check_same_shape(const Matrix &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;

/// Square complex matrix equal to its adjoint. Construction symmetrizes the
/// input after checking it is Hermitian within `tol`.
class HermitianMatrix {
   public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const ComplexMatrix &m, double tol = kTolHermitian);

    /// Builds (m + m^dagger)/2 without checking.
    static HermitianMatrix symmetrized(const ComplexMatrix &m);

    std::size_t dim() const noexcept { return base_.rows(); }
    const ComplexMatrix &matrix() const noexcept { return base_; }
    operator const ComplexMatrix &() const noexcept { return base_; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return base_(r, c); }

   private:
    ComplexMatrix base_;
};

/// Square complex matrix with U^dagger U = I within `tol`.
class Unitary {
   public:
    Unitary() = default;
    explicit Unitary(const ComplexMatrix &m, double tol = kTolUnitary);

    static Unitary identity(std::size_t d) { return Unitary(ComplexMatrix::identity(d)); }

    std::size_t dim() const noexcept { return base_.rows(); }
    const ComplexMatrix &matrix() const noexcept { return base_; }
    operator const ComplexMatrix &() const noexcept { return base_; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return base_(r, c); }

    Unitary adjoint() const;
    friend Unitary operator*(const Unitary &a, const Unitary &b);

   private:
    struct Unchecked {};
    Unitary(ComplexMatrix m, Unchecked) : base_(std::move(m)) {}
    ComplexMatrix base_;
};

bool is_hermitian(const ComplexMatrix &m, double tol = kTolHermitian);
bool is_unitary(const ComplexMatrix &m, double tol = kTolUnitary);

struct HermitianEigen {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // columns are orthonormal eigenvectors
};

struct SymmetricEigen {
    std::vector<double> values;  // descending
    RealMatrix vectors;
};

/// Cyclic Jacobi eigendecomposition. Throws NotHermitian when `m` is not
/// Hermitian within kTolHermitian.
HermitianEigen hermitian_eig(const HermitianMatrix &m);
HermitianEigen hermitian_eig(const ComplexMatrix &m);
SymmetricEigen symmetric_eig(const RealMatrix &m, bool want_vectors = true);
std::vector<double> symmetric_eigenvalues(const RealMatrix &m);

struct UnitaryEigen {
    std::vector<Complex> values;  // unit modulus, ordered by phase in (-pi, pi]
    std::vector<double> phases;   // principal arguments of `values`
    ComplexMatrix vectors;
};

/// Eigendecomposition of a unitary via a phase-shifted Cayley transform,
/// which reduces it to a Hermitian problem.
UnitaryEigen unitary_eig(const Unitary &u);

/// Principal logarithm: returns Hermitian H with U = exp(iH) and eigenvalues
/// in (-pi, pi). Throws BranchCut if an eigenphase lies within `branch_margin`
/// of pi.
HermitianMatrix unitary_log(const Unitary &u, double branch_margin = 1e-6);

/// exp(iH) for Hermitian H.
Unitary unitary_exp(const HermitianMatrix &h);

/// Singular values in descending order, from the eigenvalues of M^dagger M.
std::vector<double> singular_values(const ComplexMatrix &m);

/// Schatten 1-norm (sum of singular values).
double trace_norm(const ComplexMatrix &m);
/// Largest singular value.
double operator_norm(const ComplexMatrix &m);

/// Square root of a positive semidefinite matrix; eigenvalues below
/// `clamp * max(1, lambda_max)` are set to zero.
HermitianMatrix psd_sqrt(const HermitianMatrix &m, double clamp = 1e-13);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
RealMatrix kron(const RealMatrix &a, const RealMatrix &b);

enum class Subsystem { First, Second };

/// Traces out `which` from an operator on C^d1 (x) C^d2.
ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t d1, std::size_t d2, Subsystem which);
ComplexMatrix partial_transpose(const ComplexMatrix &m, std::size_t d1, std::size_t d2, Subsystem which);

/// tr(A^dagger B).
Complex inner_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Lower Cholesky factor of a symmetric positive definite matrix, or nullopt
/// when a pivot is not positive.
std::optional<RealMatrix> cholesky(const RealMatrix &m);
/// Solves L x = b in place (L lower triangular).
void solve_lower(const RealMatrix &l, std::span<double> b);
/// Solves L^T x = b in place.
void solve_lower_transpose(const RealMatrix &l, std::span<double> b);
struct RealSvd {
    std::vector<double> values;  // descending
    RealMatrix u;
    RealMatrix v;  // a = u diag(values) v^T
};

/// One-sided (Hestenes) Jacobi SVD of a square real matrix. Small singular
/// values keep high relative accuracy, which the interior-point scaling
/// relies on near convergence.
RealSvd svd_jacobi(const RealMatrix &a);

/// Inverse of a lower triangular matrix.
RealMatrix invert_lower(const RealMatrix &l);

/// Solves A x = b for square complex A by partial-pivot LU. Throws
/// InvalidArgument when A is numerically singular.
ComplexMatrix lu_solve(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace usynth

#endif  // USYNTH_LINALG_HPP_
