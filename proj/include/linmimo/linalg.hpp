// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace linmimo {

using cplx = std::complex<double>;

/// Dense column-major complex matrix.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static CMatrix identity(int n);
    /// Row-major nested initializer, for small literal matrices in tests and examples.
    static CMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return data_[std::size_t(c) * rows_ + r]; }
    const cplx& operator()(int r, int c) const { return data_[std::size_t(c) * rows_ + r]; }

    std::span<cplx> col(int c) { return {data_.data() + std::size_t(c) * rows_, std::size_t(rows_)}; }
    std::span<const cplx> col(int c) const {
        return {data_.data() + std::size_t(c) * rows_, std::size_t(rows_)};
    }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    void resize(int rows, int cols);

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

/// out = h^H h (M x M, both triangles filled).
void gram(const CMatrix& h, CMatrix& out);

/// out = I + scale * g.
void shifted_identity(const CMatrix& g, double scale, CMatrix& out);

double frobenius_norm(const CMatrix& a);

/// In-place lower Cholesky factor of a Hermitian positive-definite matrix.
/// Only the lower triangle is read and written. Returns false if a pivot is
/// not strictly positive.
bool cholesky_lower(CMatrix& a);

/// Diagonal of A^{-1} given the lower Cholesky factor of A.
/// `scratch` must hold at least A.rows() entries.
void cholesky_inverse_diagonal(const CMatrix& chol, std::span<double> out, std::span<cplx> scratch);

/// log det A from its lower Cholesky factor.
double cholesky_log_det(const CMatrix& chol);

/// Eigenvalues of a Hermitian matrix, ascending. Reuses its buffers across calls.
class HermitianEigenSolver {
  public:
    explicit HermitianEigenSolver(int n);
    ~HermitianEigenSolver();
    HermitianEigenSolver(HermitianEigenSolver&&) noexcept;
    HermitianEigenSolver& operator=(HermitianEigenSolver&&) noexcept;

    void eigenvalues(const CMatrix& a, std::span<double> out);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace linmimo
