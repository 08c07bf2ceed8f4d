// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/linalg.hpp"

#include <Eigen/Dense>
#include <cassert>
#include <cmath>

#include "linmimo/types.hpp"

namespace linmimo {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    CMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw InvalidArgument("ragged matrix literal");
        int j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

void CMatrix::resize(int rows, int cols) {
    rows_ = rows;
    cols_ = cols;
    data_.assign(std::size_t(rows) * cols, cplx{});
}

void gram(const CMatrix& h, CMatrix& out) {
    const int n = h.rows();
    const int m = h.cols();
    if (out.rows() != m || out.cols() != m) out.resize(m, m);
    for (int j = 0; j < m; ++j) {
        const cplx* hj = h.col(j).data();
        for (int i = j; i < m; ++i) {
            const cplx* hi = h.col(i).data();
            double re = 0.0;
            double im = 0.0;
            // conj(hi) . hj
            for (int k = 0; k < n; ++k) {
                re += hi[k].real() * hj[k].real() + hi[k].imag() * hj[k].imag();
                im += hi[k].real() * hj[k].imag() - hi[k].imag() * hj[k].real();
            }
            if (i == j) {
                out(i, i) = cplx(re, 0.0);
            } else {
                out(i, j) = cplx(re, im);
                out(j, i) = cplx(re, -im);
            }
        }
    }
}

void shifted_identity(const CMatrix& g, double scale, CMatrix& out) {
    const int m = g.rows();
    if (out.rows() != m || out.cols() != m) out.resize(m, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) out(i, j) = scale * g(i, j);
    for (int i = 0; i < m; ++i) out(i, i) += 1.0;
}

double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
    return std::sqrt(s);
}

bool cholesky_lower(CMatrix& a) {
    const int n = a.rows();
    for (int j = 0; j < n; ++j) {
        double d = a(j, j).real();
        for (int k = 0; k < j; ++k) d -= std::norm(a(j, k));
        if (!(d > 0.0)) return false;
        const double ljj = std::sqrt(d);
        a(j, j) = ljj;
        const double inv = 1.0 / ljj;
        for (int i = j + 1; i < n; ++i) {
            cplx s = a(i, j);
            for (int k = 0; k < j; ++k) s -= a(i, k) * std::conj(a(j, k));
            a(i, j) = s * inv;
        }
    }
    return true;
}

void cholesky_inverse_diagonal(const CMatrix& chol, std::span<double> out, std::span<cplx> scratch) {
    // A^{-1} = L^{-H} L^{-1}, so [A^{-1}]_kk is the squared norm of column k of L^{-1}.
    const int n = chol.rows();
    assert(static_cast<int>(out.size()) >= n && static_cast<int>(scratch.size()) >= n);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        const double xk = 1.0 / chol(k, k).real();
        scratch[k] = xk;
        acc += xk * xk;
        for (int i = k + 1; i < n; ++i) {
            cplx s = 0.0;
            for (int j = k; j < i; ++j) s += chol(i, j) * scratch[j];
            const cplx xi = -s / chol(i, i).real();
            scratch[i] = xi;
            acc += std::norm(xi);
        }
        out[k] = acc;
    }
}

double cholesky_log_det(const CMatrix& chol) {
    double s = 0.0;
    for (int i = 0; i < chol.rows(); ++i) s += std::log(chol(i, i).real());
    return 2.0 * s;
}

struct HermitianEigenSolver::Impl {
    explicit Impl(int n) : buffer(n, n), solver(n) {}
    Eigen::MatrixXcd buffer;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
};

HermitianEigenSolver::HermitianEigenSolver(int n) : impl_(std::make_unique<Impl>(n)) {}
HermitianEigenSolver::~HermitianEigenSolver() = default;
HermitianEigenSolver::HermitianEigenSolver(HermitianEigenSolver&&) noexcept = default;
HermitianEigenSolver& HermitianEigenSolver::operator=(HermitianEigenSolver&&) noexcept = default;

void HermitianEigenSolver::eigenvalues(const CMatrix& a, std::span<double> out) {
    const int n = a.rows();
    if (impl_->buffer.rows() != n) *impl_ = Impl(n);
    impl_->buffer = Eigen::Map<const Eigen::MatrixXcd>(a.data(), n, n);
    impl_->solver.compute(impl_->buffer, Eigen::EigenvaluesOnly);
    const auto& ev = impl_->solver.eigenvalues();
    for (int i = 0; i < n; ++i) out[i] = ev(i);
}

}  // namespace linmimo
