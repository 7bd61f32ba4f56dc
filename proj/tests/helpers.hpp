#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "matsketch/linalg.hpp"

// Test-side data generation uses the standard library engine, independent
// of the toolkit's own generator.
namespace th {

using matsketch::Matrix;
using matsketch::Vector;

inline Matrix randn(int m, int n, std::mt19937_64& g) {
    std::normal_distribution<double> d;
    Matrix A(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) A(i, j) = d(g);
    return A;
}

inline Matrix orthonormal(int n, int k, std::mt19937_64& g) {
    Eigen::HouseholderQR<Matrix> qr(randn(n, k, g));
    return qr.householderQ() * Matrix::Identity(n, k);
}

// U diag(sigma) V^T with random orthonormal factors.
inline Matrix with_spectrum(int m, int n, const std::vector<double>& sigma, std::mt19937_64& g) {
    const int r = static_cast<int>(sigma.size());
    Vector s(r);
    for (int i = 0; i < r; ++i) s(i) = sigma[i];
    return orthonormal(m, r, g) * s.asDiagonal() * orthonormal(n, r, g).transpose();
}

inline Matrix lowrank_plus_noise(int m, int n, int k, double noise, std::mt19937_64& g) {
    return randn(m, k, g) * randn(k, n, g) + noise * randn(m, n, g);
}

// Singular values by the eigenvalues of the Gram matrix: an independent route.
inline Vector singular_values_gram(const Matrix& A) {
    const Matrix G = A.cols() <= A.rows() ? Matrix(A.transpose() * A) : Matrix(A * A.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(G);
    Vector ev = es.eigenvalues().reverse();
    for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = std::sqrt(std::max(ev(i), 0.0));
    return ev;
}

inline double sigma_k(const Matrix& A, int k) {
    Eigen::JacobiSVD<Matrix> s(A);
    return s.singularValues()(k - 1);
}

inline double norm2(const Matrix& A) {
    if (A.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> s(A);
    return s.singularValues()(0);
}

// Frobenius residual of projecting A onto span(C), by normal equations on an
// orthonormal basis from a full-pivoting QR.
inline double proj_residual_fro(const Matrix& C, const Matrix& A) {
    Eigen::ColPivHouseholderQR<Matrix> qr(C);
    const int rank = static_cast<int>(qr.rank());
    Matrix Q = qr.householderQ() * Matrix::Identity(C.rows(), rank);
    return (A - Q * (Q.transpose() * A)).norm();
}

inline Matrix columns(const Matrix& A, const std::vector<int>& idx) {
    Matrix C(A.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) C.col(j) = A.col(idx[j]);
    return C;
}

}  // namespace th
