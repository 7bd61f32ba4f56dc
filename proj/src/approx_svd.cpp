#include "matsketch/approx_svd.hpp"

#include <cmath>
#include <numbers>

#include "matsketch/sketch.hpp"

namespace matsketch {

namespace {

void check_common(const Matrix& A, int k, double eps, const char* what, int kmin, bool closed = false) {
    require_finite(A, what);
    if (k < kmin || k > std::min(A.rows(), A.cols()))
        throw ArgumentError(std::string(what) + ": k = " + std::to_string(k) + " out of range");
    if (!(eps > 0.0 && (eps < 1.0 || (closed && eps == 1.0))))
        throw ArgumentError(std::string(what) + (closed ? ": eps must lie in (0, 1]" : ": eps must lie in (0, 1)"));
}

ApproxBasis finish(const Matrix& A, const Matrix& Y, int k, const char* what) {
    SubspaceApprox sa = best_rank_k_in_subspace(A, Y, k);
    if (sa.Z.cols() < k) throw RankError(std::string(what) + ": k exceeds the numerical rank of A");
    ApproxBasis b;
    b.Z = std::move(sa.Z);
    b.k = k;
    return b;
}

Matrix thin_q(const Matrix& Y) {
    Eigen::HouseholderQR<Matrix> qr(Y);
    return qr.householderQ() * Matrix::Identity(Y.rows(), Y.cols());
}

}  // namespace

Matrix residual_of_basis(const Matrix& A, const Matrix& Z) {
    return A - (A * Z) * Z.transpose();
}

ApproxBasis fast_frobenius_svd(const Matrix& A, int k, double eps, std::uint64_t seed) {
    check_common(A, k, eps, "fast_frobenius_svd", 1);
    const int p = static_cast<int>(std::ceil(k / eps + 1.0));
    const Matrix Y = gaussian_sketch(A, k + p, seed);
    ApproxBasis b = finish(A, Y, k, "fast_frobenius_svd");
    b.seed = seed;
    b.method = "fast_frobenius_svd";
    b.oversampling = p;
    b.power = 0;
    return b;
}

int spectral_power_exponent(int m, int n, int k, int p, double eps) {
    if (p < 2) throw ArgumentError("spectral_power_exponent: p must be >= 2");
    const double base = 1.0 + std::sqrt(static_cast<double>(k) / (p - 1)) +
                        std::numbers::e * std::sqrt(static_cast<double>(k + p)) / p *
                            std::sqrt(static_cast<double>(std::max(std::min(m, n) - k, 0)));
    const double target = 1.0 + eps / std::numbers::sqrt2;
    int q = 0;
    while (std::pow(base, 1.0 / (2 * q + 1)) > target) ++q;
    return q;
}

ApproxBasis fast_spectral_svd(const Matrix& A, int k, double eps, std::uint64_t seed) {
    check_common(A, k, eps, "fast_spectral_svd", 2, true);
    const int p = k;
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    const int q = spectral_power_exponent(m, n, k, p, eps);
    Matrix Y = gaussian_sketch(A, k + p, seed);
    for (int i = 0; i < q; ++i) {
        const Matrix Q = thin_q(Y);
        Y = A * (A.transpose() * Q);
    }
    ApproxBasis b = finish(A, Y, k, "fast_spectral_svd");
    b.seed = seed;
    b.method = "fast_spectral_svd";
    b.oversampling = p;
    b.power = q;
    return b;
}

long srht_lowrank_width(int n, int k, double eps) {
    const double r = 200.0 * k * std::log(40.0 * k) * std::log(40.0 * k * n) / eps;
    return static_cast<long>(std::ceil(r));
}

SrhtLowRank srht_lowrank(const Matrix& A, int k, double eps, std::uint64_t seed, bool allow_oversized) {
    require_finite(A, "srht_lowrank");
    const int n = static_cast<int>(A.cols());
    if (k < 1 || k >= std::min(A.rows(), A.cols())) throw ArgumentError("srht_lowrank: k out of range");
    if (!(eps > 0.0 && eps < 0.5)) throw ArgumentError("srht_lowrank: eps must lie in (0, 1/2)");
    const long r = srht_lowrank_width(n, k, eps);
    if (r > n && !allow_oversized)
        throw ArgumentError("srht_lowrank: sketch wider than input (r = " + std::to_string(r) +
                            ", n = " + std::to_string(n) + ")");
    const Matrix At = A.transpose();
    const SrhtOperator op = make_srht(n, static_cast<int>(r), seed, true);
    // Repeated rows of Theta give repeated columns of A Theta^T; the span
    // only needs each distinct row once.
    const Matrix HDAt = op.mix(At);
    std::vector<char> seen(op.padded_dim, 0);
    std::vector<int> distinct;
    for (int i : op.rows)
        if (!seen[i]) {
            seen[i] = 1;
            distinct.push_back(i);
        }
    Matrix C(A.rows(), static_cast<Eigen::Index>(distinct.size()));
    for (std::size_t j = 0; j < distinct.size(); ++j) C.col(j) = op.scale * HDAt.row(distinct[j]).transpose();
    if (C.cols() < k) {
        const Eigen::Index had = C.cols();
        C.conservativeResize(Eigen::NoChange, k);
        C.rightCols(k - had).setZero();
    }
    SrhtLowRank out;
    out.approx = best_rank_k_in_subspace(A, C, k).approx;
    out.r = static_cast<int>(r);
    return out;
}

}  // namespace matsketch
