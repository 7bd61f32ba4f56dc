#include "matsketch/oracles.hpp"

#include <cmath>
#include <string>

namespace matsketch {

double binomial(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    double c = 1.0;
    for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return std::round(c);
}

namespace {

template <class F>
void for_each_subset(int n, int r, F&& f) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Matrix columns(const Matrix& A, const std::vector<int>& idx) {
    Matrix C(A.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) C.col(j) = A.col(idx[j]);
    return C;
}

}  // namespace

std::vector<SubsetError> subset_errors_exhaustive(const Matrix& A, int k, int r, OracleNorm norm, OracleMode mode) {
    require_finite(A, "subset_errors_exhaustive");
    const int n = static_cast<int>(A.cols());
    if (r < 1 || r > n) throw ArgumentError("subset oracle: need 1 <= r <= n");
    if (mode == OracleMode::pi_ck && (k < 1 || k > r)) throw ArgumentError("subset oracle: need 1 <= k <= r");
    const double count = binomial(n, r);
    if (count > 1e6)
        throw RefusalError("subset oracle: C(" + std::to_string(n) + "," + std::to_string(r) + ") exceeds 1e6");
    std::vector<SubsetError> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_subset(n, r, [&](const std::vector<int>& idx) {
        const Matrix C = columns(A, idx);
        const Matrix E = mode == OracleMode::cc_plus ? residual_after_projection(C, A)
                                                     : Matrix(A - best_rank_k_in_subspace(A, C, k).approx);
        out.push_back({idx, norm == OracleNorm::spectral ? spectral_norm(E) : E.norm()});
    });
    return out;
}

SubsetError best_subset_exhaustive(const Matrix& A, int k, int r, OracleNorm norm, OracleMode mode) {
    std::vector<SubsetError> all = subset_errors_exhaustive(A, k, r, norm, mode);
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].error < all[best].error) best = i;
    return all[best];
}

std::vector<SubsetProbability> volume_probabilities_exhaustive(const Matrix& A, int k) {
    require_finite(A, "volume_probabilities_exhaustive");
    const int n = static_cast<int>(A.cols());
    if (k < 1 || k > n) throw ArgumentError("volume oracle: need 1 <= k <= n");
    if (binomial(n, k) > 1e5)
        throw RefusalError("volume oracle: C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 1e5");
    std::vector<SubsetProbability> out;
    double total = 0.0;
    for_each_subset(n, k, [&](const std::vector<int>& idx) {
        const Matrix C = columns(A, idx);
        const double d = std::max(0.0, (C.transpose() * C).determinant());
        out.push_back({idx, d});
        total += d;
    });
    if (!(total > 0.0)) throw RankError("volume oracle: every k-subset is rank deficient");
    for (auto& p : out) p.probability /= total;
    return out;
}

}  // namespace matsketch
