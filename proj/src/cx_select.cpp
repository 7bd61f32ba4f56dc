#include "matsketch/cx_select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "matsketch/approx_svd.hpp"
#include "matsketch/samplers.hpp"

namespace matsketch {

namespace {

struct Spectrum {
    Vector sigma;
    int rank = 0;
};

Spectrum spectrum_with_rank_check(const Matrix& A, int k, const char* what) {
    require_finite(A, what);
    if (k < 1) throw ArgumentError(std::string(what) + ": k must be >= 1");
    Spectrum s;
    s.sigma = singular_values(A);
    const double cut = s.sigma.size() ? s.sigma(0) * std::max(A.rows(), A.cols()) * tolerances().rank_epsilon : 0.0;
    while (s.rank < s.sigma.size() && s.sigma(s.rank) > cut) ++s.rank;
    if (k > s.rank)
        throw RankError(std::string(what) + ": k = " + std::to_string(k) + " exceeds rank(A) = " +
                        std::to_string(s.rank));
    return s;
}

void finish(const Matrix& A, int k, const Spectrum& sp, const std::string& norm, bool exact_k, CxResult& res) {
    measure_cx(A, k, res);
    res.norm = norm;
    if (norm == "spectral") {
        res.baseline_sigma = tail_spectral(sp.sigma, k);
        res.error = exact_k ? res.cc_plus_error_spectral : res.rank_k_error_spectral;
    } else {
        res.baseline_sigma = tail_frobenius(sp.sigma, k);
        res.error = exact_k ? res.cc_plus_error_frobenius : res.rank_k_error_frobenius;
    }
    res.bound_value = res.bound_constant * res.estimator_slack * res.baseline_sigma;
    const double scale = sp.sigma.size() ? sp.sigma(0) : 0.0;
    if (res.baseline_sigma > 1e-12 * scale)
        res.ratio = res.error / res.baseline_sigma;
    else
        res.ratio = res.error <= 1e-9 * std::max(scale, 1.0) ? 0.0 : std::numeric_limits<double>::infinity();
}

void check_r(int k, int r, Eigen::Index n, const char* what) {
    if (r <= k) throw ArgumentError(std::string(what) + ": r must exceed k");
    if (r > n) throw ArgumentError(std::string(what) + ": r must not exceed n");
}

}  // namespace

void measure_cx(const Matrix& A, int k, CxResult& res) {
    const SubspaceApprox sa = best_rank_k_in_subspace(A, res.C, std::min<int>(k, static_cast<int>(res.C.cols())));
    const Matrix E = A - sa.approx;
    res.rank_k_error_frobenius = E.norm();
    res.rank_k_error_spectral = spectral_norm(E);
    const Matrix R = residual_after_projection(res.C, A);
    res.cc_plus_error_frobenius = R.norm();
    res.cc_plus_error_spectral = spectral_norm(R);
}

CxResult cx_spectral(const Matrix& A, int k, int r, CxSpectralMode mode, std::uint64_t seed) {
    const Spectrum sp = spectrum_with_rank_check(A, k, "cx_spectral");
    check_r(k, r, A.cols(), "cx_spectral");
    const double sk = std::sqrt(static_cast<double>(k) / r);
    CxResult res;
    if (mode == CxSpectralMode::deterministic) {
        const SvdFactors f = svd(A);
        const Matrix Vk = f.V.leftCols(k);
        const Matrix Vrest = f.V.rightCols(f.rank - k);
        res.plan = barrier_dual_spectral(Vk, Vrest, r);
        res.bound_constant = 1.0 + (1.0 + std::sqrt(static_cast<double>(f.rank - k) / r)) / (1.0 - sk);
        res.bound_kind = "per_instance";
        res.bound_formula = "sqrt(2) * (1 + (1 + sqrt((rho-k)/r)) / (1 - sqrt(k/r))) * sigma_{k+1}";
        res.estimator_slack = std::numbers::sqrt2;
    } else {
        if (k < 2) throw ArgumentError("cx_spectral: fast mode needs k >= 2");
        const ApproxBasis Z = fast_spectral_svd(A, k, 1.0, seed);
        res.plan = barrier_identity(Z.Z, r);
        res.bound_constant =
            (std::numbers::sqrt2 + 1.0) *
            (1.0 + (1.0 + std::sqrt(static_cast<double>(A.cols()) / r)) / (1.0 - sk));
        res.bound_kind = "expectation";
        res.bound_formula = "(sqrt(2) + 1) * (1 + (1 + sqrt(n/r)) / (1 - sqrt(k/r))) * sigma_{k+1}";
    }
    res.C = apply_plan_columns(A, res.plan);
    finish(A, k, sp, "spectral", false, res);
    return res;
}

CxResult cx_frobenius(const Matrix& A, int k, int r, CxFrobeniusMode mode, std::uint64_t seed) {
    const Spectrum sp = spectrum_with_rank_check(A, k, "cx_frobenius");
    CxResult res;
    if (mode == CxFrobeniusMode::relative) {
        if (r < 4 * k + 1) throw ArgumentError("cx_frobenius: relative mode needs r >= 4k + 1");
        if (4 * k > A.cols()) throw ArgumentError("cx_frobenius: relative mode needs 4k <= n");
        if (r <= 10 * k) res.warnings.push_back("r <= 10k: outside the stated hypothesis r > 10k");
        const ApproxBasis Z = fast_frobenius_svd(A, k, 0.1, seed);
        const Matrix E = residual_of_basis(A, Z.Z);
        const SamplingPlan p1 = unit_weights(barrier_dual_frobenius(Z.Z, E, 4 * k));
        const Matrix AO = apply_plan_columns(A, p1);
        const AdaptivePlan p2 = adaptive_sampling(A, AO, r - 4 * k, rng::derive_seed(seed, rng::Stream::adaptive, 0));
        if (p2.degenerate) res.warnings.push_back("adaptive stage degenerate: first stage spans A");
        res.plan = SamplingPlan{static_cast<int>(A.cols()), p2.plan.picks, true};
        res.plan.picks.insert(res.plan.picks.end(), p1.picks.begin(), p1.picks.end());
        const double c2 = 1.0 + 6.0 * k / (r - 4.0 * k);
        res.bound_constant = std::sqrt(c2);
        res.bound_kind = "expectation";
        res.bound_formula = "E||A - Pi_F||_F^2 <= (1 + 6k/(r-4k)) ||A - A_k||_F^2";
    } else {
        check_r(k, r, A.cols(), "cx_frobenius");
        const double sk = std::sqrt(static_cast<double>(k) / r);
        const double g = 1.0 / ((1.0 - sk) * (1.0 - sk));
        if (mode == CxFrobeniusMode::deterministic) {
            const SvdFactors f = svd(A);
            const Matrix Vk = f.V.leftCols(k);
            res.plan = barrier_dual_frobenius(Vk, residual_of_basis(A, Vk), r);
            res.bound_constant = std::sqrt(1.0 + g);
            res.bound_kind = "per_instance";
            res.bound_formula = "sqrt(1 + 1/(1 - sqrt(k/r))^2) * ||A - A_k||_F";
        } else {
            const ApproxBasis Z = fast_frobenius_svd(A, k, 0.1, seed);
            res.plan = barrier_dual_frobenius(Z.Z, residual_of_basis(A, Z.Z), r);
            res.bound_constant = std::sqrt(1.1 + 1.1 * g);
            res.bound_kind = "expectation";
            res.bound_formula = "sqrt(1.1 + 1.1/(1 - sqrt(k/r))^2) * ||A - A_k||_F";
        }
    }
    res.C = apply_plan_columns(A, res.plan);
    finish(A, k, sp, "frobenius", false, res);
    return res;
}

CxResult cssp(const Matrix& A, int k, CsspMode mode, double delta, std::uint64_t seed) {
    const Spectrum sp = spectrum_with_rank_check(A, k, "cssp");
    const int n = static_cast<int>(A.cols());
    if (mode != CsspMode::two_stage && k < 2) throw ArgumentError("cssp: k must be >= 2");
    CxResult res;
    std::string norm = "frobenius";
    if (mode == CsspMode::spectral) {
        const ApproxBasis Z = fast_spectral_svd(A, k, 0.5, seed);
        res.plan = rrqr_select(Z.Z, 2.0);
        res.bound_constant = 4.0 * std::sqrt(4.0 * k * (n - k) + 1.0);
        res.bound_kind = "expectation";
        res.bound_formula = "4 * sqrt(4k(n-k) + 1) * sigma_{k+1}";
        norm = "spectral";
    } else if (mode == CsspMode::frobenius) {
        if (4 * k > n) throw ArgumentError("cssp: frobenius mode needs 4k <= n");
        const ApproxBasis Z = fast_frobenius_svd(A, k, 0.5, seed);
        const SamplingPlan p1 = barrier_dual_frobenius(Z.Z, residual_of_basis(A, Z.Z), 4 * k);
        const Matrix X = apply_plan_rows(Z.Z, p1);
        const SamplingPlan p2 = rrqr_select(X, 2.0);
        res.plan = SamplingPlan{n, {}, false};
        for (const Pick& p : p2.picks) res.plan.picks.push_back({p1.picks[p.index].index, 1.0});
        res.bound_constant = 9.0 * k;
        res.bound_kind = "expectation";
        res.bound_formula = "9k * ||A - A_k||_F";
    } else {
        if (!(delta > 0.0 && delta < 1.0)) throw ArgumentError("cssp: delta must lie in (0, 1)");
        const ApproxBasis Z = fast_frobenius_svd(A, k, 0.5, seed);
        const int r1 = static_cast<int>(std::ceil(8.0 * k * std::log(2.0 * k / delta)));
        const SamplingPlan p1 = subspace_sampling(Z.Z, 1.0, r1, rng::derive_seed(seed, rng::Stream::subspace, 0));
        // Repeated picks are parallel rows; merging them keeps X^T X unchanged.
        std::map<int, double> merged;
        for (const Pick& p : p1.picks) merged[p.index] += p.weight * p.weight;
        if (static_cast<int>(merged.size()) < k)
            throw NumericError("cssp: sampling stage kept fewer than k distinct columns");
        std::vector<int> idx;
        Matrix X(static_cast<Eigen::Index>(merged.size()), k);
        for (const auto& [i, w2] : merged) {
            X.row(static_cast<Eigen::Index>(idx.size())) = std::sqrt(w2) * Z.Z.row(i);
            idx.push_back(i);
        }
        if (numerical_rank(X) < k) throw NumericError("cssp: sampled rows do not span the basis");
        const SamplingPlan p2 = rrqr_select(X, 2.0);
        res.plan = SamplingPlan{n, {}, false};
        for (const Pick& p : p2.picks) res.plan.picks.push_back({idx[p.index], 1.0});
        res.bound_constant = 26.0 * k * std::sqrt(std::log(2.0 * k / delta)) / delta;
        res.bound_kind = "probability";
        res.bound_formula = "w.p. 1 - 3 delta: 26k sqrt(ln(2k/delta)) / delta * ||A - A_k||_F";
    }
    std::sort(res.plan.picks.begin(), res.plan.picks.end(),
              [](const Pick& a, const Pick& b) { return a.index < b.index; });
    res.C = apply_plan_columns(A, res.plan);
    finish(A, k, sp, norm, true, res);
    return res;
}

Interpolative interpolative_decomposition(const Matrix& A, int k, std::uint64_t seed) {
    require_finite(A, "interpolative_decomposition");
    if (k < 2 || k > std::min(A.rows(), A.cols()))
        throw ArgumentError("interpolative_decomposition: need 2 <= k <= min(m, n)");
    const ApproxBasis Z = fast_spectral_svd(A, k, 0.5, seed);
    Interpolative out;
    out.plan = rrqr_select(Z.Z, 2.0);
    Matrix ZS(k, k);
    for (int i = 0; i < k; ++i) ZS.col(i) = Z.Z.row(out.plan.picks[i].index).transpose();
    out.X = Eigen::PartialPivLU<Matrix>(ZS).solve(Matrix(Z.Z.transpose()));
    // These columns equal I_k in exact arithmetic.
    for (int i = 0; i < k; ++i) {
        out.X.col(out.plan.picks[i].index).setZero();
        out.X(i, out.plan.picks[i].index) = 1.0;
    }
    out.C = apply_plan_columns(A, out.plan);
    return out;
}

Matrix lower_bound_instance(int n, double alpha) {
    if (n < 2) throw ArgumentError("lower_bound_instance: n must be >= 2");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ArgumentError("lower_bound_instance: alpha must be positive");
    Matrix A = Matrix::Zero(n + 1, n);
    for (int j = 0; j < n; ++j) {
        A(0, j) = 1.0;
        A(j + 1, j) = alpha;
    }
    return A;
}

}  // namespace matsketch
