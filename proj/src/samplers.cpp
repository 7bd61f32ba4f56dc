#include "matsketch/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace matsketch {

using rng::CounterRng;
using rng::Stream;

namespace {

std::vector<double> row_norms2(const Matrix& X) {
    std::vector<double> w(X.rows());
    for (Eigen::Index i = 0; i < X.rows(); ++i) w[i] = X.row(i).squaredNorm();
    return w;
}

std::vector<double> col_norms2(const Matrix& X) {
    std::vector<double> w(X.cols());
    for (Eigen::Index j = 0; j < X.cols(); ++j) w[j] = X.col(j).squaredNorm();
    return w;
}

bool is_orthonormal(const Matrix& V, double tol) {
    if (V.cols() == 0) return true;
    Matrix G = V.transpose() * V;
    G.diagonal().array() -= 1.0;
    return G.cwiseAbs().maxCoeff() <= tol;
}

constexpr double kOrthoTol = 1e-8;

enum class Upper { dense, identity, frobenius };

struct BarrierInput {
    const Matrix* V = nullptr;
    Upper kind = Upper::dense;
    const Matrix* U = nullptr;      // dense
    bool same_as_V = false;         // dense with U == V: B equals A throughout
    std::vector<double> a2;         // frobenius column norms squared
};

BarrierResult run_barrier(const BarrierInput& in, int r, const BarrierOptions& opt) {
    const Matrix& V = *in.V;
    const int n = static_cast<int>(V.rows());
    const int k = static_cast<int>(V.cols());
    require_finite(V, "barrier");
    if (k < 1) throw ArgumentError("barrier: V must have at least one column");
    if (r <= k) throw ArgumentError("barrier: r = " + std::to_string(r) + " must exceed k = " + std::to_string(k));
    if (r > n && !opt.allow_oversized)
        throw ArgumentError("barrier: r = " + std::to_string(r) + " exceeds n = " + std::to_string(n));
    if (!is_orthonormal(V, kOrthoTol)) throw ArgumentError("barrier: V must have orthonormal columns");

    int ell = 0;
    if (in.kind == Upper::dense) {
        const Matrix& U = *in.U;
        require_finite(U, "barrier");
        if (U.rows() != n) throw ArgumentError("barrier: U and V must have the same number of rows");
        if (!is_orthonormal(U, kOrthoTol)) throw ArgumentError("barrier: U must have orthonormal columns");
        ell = static_cast<int>(U.cols());
    } else if (in.kind == Upper::identity) {
        ell = n;
    }

    const double rr = r;
    const double sk = std::sqrt(k / rr);
    BarrierResult res;
    res.delta_L = 1.0;
    double a_total = 0.0;
    if (in.kind == Upper::frobenius) {
        for (double v : in.a2) a_total += v;
        res.delta_U = a_total / (1.0 - sk);
    } else {
        res.delta_U = (1.0 + std::sqrt(ell / rr)) / (1.0 - sk);
    }
    const double dU = res.delta_U;
    const double sqrt_rk = std::sqrt(rr * k);
    const double sqrt_lr = std::sqrt(static_cast<double>(ell) * rr);

    std::vector<double> s(n, 0.0);
    Matrix A = Matrix::Zero(k, k);
    Matrix B = Matrix::Zero(ell > 0 && in.kind == Upper::dense ? ell : 0, ell > 0 && in.kind == Upper::dense ? ell : 0);
    Eigen::SelfAdjointEigenSolver<Matrix> eigA, eigB;
    std::vector<double> Lv(n), Uv(n);
    double trace_acc = 0.0;

    for (int tau = 0; tau < r; ++tau) {
        const double Lt = tau - sqrt_rk;
        const double Lp = Lt + res.delta_L;
        const double Ut = in.kind == Upper::frobenius ? tau * dU : dU * (tau + sqrt_lr);
        const double Up = Ut + dU;

        eigA.compute(A);
        const Vector lam = eigA.eigenvalues();
        const Matrix W = V * eigA.eigenvectors();
        double phiL = 0.0, phiLp = 0.0;
        for (int i = 0; i < k; ++i) {
            phiL += 1.0 / (lam(i) - Lt);
            phiLp += 1.0 / (lam(i) - Lp);
        }
        const double denomL = phiLp - phiL;
        Vector inv1(k), inv2(k);
        for (int i = 0; i < k; ++i) {
            inv1(i) = 1.0 / (lam(i) - Lp);
            inv2(i) = inv1(i) * inv1(i);
        }
        for (int j = 0; j < n; ++j) {
            double q1 = 0.0, q2 = 0.0;
            for (int i = 0; i < k; ++i) {
                const double w2 = W(j, i) * W(j, i);
                q1 += w2 * inv1(i);
                q2 += w2 * inv2(i);
            }
            Lv[j] = q2 / denomL - q1;
        }

        double phiU = 0.0;
        double lam_max = 0.0;
        if (in.kind == Upper::dense && ell > 0) {
            Vector mu;
            Matrix X;
            if (in.same_as_V) {
                mu = lam;
                X = W;
            } else {
                eigB.compute(B);
                mu = eigB.eigenvalues();
                X = *in.U * eigB.eigenvectors();
            }
            lam_max = mu(mu.size() - 1);
            double phiUp = 0.0;
            Vector j1(ell), j2(ell);
            for (int i = 0; i < ell; ++i) {
                phiU += 1.0 / (Ut - mu(i));
                phiUp += 1.0 / (Up - mu(i));
                j1(i) = 1.0 / (Up - mu(i));
                j2(i) = j1(i) * j1(i);
            }
            const double denomU = phiU - phiUp;
            for (int j = 0; j < n; ++j) {
                double q1 = 0.0, q2 = 0.0;
                for (int i = 0; i < ell; ++i) {
                    const double x2 = X(j, i) * X(j, i);
                    q1 += x2 * j1(i);
                    q2 += x2 * j2(i);
                }
                Uv[j] = q2 / denomU + q1;
            }
        } else if (in.kind == Upper::identity) {
            double phiUp = 0.0;
            for (int j = 0; j < n; ++j) {
                phiU += 1.0 / (Ut - s[j]);
                phiUp += 1.0 / (Up - s[j]);
                lam_max = std::max(lam_max, s[j]);
            }
            const double denomU = phiU - phiUp;
            for (int j = 0; j < n; ++j) {
                const double g = 1.0 / (Up - s[j]);
                Uv[j] = g * g / denomU + g;
            }
        } else if (in.kind == Upper::frobenius) {
            lam_max = trace_acc;
            for (int j = 0; j < n; ++j) Uv[j] = dU > 0.0 ? in.a2[j] / dU : 0.0;
        } else {
            std::fill(Uv.begin(), Uv.end(), 0.0);
        }

        int pick = -1;
        double margin = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            margin = std::max(margin, Lv[j] - Uv[j]);
            if (Lv[j] > 0.0 && Uv[j] <= Lv[j] + opt.feasibility_tol * std::max(1.0, std::abs(Lv[j]))) {
                pick = j;
                break;
            }
        }
        if (pick < 0)
            throw InfeasibleError("barrier: no admissible index at step " + std::to_string(tau), tau, margin);

        const double t = 2.0 / (Uv[pick] + Lv[pick]);
        if (opt.trace)
            res.steps.push_back({tau, pick, Lt, Ut, Lv[pick], Uv[pick], phiL, phiU, lam(0), lam_max});
        s[pick] += t;
        A.noalias() += t * V.row(pick).transpose() * V.row(pick);
        if (in.kind == Upper::dense && ell > 0 && !in.same_as_V)
            B.noalias() += t * in.U->row(pick).transpose() * in.U->row(pick);
        if (in.kind == Upper::frobenius) trace_acc += t * in.a2[pick];
    }

    const double scale = (1.0 - sk) / rr;
    res.raw_weights = s;
    res.plan.source_dim = n;
    res.plan.with_replacement = false;
    for (int j = 0; j < n; ++j)
        if (s[j] > 0.0) res.plan.picks.push_back({j, std::sqrt(s[j] * scale)});
    return res;
}

}  // namespace

SamplingPlan additive_sampling(const Matrix& A, int r, std::uint64_t seed) {
    require_finite(A, "additive_sampling");
    if (r < 1 || r > A.cols()) throw ArgumentError("additive_sampling: need 1 <= r <= n");
    std::vector<double> w = col_norms2(A);
    double total = 0.0;
    for (double v : w) total += v;
    if (!(total > 0.0)) throw ArgumentError("additive_sampling: A is the zero matrix");
    CounterRng g(seed, Stream::additive);
    SamplingPlan plan{static_cast<int>(A.cols()), {}, true};
    for (int i : rng::sample_categorical(w, r, g)) plan.picks.push_back({i, 1.0});
    return plan;
}

AdaptivePlan adaptive_sampling(const Matrix& A, const Matrix& C1, int s, std::uint64_t seed) {
    require_finite(A, "adaptive_sampling");
    if (s < 1) throw ArgumentError("adaptive_sampling: s must be >= 1");
    if (C1.rows() != A.rows()) throw ArgumentError("adaptive_sampling: C1 and A row counts differ");
    const double normA = A.norm();
    if (!(normA > 0.0)) throw ArgumentError("adaptive_sampling: A is the zero matrix");
    const Matrix B = C1.cols() > 0 ? residual_after_projection(C1, A) : A;
    AdaptivePlan out;
    out.plan = SamplingPlan{static_cast<int>(A.cols()), {}, true};
    const double tiny = 1e-12 * normA * static_cast<double>(std::max(A.rows(), A.cols()));
    if (B.norm() <= tiny) {
        Eigen::Index best;
        A.colwise().squaredNorm().maxCoeff(&best);
        out.degenerate = true;
        for (int t = 0; t < s; ++t) out.plan.picks.push_back({static_cast<int>(best), 1.0});
        return out;
    }
    CounterRng g(seed, Stream::adaptive);
    for (int i : rng::sample_categorical(col_norms2(B), s, g)) out.plan.picks.push_back({i, 1.0});
    return out;
}

SamplingPlan subspace_sampling(const Matrix& X, double beta, int r, std::uint64_t seed) {
    require_finite(X, "subspace_sampling");
    if (r < 1) throw ArgumentError("subspace_sampling: r must be >= 1");
    if (!(beta > 0.0 && beta <= 1.0)) throw ArgumentError("subspace_sampling: beta must lie in (0, 1]");
    const int n = static_cast<int>(X.rows());
    std::vector<double> p = row_norms2(X);
    double total = 0.0;
    for (double v : p) total += v;
    if (!(total > 0.0)) throw ArgumentError("subspace_sampling: X is the zero matrix");
    for (double& v : p) v = beta * v / total + (1.0 - beta) / n;
    CounterRng g(seed, Stream::subspace);
    SamplingPlan plan{n, {}, true};
    for (int i : rng::sample_categorical(p, r, g)) plan.picks.push_back({i, 1.0 / std::sqrt(p[i] * r)});
    return plan;
}

SamplingPlan rrqr_select(const Matrix& X, double f) { return rrqr_select(X, f, nullptr); }

SamplingPlan rrqr_select(const Matrix& X, double f, RrqrStats* stats) {
    require_finite(X, "rrqr_select");
    const int n = static_cast<int>(X.rows());
    const int k = static_cast<int>(X.cols());
    if (!(f > 1.0)) throw ArgumentError("rrqr_select: f must exceed 1");
    if (k < 1 || n < k) throw ArgumentError("rrqr_select: need 1 <= k <= n");
    if (numerical_rank(X) < k) throw RankError("rrqr_select: X has rank below k");

    const Matrix M = X.transpose();
    Eigen::ColPivHouseholderQR<Matrix> qr(M);
    const auto& perm = qr.colsPermutation().indices();
    std::vector<int> S(perm.data(), perm.data() + k);
    std::vector<char> inS(n, 0);
    for (int j : S) inS[j] = 1;

    const int cap = static_cast<int>(std::ceil(k * std::log(static_cast<double>(n)) / std::log(f))) + 10 * k;
    int swaps = 0;
    double maxw = 0.0;
    for (;;) {
        Matrix MS(k, k);
        for (int i = 0; i < k; ++i) MS.col(i) = M.col(S[i]);
        Eigen::PartialPivLU<Matrix> lu(MS);
        const Matrix W = lu.solve(M);
        maxw = 0.0;
        int bi = -1, bj = -1;
        for (int j = 0; j < n; ++j) {
            if (inS[j]) continue;
            for (int i = 0; i < k; ++i) {
                const double a = std::abs(W(i, j));
                if (a > maxw) {
                    maxw = a;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (!std::isfinite(maxw)) throw NumericError("rrqr_select: singular pivot block");
        if (maxw <= f) break;
        if (++swaps > cap) throw InternalError("rrqr_select: swap count exceeded " + std::to_string(cap));
        inS[S[bi]] = 0;
        inS[bj] = 1;
        S[bi] = bj;
    }
    if (stats) *stats = {swaps, maxw};
    std::sort(S.begin(), S.end());
    SamplingPlan plan{n, {}, false};
    for (int j : S) plan.picks.push_back({j, 1.0});
    return plan;
}

BarrierResult barrier_dual_spectral_run(const Matrix& V, const Matrix& U, int r, const BarrierOptions& opt) {
    BarrierInput in;
    in.V = &V;
    in.kind = Upper::dense;
    in.U = &U;
    in.same_as_V = (&U == &V) || (U.rows() == V.rows() && U.cols() == V.cols() && U == V);
    return run_barrier(in, r, opt);
}

BarrierResult barrier_identity_run(const Matrix& V, int r, const BarrierOptions& opt) {
    BarrierInput in;
    in.V = &V;
    in.kind = Upper::identity;
    return run_barrier(in, r, opt);
}

BarrierResult barrier_dual_frobenius_run(const Matrix& V, const Matrix& A_cols, int r, const BarrierOptions& opt) {
    require_finite(A_cols, "barrier_dual_frobenius");
    if (A_cols.cols() != V.rows())
        throw ArgumentError("barrier_dual_frobenius: A_cols must have as many columns as V has rows");
    BarrierInput in;
    in.V = &V;
    in.kind = Upper::frobenius;
    in.a2 = col_norms2(A_cols);
    return run_barrier(in, r, opt);
}

SamplingPlan barrier_dual_spectral(const Matrix& V, const Matrix& U, int r, const BarrierOptions& opt) {
    return barrier_dual_spectral_run(V, U, r, opt).plan;
}

SamplingPlan barrier_identity(const Matrix& V, int r, const BarrierOptions& opt) {
    return barrier_identity_run(V, r, opt).plan;
}

SamplingPlan barrier_dual_frobenius(const Matrix& V, const Matrix& A_cols, int r, const BarrierOptions& opt) {
    return barrier_dual_frobenius_run(V, A_cols, r, opt).plan;
}

SamplingPlan barrier_single(const Matrix& V, int r, const BarrierOptions& opt) {
    return barrier_dual_spectral(V, V, r, opt);
}

SamplingPlan barrier_dual_general(const Matrix& X, const Matrix& Y, int r, BarrierMode mode,
                                  const BarrierOptions& opt) {
    require_finite(X, "barrier_dual_general");
    require_finite(Y, "barrier_dual_general");
    const Matrix UX = is_orthonormal(X, 1e-10) ? X : svd(X).U;
    if (UX.cols() == 0) throw RankError("barrier_dual_general: X is zero");
    if (mode == BarrierMode::spectral) {
        if (Y.rows() != X.rows()) throw ArgumentError("barrier_dual_general: Y must be n x l in spectral mode");
        const Matrix UY = is_orthonormal(Y, 1e-10) ? Y : svd(Y).U;
        return barrier_dual_spectral(UX, UY, r, opt);
    }
    return barrier_dual_frobenius(UX, Y, r, opt);
}

}  // namespace matsketch
