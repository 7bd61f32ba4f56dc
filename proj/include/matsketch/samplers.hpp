#pragma once

#include <cstdint>
#include <vector>

#include "matsketch/linalg.hpp"

namespace matsketch {

// i.i.d. columns with p_i = ||a_i||^2 / ||A||_F^2, unit weights.
SamplingPlan additive_sampling(const Matrix& A, int r, std::uint64_t seed);

struct AdaptivePlan {
    SamplingPlan plan;
    // C1 already spans A; the plan repeats the largest column of A.
    bool degenerate = false;
};

// i.i.d. columns with p_i proportional to the residual ||b_i||^2, B = A - C1 C1^+ A.
AdaptivePlan adaptive_sampling(const Matrix& A, const Matrix& C1, int s, std::uint64_t seed);

// i.i.d. rows of X (n x k) with p_i = beta ||x_i||^2/||X||_F^2 + (1-beta)/n,
// weight 1/sqrt(p_i r).
SamplingPlan subspace_sampling(const Matrix& X, double beta, int r, std::uint64_t seed);

// Strong rank-revealing selection of k rows of X (n x k): |W_ij| <= f for
// W = (X_S^T)^{-1} X_rest^T, hence sigma_k(X_S) >= sigma_k(X)/sqrt(f^2 k (n-k) + 1).
// Unit weights, indices ascending.
SamplingPlan rrqr_select(const Matrix& X, double f = 2.0);

struct RrqrStats {
    int swaps = 0;
    double max_w = 0.0;  // max |W_ij| at termination
};
SamplingPlan rrqr_select(const Matrix& X, double f, RrqrStats* stats);

struct BarrierOptions {
    // Permit r > n. The guarantees do not depend on r <= n; the plan still
    // holds at most n distinct picks.
    bool allow_oversized = false;
    double feasibility_tol = 1e-9;
    // Record one BarrierStep per iteration.
    bool trace = false;
};

struct BarrierStep {
    int tau;
    int index;
    double L_tau, U_tau;
    double L_val, U_val;
    double phi_lower;   // phi_(L_tau, A_tau) before the update
    double phi_upper;   // phibar(U_tau, B_tau) before the update (0 in Frobenius mode)
    double lambda_min;  // of A_tau before the update
    double lambda_max;  // of B_tau before the update, or the trace sum in Frobenius mode
};

struct BarrierResult {
    SamplingPlan plan;
    std::vector<double> raw_weights;  // s before the final rescale, length n
    double delta_L = 1.0;
    double delta_U = 0.0;
    std::vector<BarrierStep> steps;
};

// sigma_k(V^T Omega S) >= 1 - sqrt(k/r) and ||U^T Omega S||_2 <= 1 + sqrt(l/r).
BarrierResult barrier_dual_spectral_run(const Matrix& V, const Matrix& U, int r,
                                        const BarrierOptions& opt = {});
// Same with U = I_n, using a diagonal accumulator.
BarrierResult barrier_identity_run(const Matrix& V, int r, const BarrierOptions& opt = {});
// sigma_k(V^T Omega S) >= 1 - sqrt(k/r) and ||A_cols Omega S||_F <= ||A_cols||_F.
BarrierResult barrier_dual_frobenius_run(const Matrix& V, const Matrix& A_cols, int r,
                                         const BarrierOptions& opt = {});

SamplingPlan barrier_dual_spectral(const Matrix& V, const Matrix& U, int r, const BarrierOptions& opt = {});
SamplingPlan barrier_identity(const Matrix& V, int r, const BarrierOptions& opt = {});
SamplingPlan barrier_dual_frobenius(const Matrix& V, const Matrix& A_cols, int r,
                                    const BarrierOptions& opt = {});
SamplingPlan barrier_single(const Matrix& V, int r, const BarrierOptions& opt = {});

enum class BarrierMode { spectral, frobenius };

// For arbitrary X (n x k) and Y: spectral mode takes Y as n x l and runs on the
// left singular vectors of both; Frobenius mode takes Y as l x n.
SamplingPlan barrier_dual_general(const Matrix& X, const Matrix& Y, int r, BarrierMode mode,
                                  const BarrierOptions& opt = {});

}  // namespace matsketch
