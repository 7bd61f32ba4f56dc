#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "matsketch/errors.hpp"
#include "matsketch/rng.hpp"

namespace matsketch {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct Tolerances {
    double relative = 1e-8;
    double rank_epsilon = 2.2e-16;
};
// Process-wide tolerance settings.
Tolerances& tolerances();

void require_finite(const Matrix& A, const char* what);

struct SvdFactors {
    Matrix U;      // m x rank
    Vector sigma;  // descending, length rank
    Matrix V;      // n x rank
    int rank = 0;
};

// Thin SVD truncated at the numerical rank: sigma_i > sigma_1 * max(m,n) * eps.
SvdFactors svd(const Matrix& A);
// All min(m,n) singular values, descending, without truncation.
Vector singular_values(const Matrix& A);
int numerical_rank(const Matrix& A);
double spectral_norm(const Matrix& A);
double sigma_min(const Matrix& A);  // smallest of the min(m,n) singular values
Matrix pseudo_inverse(const Matrix& A);
// Orthonormal basis of the column space (left singular vectors).
Matrix orth(const Matrix& C);
// A - C C^+ A.
Matrix residual_after_projection(const Matrix& C, const Matrix& A);
// Best rank-k approximation A_k.
Matrix truncate_rank(const Matrix& A, int k);
// ||A - A_k|| in the spectral (sigma_{k+1}) and Frobenius norms.
double tail_spectral(const Vector& sigma, int k);
double tail_frobenius(const Vector& sigma, int k);

struct Pick {
    int index;
    double weight;
    bool operator==(const Pick&) const = default;
};

// Omega and S together: pick t contributes weight_t * (column index_t).
struct SamplingPlan {
    int source_dim = 0;
    std::vector<Pick> picks;
    bool with_replacement = false;

    int size() const { return static_cast<int>(picks.size()); }
    std::vector<int> indices() const;
    void validate() const;
    bool operator==(const SamplingPlan&) const = default;
};

Matrix apply_plan_columns(const Matrix& A, const SamplingPlan& plan);
Matrix apply_plan_rows(const Matrix& A, const SamplingPlan& plan);
Vector apply_plan_rows(const Vector& b, const SamplingPlan& plan);
// Same picks with every weight set to one.
SamplingPlan unit_weights(SamplingPlan plan);

struct SubspaceApprox {
    Matrix approx;  // Q (Q^T A)_k
    Matrix Z;       // right singular vectors of (Q^T A)_k, n x min(k, rank)
};

SubspaceApprox best_rank_k_in_subspace(const Matrix& A, const Matrix& C, int k);

template <class T>
struct Boosted {
    T result;
    int trial = 0;
    double score = 0.0;
    std::uint64_t seed = 0;
};

// Runs `run(seed_t)` for t = 0..trials-1 with seed_t derived from base_seed
// and keeps the lowest score. Ties go to the lowest trial index.
template <class Run, class Score>
auto boost_best(int trials, std::uint64_t base_seed, Run&& run, Score&& score)
    -> Boosted<decltype(run(std::uint64_t{}))> {
    if (trials < 1) throw ArgumentError("boost_best: trials must be >= 1");
    using T = decltype(run(std::uint64_t{}));
    Boosted<T> best{};
    bool have = false;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = rng::derive_seed(base_seed, rng::Stream::trial, t);
        T out = run(s);
        const double sc = score(out);
        if (!have || sc < best.score) {
            best = Boosted<T>{std::move(out), t, sc, s};
            have = true;
        }
    }
    return best;
}

}  // namespace matsketch
