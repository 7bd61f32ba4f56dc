#include "matsketch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace matsketch {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

void require_finite(const Matrix& A, const char* what) {
    if (!A.allFinite()) throw ArgumentError(std::string(what) + ": matrix has non-finite entries");
}

namespace {

template <class Solver>
void check_info(const Solver& s) {
    if (s.info() != Eigen::Success) throw NumericError("svd kernel failed to converge");
}

int cutoff_rank(const Vector& s, Eigen::Index m, Eigen::Index n) {
    if (s.size() == 0 || !(s(0) > 0.0)) return 0;
    const double cut = s(0) * static_cast<double>(std::max(m, n)) * tolerances().rank_epsilon;
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    return r;
}

}  // namespace

SvdFactors svd(const Matrix& A) {
    require_finite(A, "svd");
    SvdFactors f;
    if (A.size() == 0) {
        f.U = Matrix(A.rows(), 0);
        f.V = Matrix(A.cols(), 0);
        f.sigma = Vector(0);
        return f;
    }
    Eigen::BDCSVD<Matrix> solver(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    check_info(solver);
    const Vector& s = solver.singularValues();
    f.rank = cutoff_rank(s, A.rows(), A.cols());
    f.sigma = s.head(f.rank);
    f.U = solver.matrixU().leftCols(f.rank);
    f.V = solver.matrixV().leftCols(f.rank);
    return f;
}

Vector singular_values(const Matrix& A) {
    require_finite(A, "singular_values");
    if (A.size() == 0) return Vector(0);
    Eigen::BDCSVD<Matrix> solver(A);
    check_info(solver);
    return solver.singularValues();
}

int numerical_rank(const Matrix& A) {
    return cutoff_rank(singular_values(A), A.rows(), A.cols());
}

double spectral_norm(const Matrix& A) {
    if (A.size() == 0) return 0.0;
    return singular_values(A)(0);
}

double sigma_min(const Matrix& A) {
    if (A.size() == 0) return 0.0;
    Vector s = singular_values(A);
    return s(s.size() - 1);
}

Matrix pseudo_inverse(const Matrix& A) {
    SvdFactors f = svd(A);
    return f.V * f.sigma.cwiseInverse().asDiagonal() * f.U.transpose();
}

Matrix orth(const Matrix& C) { return svd(C).U; }

Matrix residual_after_projection(const Matrix& C, const Matrix& A) {
    if (C.rows() != A.rows()) throw ArgumentError("residual_after_projection: row mismatch");
    Matrix Q = orth(C);
    return A - Q * (Q.transpose() * A);
}

Matrix truncate_rank(const Matrix& A, int k) {
    if (k < 0) throw ArgumentError("truncate_rank: k must be nonnegative");
    SvdFactors f = svd(A);
    const int kk = std::min(k, f.rank);
    return f.U.leftCols(kk) * f.sigma.head(kk).asDiagonal() * f.V.leftCols(kk).transpose();
}

double tail_spectral(const Vector& sigma, int k) {
    return k < sigma.size() ? sigma(k) : 0.0;
}

double tail_frobenius(const Vector& sigma, int k) {
    if (k >= sigma.size()) return 0.0;
    return sigma.tail(sigma.size() - k).norm();
}

std::vector<int> SamplingPlan::indices() const {
    std::vector<int> out;
    out.reserve(picks.size());
    for (const Pick& p : picks) out.push_back(p.index);
    return out;
}

void SamplingPlan::validate() const {
    std::vector<char> seen(static_cast<std::size_t>(std::max(source_dim, 0)), 0);
    for (const Pick& p : picks) {
        if (p.index < 0 || p.index >= source_dim)
            throw ArgumentError("sampling plan index " + std::to_string(p.index) + " out of range");
        if (!(p.weight > 0.0) || !std::isfinite(p.weight))
            throw ArgumentError("sampling plan weights must be positive and finite");
        if (!with_replacement) {
            if (seen[p.index]) throw ArgumentError("sampling plan repeats an index without replacement");
            seen[p.index] = 1;
        }
    }
}

Matrix apply_plan_columns(const Matrix& A, const SamplingPlan& plan) {
    if (plan.source_dim != A.cols())
        throw ArgumentError("apply_plan_columns: plan source_dim " + std::to_string(plan.source_dim) +
                            " != cols " + std::to_string(A.cols()));
    plan.validate();
    Matrix C(A.rows(), plan.size());
    for (int j = 0; j < plan.size(); ++j) C.col(j) = plan.picks[j].weight * A.col(plan.picks[j].index);
    return C;
}

Matrix apply_plan_rows(const Matrix& A, const SamplingPlan& plan) {
    if (plan.source_dim != A.rows())
        throw ArgumentError("apply_plan_rows: plan source_dim " + std::to_string(plan.source_dim) +
                            " != rows " + std::to_string(A.rows()));
    plan.validate();
    Matrix C(plan.size(), A.cols());
    for (int i = 0; i < plan.size(); ++i) C.row(i) = plan.picks[i].weight * A.row(plan.picks[i].index);
    return C;
}

Vector apply_plan_rows(const Vector& b, const SamplingPlan& plan) {
    Matrix B = b;
    return apply_plan_rows(B, plan).col(0);
}

SamplingPlan unit_weights(SamplingPlan plan) {
    for (Pick& p : plan.picks) p.weight = 1.0;
    return plan;
}

SubspaceApprox best_rank_k_in_subspace(const Matrix& A, const Matrix& C, int k) {
    if (k <= 0) throw ArgumentError("best_rank_k_in_subspace: k must be positive");
    if (C.rows() != A.rows()) throw ArgumentError("best_rank_k_in_subspace: C and A row counts differ");
    if (k > C.cols()) throw ArgumentError("best_rank_k_in_subspace: k exceeds the number of columns of C");
    require_finite(A, "best_rank_k_in_subspace");
    const Matrix Q = orth(C);
    const Matrix B = Q.transpose() * A;
    SvdFactors f = svd(B);
    const int kk = std::min(k, f.rank);
    SubspaceApprox out;
    out.Z = f.V.leftCols(kk);
    out.approx = Q * (f.U.leftCols(kk) * f.sigma.head(kk).asDiagonal()) * out.Z.transpose();
    return out;
}

}  // namespace matsketch
