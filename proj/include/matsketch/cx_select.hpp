#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matsketch/linalg.hpp"

namespace matsketch {

enum class CxSpectralMode { deterministic, fast };
enum class CxFrobeniusMode { deterministic, fast, relative };
enum class CsspMode { spectral, frobenius, two_stage };

struct CxResult {
    SamplingPlan plan;
    Matrix C;
    // ||A - Pi_{C,k}(A)||: Frobenius is exact, spectral is the sqrt(2)-approximate estimate.
    double rank_k_error_spectral = 0.0;
    double rank_k_error_frobenius = 0.0;
    // ||A - C C^+ A||.
    double cc_plus_error_spectral = 0.0;
    double cc_plus_error_frobenius = 0.0;
    std::string norm;        // "spectral" or "frobenius": the norm of the guarantee
    double baseline_sigma = 0.0;  // ||A - A_k|| in the norm of the guarantee
    double error = 0.0;      // the measured error the bound refers to
    double bound_constant = 0.0;
    double bound_value = 0.0;
    // per_instance, expectation, expectation_squared or probability
    std::string bound_kind;
    std::string bound_formula;
    double estimator_slack = 1.0;
    std::vector<std::string> warnings;
    // error / baseline_sigma; 0 when both vanish, +inf when only the baseline does.
    double ratio = 0.0;
};

CxResult cx_spectral(const Matrix& A, int k, int r, CxSpectralMode mode, std::uint64_t seed = 0);
CxResult cx_frobenius(const Matrix& A, int k, int r, CxFrobeniusMode mode, std::uint64_t seed = 0);
CxResult cssp(const Matrix& A, int k, CsspMode mode, double delta, std::uint64_t seed);

struct Interpolative {
    Matrix C;  // m x k, columns of A
    Matrix X;  // k x n, X(:, plan.picks[i].index) = e_i
    SamplingPlan plan;
};

Interpolative interpolative_decomposition(const Matrix& A, int k, std::uint64_t seed);

// (n+1) x n matrix with columns e_1 + alpha e_{j+1}.
Matrix lower_bound_instance(int n, double alpha);

// Fills the error fields of `res` for the column matrix C.
void measure_cx(const Matrix& A, int k, CxResult& res);

}  // namespace matsketch
