#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "matsketch/linalg.hpp"

namespace matsketch {

enum class Constraint { none, nonnegative };
enum class CoresetMethod { barrier, subspace, srht };

struct RegressionProblem {
    Matrix A;  // m x n, rank n
    Vector b;
    Constraint constraint = Constraint::none;

    // Throws unless m > n, dims agree, entries finite and rank(A) = n.
    void validate() const;
};

struct Coreset {
    SamplingPlan plan;  // over rows of A, or of H D A for srht
    Matrix C;
    Vector b_c;
    CoresetMethod method = CoresetMethod::barrier;
    double eps = 0.0;
    double delta = 0.0;
    long r_formula = 0;  // size given by the method's formula
    int k = 0;           // rank of [A, b]
    std::vector<std::string> warnings;
};

struct CoresetOptions {
    // Run even when the formula asks for more rows than the data has.
    bool allow_oversized = false;
};

long coreset_size(CoresetMethod method, int n, long m, double eps, double delta);

Coreset build_coreset(const RegressionProblem& p, double eps, CoresetMethod method, double delta, std::uint64_t seed,
                      const CoresetOptions& opt = {});

// Minimum-norm least squares or Lawson-Hanson NNLS.
Vector solve_ls(const Matrix& C, const Vector& b, Constraint constraint);

struct NnlsInfo {
    int cycles = 0;
    double kkt_residual = 0.0;  // max violation of the optimality conditions
};
Vector nnls(const Matrix& C, const Vector& b, NnlsInfo* info = nullptr);

// Other constraint sets plug in here; the shipped ones are none and nonnegative.
using Solver = std::function<Vector(const Matrix&, const Vector&)>;
Solver solver_for(Constraint c);

struct CoresetEvaluation {
    double full_residual2 = 0.0;     // ||A x_opt - b||^2
    double coreset_residual2 = 0.0;  // ||A x_tilde - b||^2
    double ratio = 1.0;              // +inf when only the full residual vanishes
    int rows = 0;
    int distinct_rows = 0;
    double full_seconds = 0.0;
    double coreset_seconds = 0.0;
    Vector x_opt, x_tilde;
};

CoresetEvaluation evaluate_coreset(const RegressionProblem& p, const Coreset& c);

}  // namespace matsketch
