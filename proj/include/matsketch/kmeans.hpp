#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matsketch/linalg.hpp"

namespace matsketch {

struct ClusterAssignment {
    std::vector<int> labels;
    std::vector<int> sizes;
    int k = 0;
};

// Validates labels in [0, k) and that no cluster is empty.
ClusterAssignment make_assignment(std::vector<int> labels, int k);

// m x k with X_ij = 1/sqrt(s_j) when point i is in cluster j.
Matrix indicator_matrix(const ClusterAssignment& a);

// ||A - X X^T A||_F^2.
double kmeans_cost(const Matrix& A, const ClusterAssignment& a);
// sum_i ||p_i - mu(p_i)||^2.
double kmeans_cost_centroid(const Matrix& A, const ClusterAssignment& a);

struct LloydOptions {
    int max_iter = 300;
    double rel_tol = 1e-9;
};

// k-means++ seeding and Lloyd iterations; best of `restarts`.
ClusterAssignment lloyd(const Matrix& A, int k, int restarts, std::uint64_t seed, const LloydOptions& opt = {});

enum class ReduceMethod { select, rp, svd };

struct FeatureReduction {
    Matrix C;                          // m x r
    std::optional<SamplingPlan> plan;  // select
    int r = 0;
    ReduceMethod method = ReduceMethod::svd;
};

int reduce_width(ReduceMethod method, int k, double eps, double c0);

FeatureReduction reduce_features(const Matrix& A, int k, double eps, ReduceMethod method, double c0,
                                 std::uint64_t seed);

}  // namespace matsketch
