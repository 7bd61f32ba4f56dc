#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matsketch/linalg.hpp"

namespace matsketch::synthetic {

// G1 (m x k) G2^T (k x n) / sqrt(k) plus noise * N(0,1) entries.
Matrix lowrank(int m, int n, int k, double noise, std::uint64_t seed);

struct Blobs {
    Matrix data;
    std::vector<int> labels;
    int informative = 0;
};

// k Gaussian blobs of unit variance; centers are sep * N(0,1) in the first
// `informative` = max(k, n/10) coordinates and zero in the rest.
Blobs blobs(int m, int n, int k, double sep, std::uint64_t seed);

struct Regression {
    Matrix A;
    Vector b;
    Vector x_true;
};

// A with N(0,1) entries, x_true with entries of both signs, b = A x_true + noise * N(0,1).
Regression regression(int m, int n, double noise, std::uint64_t seed);

// Parses "lowrank:m,n,k,noise", "blobs:m,n,k,sep", "lowerbound:n,alpha" or
// "regression:m,n,noise".
struct Spec {
    std::string kind;
    std::vector<double> params;
};
Spec parse_spec(const std::string& text);

}  // namespace matsketch::synthetic
