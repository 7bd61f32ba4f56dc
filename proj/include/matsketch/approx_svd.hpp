#pragma once

#include <cstdint>
#include <string>

#include "matsketch/linalg.hpp"

namespace matsketch {

// A = (A Z) Z^T + E with Z^T Z = I_k and E Z = 0.
struct ApproxBasis {
    Matrix Z;
    int k = 0;
    std::uint64_t seed = 0;
    std::string method;
    int oversampling = 0;  // p
    int power = 0;         // q
};

// Gaussian range finder with p = ceil(k/eps + 1).
// E ||A - A Z Z^T||_F^2 <= (1 + eps) ||A - A_k||_F^2.
ApproxBasis fast_frobenius_svd(const Matrix& A, int k, double eps, std::uint64_t seed);

// Power iteration with p = k. E ||A - A Z Z^T||_2 <= (sqrt(2) + eps) ||A - A_k||_2.
ApproxBasis fast_spectral_svd(const Matrix& A, int k, double eps, std::uint64_t seed);

// Smallest q with (1 + sqrt(k/(p-1)) + e sqrt(k+p)/p sqrt(min(m,n)-k))^(1/(2q+1)) <= 1 + eps/sqrt(2).
int spectral_power_exponent(int m, int n, int k, int p, double eps);

// Sketch width ceil(200 k ln(40k) ln(40kn) / eps) used by srht_lowrank.
long srht_lowrank_width(int n, int k, double eps);

struct SrhtLowRank {
    Matrix approx;  // rank <= k
    int r = 0;
};

// Best rank-k approximation inside the span of C = A Theta^T.
SrhtLowRank srht_lowrank(const Matrix& A, int k, double eps, std::uint64_t seed, bool allow_oversized = false);

Matrix residual_of_basis(const Matrix& A, const Matrix& Z);  // A - A Z Z^T

}  // namespace matsketch
