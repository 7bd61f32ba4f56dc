#pragma once

#include <cstdint>
#include <optional>

#include "matsketch/linalg.hpp"

namespace matsketch {

// rows x cols matrix of i.i.d. N(0,1); entry (i,j) uses counter i*cols + j.
Matrix gaussian_matrix(int rows, int cols, std::uint64_t seed);
// rows x cols matrix of i.i.d. +-1/sqrt(cols).
Matrix sign_matrix(int rows, int cols, std::uint64_t seed);

Matrix gaussian_sketch(const Matrix& A, int r, std::uint64_t seed);
Matrix sign_sketch(const Matrix& A, int r, std::uint64_t seed);

std::size_t next_pow2(std::size_t m);

// In-place normalized Walsh-Hadamard transform of a length-2^p vector.
void fwht_normalized(double* x, std::size_t n);

struct SrhtOperator {
    int input_dim = 0;
    int padded_dim = 0;
    int output_dim = 0;
    std::uint64_t seed = 0;
    Vector signs;           // D, length padded_dim
    std::vector<int> rows;  // sampled rows of H D, length output_dim
    double scale = 1.0;     // sqrt(padded_dim / output_dim)

    // H D (A zero-padded), padded_dim x A.cols(). Orthogonal map.
    Matrix mix(const Matrix& A) const;
    // Theta A: sampled, rescaled rows of H D A.
    Matrix apply(const Matrix& A) const;
    SamplingPlan plan() const;
};

// allow_oversized lifts the r <= padded_dim check; rows are drawn with
// replacement either way.
SrhtOperator make_srht(int input_dim, int r, std::uint64_t seed, bool allow_oversized = false);

struct SrhtRows {
    Matrix rows;                  // Theta A
    std::optional<Vector> b_rows; // Theta b
    SamplingPlan plan;            // picks over the rows of H D A
    SrhtOperator op;
};

SrhtRows srht_rows(const Matrix& A, const std::optional<Vector>& b, int r, std::uint64_t seed,
                   bool allow_oversized = false);

}  // namespace matsketch
