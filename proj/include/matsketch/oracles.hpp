#pragma once

#include <vector>

#include "matsketch/linalg.hpp"

namespace matsketch {

enum class OracleNorm { spectral, frobenius };
// cc_plus: ||A - C C^+ A||; pi_ck: ||A - Pi_{C,k}(A)|| (spectral is the sqrt(2) estimate).
enum class OracleMode { cc_plus, pi_ck };

struct SubsetError {
    std::vector<int> indices;
    double error;
};

double binomial(int n, int r);

// Every r-subset of the columns, in lexicographic order. Refuses above 1e6 subsets.
std::vector<SubsetError> subset_errors_exhaustive(const Matrix& A, int k, int r, OracleNorm norm, OracleMode mode);
// Minimum over all r-subsets; ties go to the lexicographically first.
SubsetError best_subset_exhaustive(const Matrix& A, int k, int r, OracleNorm norm, OracleMode mode);

struct SubsetProbability {
    std::vector<int> indices;
    double probability;
};

// p_S proportional to det(C_S^T C_S) over all k-subsets. Refuses above 1e5 subsets.
std::vector<SubsetProbability> volume_probabilities_exhaustive(const Matrix& A, int k);

}  // namespace matsketch
