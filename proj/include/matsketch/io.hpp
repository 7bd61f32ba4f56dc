#pragma once

#include <string>

#include "matsketch/linalg.hpp"

namespace matsketch {

enum class MatrixFormat { automatic, matrixmarket, csv };

MatrixFormat parse_format(const std::string& name);

// MatrixMarket "array" or "coordinate" real/integer general, or headerless CSV.
Matrix load_matrix(const std::string& path, MatrixFormat format = MatrixFormat::automatic);
Matrix parse_matrix(const std::string& text, MatrixFormat format);

// Writes with 17 significant digits so that loading reproduces the values exactly.
void save_matrix(const std::string& path, const Matrix& A, MatrixFormat format = MatrixFormat::automatic);
std::string format_matrix(const Matrix& A, MatrixFormat format);

}  // namespace matsketch
