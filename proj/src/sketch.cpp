#include "matsketch/sketch.hpp"

#include <cmath>

namespace matsketch {

using rng::CounterRng;
using rng::Stream;

Matrix gaussian_matrix(int rows, int cols, std::uint64_t seed) {
    if (rows < 0 || cols < 1) throw ArgumentError("gaussian_matrix: bad dimensions");
    CounterRng g(seed, Stream::gaussian);
    Matrix R(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            R(i, j) = g.normal(static_cast<std::uint64_t>(i) * cols + j);
    return R;
}

Matrix sign_matrix(int rows, int cols, std::uint64_t seed) {
    if (rows < 0 || cols < 1) throw ArgumentError("sign_matrix: bad dimensions");
    CounterRng g(seed, Stream::sign);
    const double v = 1.0 / std::sqrt(static_cast<double>(cols));
    Matrix R(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            R(i, j) = v * g.sign(static_cast<std::uint64_t>(i) * cols + j);
    return R;
}

Matrix gaussian_sketch(const Matrix& A, int r, std::uint64_t seed) {
    if (r < 1) throw ArgumentError("gaussian_sketch: r must be >= 1");
    require_finite(A, "gaussian_sketch");
    return A * gaussian_matrix(static_cast<int>(A.cols()), r, seed);
}

Matrix sign_sketch(const Matrix& A, int r, std::uint64_t seed) {
    if (r < 1) throw ArgumentError("sign_sketch: r must be >= 1");
    require_finite(A, "sign_sketch");
    return A * sign_matrix(static_cast<int>(A.cols()), r, seed);
}

std::size_t next_pow2(std::size_t m) {
    std::size_t p = 1;
    while (p < m) p <<= 1;
    return p;
}

void fwht_normalized(double* x, std::size_t n) {
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double a = x[j];
                const double b = x[j + h];
                x[j] = a + b;
                x[j + h] = a - b;
            }
        }
    }
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) x[i] *= s;
}

Matrix SrhtOperator::mix(const Matrix& A) const {
    if (A.rows() != input_dim) throw ArgumentError("srht: row count does not match operator");
    Matrix P = Matrix::Zero(padded_dim, A.cols());
    P.topRows(input_dim) = signs.head(input_dim).asDiagonal() * A;
    for (Eigen::Index j = 0; j < P.cols(); ++j) fwht_normalized(P.col(j).data(), padded_dim);
    return P;
}

Matrix SrhtOperator::apply(const Matrix& A) const {
    Matrix P = mix(A);
    Matrix out(output_dim, A.cols());
    for (int i = 0; i < output_dim; ++i) out.row(i) = scale * P.row(rows[i]);
    return out;
}

SamplingPlan SrhtOperator::plan() const {
    SamplingPlan p;
    p.source_dim = padded_dim;
    p.with_replacement = true;
    for (int i : rows) p.picks.push_back({i, scale});
    return p;
}

SrhtOperator make_srht(int input_dim, int r, std::uint64_t seed, bool allow_oversized) {
    if (input_dim < 1) throw ArgumentError("srht: input dimension must be >= 1");
    if (r < 1) throw ArgumentError("srht: r must be >= 1");
    SrhtOperator op;
    op.input_dim = input_dim;
    op.padded_dim = static_cast<int>(next_pow2(static_cast<std::size_t>(input_dim)));
    if (r > op.padded_dim && !allow_oversized)
        throw ArgumentError("srht: r = " + std::to_string(r) + " exceeds padded dimension " +
                            std::to_string(op.padded_dim));
    op.output_dim = r;
    op.seed = seed;
    op.scale = std::sqrt(static_cast<double>(op.padded_dim) / r);
    CounterRng sg(seed, Stream::srht_signs);
    op.signs.resize(op.padded_dim);
    for (int i = 0; i < op.padded_dim; ++i) op.signs(i) = sg.sign(static_cast<std::uint64_t>(i));
    CounterRng rg(seed, Stream::srht_rows);
    op.rows.reserve(r);
    for (int i = 0; i < r; ++i) op.rows.push_back(static_cast<int>(rg.next_below(op.padded_dim)));
    return op;
}

SrhtRows srht_rows(const Matrix& A, const std::optional<Vector>& b, int r, std::uint64_t seed,
                   bool allow_oversized) {
    require_finite(A, "srht_rows");
    if (b && b->size() != A.rows()) throw ArgumentError("srht_rows: b length does not match A rows");
    SrhtRows out;
    out.op = make_srht(static_cast<int>(A.rows()), r, seed, allow_oversized);
    if (b) {
        Matrix Y(A.rows(), A.cols() + 1);
        Y << A, *b;
        Matrix S = out.op.apply(Y);
        out.rows = S.leftCols(A.cols());
        out.b_rows = S.col(A.cols());
    } else {
        out.rows = out.op.apply(A);
    }
    out.plan = out.op.plan();
    return out;
}

}  // namespace matsketch
