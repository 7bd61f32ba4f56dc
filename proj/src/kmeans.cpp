#include "matsketch/kmeans.hpp"

#include <cmath>
#include <limits>

#include "matsketch/approx_svd.hpp"
#include "matsketch/samplers.hpp"
#include "matsketch/sketch.hpp"

namespace matsketch {

using rng::CounterRng;
using rng::Stream;

ClusterAssignment make_assignment(std::vector<int> labels, int k) {
    if (k < 1) throw ArgumentError("cluster assignment: k must be >= 1");
    ClusterAssignment a;
    a.k = k;
    a.sizes.assign(k, 0);
    for (int l : labels) {
        if (l < 0 || l >= k) throw ArgumentError("cluster assignment: label out of range");
        ++a.sizes[l];
    }
    for (int s : a.sizes)
        if (s == 0) throw ArgumentError("cluster assignment: empty cluster");
    a.labels = std::move(labels);
    return a;
}

Matrix indicator_matrix(const ClusterAssignment& a) {
    Matrix X = Matrix::Zero(static_cast<Eigen::Index>(a.labels.size()), a.k);
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        X(i, a.labels[i]) = 1.0 / std::sqrt(static_cast<double>(a.sizes[a.labels[i]]));
    return X;
}

namespace {

void check(const Matrix& A, const ClusterAssignment& a) {
    if (static_cast<Eigen::Index>(a.labels.size()) != A.rows())
        throw ArgumentError("kmeans: label count must equal rows of A");
    for (int s : a.sizes)
        if (s == 0) throw ArgumentError("kmeans: empty cluster");
}

Matrix centroids(const Matrix& A, const std::vector<int>& labels, int k, std::vector<int>& sizes) {
    Matrix M = Matrix::Zero(k, A.cols());
    sizes.assign(k, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        M.row(labels[i]) += A.row(i);
        ++sizes[labels[i]];
    }
    for (int j = 0; j < k; ++j)
        if (sizes[j] > 0) M.row(j) /= sizes[j];
    return M;
}

struct Run {
    std::vector<int> labels;
    double cost;
};

Run lloyd_once(const Matrix& A, int k, std::uint64_t seed, const LloydOptions& opt) {
    const int m = static_cast<int>(A.rows());
    CounterRng g(seed, Stream::kmeanspp);
    Matrix M(k, A.cols());
    Vector d2 = Vector::Constant(m, std::numeric_limits<double>::infinity());
    int first = static_cast<int>(g.next_below(m));
    M.row(0) = A.row(first);
    for (int c = 1; c < k; ++c) {
        for (int i = 0; i < m; ++i) d2(i) = std::min(d2(i), (A.row(i) - M.row(c - 1)).squaredNorm());
        std::vector<double> w(d2.data(), d2.data() + m);
        double total = 0.0;
        for (double v : w) total += v;
        int pick;
        if (total > 0.0)
            pick = rng::sample_categorical(w, 1, g)[0];
        else
            pick = static_cast<int>(g.next_below(m));
        M.row(c) = A.row(pick);
    }

    std::vector<int> labels(m, 0), sizes;
    double prev = std::numeric_limits<double>::infinity();
    double cost = prev;
    for (int it = 0; it < opt.max_iter; ++it) {
        cost = 0.0;
        for (int i = 0; i < m; ++i) {
            double best = std::numeric_limits<double>::infinity();
            int bj = 0;
            for (int j = 0; j < k; ++j) {
                const double d = (A.row(i) - M.row(j)).squaredNorm();
                if (d < best) {
                    best = d;
                    bj = j;
                }
            }
            labels[i] = bj;
            cost += best;
        }
        M = centroids(A, labels, k, sizes);
        // Refill empty clusters with the point farthest from its centroid.
        for (int j = 0; j < k; ++j) {
            if (sizes[j] > 0) continue;
            int far = 0;
            double fd = -1.0;
            for (int i = 0; i < m; ++i) {
                if (sizes[labels[i]] <= 1) continue;
                const double d = (A.row(i) - M.row(labels[i])).squaredNorm();
                if (d > fd) {
                    fd = d;
                    far = i;
                }
            }
            --sizes[labels[far]];
            labels[far] = j;
            sizes[j] = 1;
            M = centroids(A, labels, k, sizes);
            prev = std::numeric_limits<double>::infinity();
        }
        if (std::isfinite(prev) && prev - cost <= opt.rel_tol * std::max(prev, std::numeric_limits<double>::min()))
            break;
        prev = cost;
    }
    Run r;
    r.labels = std::move(labels);
    r.cost = kmeans_cost_centroid(A, make_assignment(r.labels, k));
    return r;
}

}  // namespace

double kmeans_cost(const Matrix& A, const ClusterAssignment& a) {
    check(A, a);
    const Matrix X = indicator_matrix(a);
    return (A - X * (X.transpose() * A)).squaredNorm();
}

double kmeans_cost_centroid(const Matrix& A, const ClusterAssignment& a) {
    check(A, a);
    std::vector<int> sizes;
    const Matrix M = centroids(A, a.labels, a.k, sizes);
    double cost = 0.0;
    for (Eigen::Index i = 0; i < A.rows(); ++i) cost += (A.row(i) - M.row(a.labels[i])).squaredNorm();
    return cost;
}

ClusterAssignment lloyd(const Matrix& A, int k, int restarts, std::uint64_t seed, const LloydOptions& opt) {
    require_finite(A, "lloyd");
    if (k < 1 || k > A.rows()) throw ArgumentError("lloyd: need 1 <= k <= m");
    if (restarts < 1) throw ArgumentError("lloyd: restarts must be >= 1");
    Run best{{}, std::numeric_limits<double>::infinity()};
    for (int t = 0; t < restarts; ++t) {
        Run r = lloyd_once(A, k, rng::derive_seed(seed, Stream::restart, t), opt);
        if (r.cost < best.cost) best = std::move(r);
    }
    return make_assignment(std::move(best.labels), k);
}

int reduce_width(ReduceMethod method, int k, double eps, double c0) {
    switch (method) {
        case ReduceMethod::select:
            return static_cast<int>(std::ceil(c0 * 4.0 * k * std::log(200.0 * k) / (eps * eps)));
        case ReduceMethod::rp:
            return static_cast<int>(std::ceil(c0 * k / (eps * eps) - 1e-9));
        case ReduceMethod::svd:
            return k;
    }
    return k;
}

FeatureReduction reduce_features(const Matrix& A, int k, double eps, ReduceMethod method, double c0,
                                 std::uint64_t seed) {
    require_finite(A, "reduce_features");
    if (k < 2 || k >= std::min(A.rows(), A.cols())) throw ArgumentError("reduce_features: need 2 <= k < min(m, n)");
    if (!(c0 > 0.0)) throw ArgumentError("reduce_features: c0 must be positive");
    const bool eps_ok = method == ReduceMethod::svd ? (eps > 0.0 && eps < 1.0) : (eps > 0.0 && eps <= 1.0 / 3.0 + 1e-12);
    if (!eps_ok) throw ArgumentError("reduce_features: eps out of range");
    FeatureReduction out;
    out.method = method;
    out.r = reduce_width(method, k, eps, c0);
    if (method != ReduceMethod::svd && out.r >= A.cols())
        throw ArgumentError("reduce_features: reduction wider than input (r = " + std::to_string(out.r) +
                            ", n = " + std::to_string(A.cols()) + ")");
    switch (method) {
        case ReduceMethod::select: {
            const ApproxBasis Z = fast_frobenius_svd(A, k, eps, seed);
            out.plan = subspace_sampling(Z.Z, 1.0, out.r, rng::derive_seed(seed, Stream::subspace, 0));
            out.C = apply_plan_columns(A, *out.plan);
            break;
        }
        case ReduceMethod::rp:
            out.C = sign_sketch(A, out.r, seed);
            break;
        case ReduceMethod::svd: {
            const ApproxBasis Z = fast_frobenius_svd(A, k, eps, seed);
            out.C = A * Z.Z;
            break;
        }
    }
    return out;
}

}  // namespace matsketch
