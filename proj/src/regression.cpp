#include "matsketch/regression.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <set>

#include "matsketch/samplers.hpp"
#include "matsketch/sketch.hpp"

namespace matsketch {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

void RegressionProblem::validate() const {
    require_finite(A, "regression");
    if (!b.allFinite()) throw ArgumentError("regression: b has non-finite entries");
    if (b.size() != A.rows()) throw ArgumentError("regression: b length must equal rows of A");
    if (A.rows() <= A.cols()) throw ArgumentError("regression: need more rows than columns");
    if (numerical_rank(A) != A.cols()) throw RankError("regression: A must have full column rank");
}

long coreset_size(CoresetMethod method, int n, long m, double eps, double delta) {
    const double n1 = n + 1.0;
    double r = 0.0;
    switch (method) {
        case CoresetMethod::barrier:
            r = 225.0 * n1 / (eps * eps);
            break;
        case CoresetMethod::subspace:
            r = 36.0 * n1 * std::log(2.0 * n1 / delta) / (eps * eps);
            break;
        case CoresetMethod::srht:
            r = 72.0 * n1 * std::log(2.0 * n1 / delta) * std::log(40.0 * n1 * m) / (eps * eps);
            break;
    }
    return static_cast<long>(std::ceil(r - 1e-9));
}

Coreset build_coreset(const RegressionProblem& p, double eps, CoresetMethod method, double delta, std::uint64_t seed,
                      const CoresetOptions& opt) {
    p.validate();
    if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("build_coreset: eps must lie in (0, 1)");
    if (method != CoresetMethod::barrier && !(delta > 0.0 && delta < 1.0))
        throw ArgumentError("build_coreset: delta must lie in (0, 1)");
    const int m = static_cast<int>(p.A.rows());
    const int n = static_cast<int>(p.A.cols());

    Coreset c;
    c.method = method;
    c.eps = eps;
    c.delta = method == CoresetMethod::barrier ? 0.0 : delta;
    if (eps > 1.0 / 3.0 + 1e-12) c.warnings.push_back("eps > 1/3: outside the hypothesis of the guarantee");
    c.r_formula = coreset_size(method, n, m, eps, delta);
    if (c.r_formula > m) {
        if (!opt.allow_oversized)
            throw ArgumentError("build_coreset: coreset larger than data (r = " + std::to_string(c.r_formula) +
                                ", m = " + std::to_string(m) + ")");
        c.warnings.push_back("coreset larger than data: r = " + std::to_string(c.r_formula) + " > m = " +
                             std::to_string(m));
    }
    if (c.r_formula > std::numeric_limits<int>::max() / 4) throw ArgumentError("build_coreset: r too large");
    const int r = static_cast<int>(c.r_formula);

    if (method == CoresetMethod::srht) {
        SrhtRows s = srht_rows(p.A, p.b, r, seed, true);
        c.plan = std::move(s.plan);
        c.C = std::move(s.rows);
        c.b_c = *s.b_rows;
        c.k = n + 1;
        return c;
    }

    Matrix Y(m, n + 1);
    Y << p.A, p.b;
    const SvdFactors f = svd(Y);
    c.k = f.rank;
    if (method == CoresetMethod::barrier) {
        BarrierOptions bo;
        bo.allow_oversized = opt.allow_oversized;
        c.plan = barrier_single(f.U, r, bo);
    } else {
        c.plan = subspace_sampling(f.U, 1.0, r, seed);
    }
    c.C = apply_plan_rows(p.A, c.plan);
    c.b_c = apply_plan_rows(p.b, c.plan);
    return c;
}

Vector nnls(const Matrix& C, const Vector& b, NnlsInfo* info) {
    require_finite(C, "nnls");
    if (b.size() != C.rows()) throw ArgumentError("nnls: dimension mismatch");
    const int n = static_cast<int>(C.cols());
    const double scale = C.norm() * b.norm() + std::numeric_limits<double>::min();
    const double tol = 1e-13 * scale;
    const int max_cycles = 3 * n;

    Vector x = Vector::Zero(n);
    std::vector<char> passive(n, 0);
    Vector w = C.transpose() * b;
    int cycles = 0;

    auto solve_passive = [&](Vector& z) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (passive[i]) idx.push_back(i);
        Matrix CP(C.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t j = 0; j < idx.size(); ++j) CP.col(j) = C.col(idx[j]);
        const Vector zp = Eigen::ColPivHouseholderQR<Matrix>(CP).solve(b);
        z.setZero(n);
        for (std::size_t j = 0; j < idx.size(); ++j) z(idx[j]) = zp(j);
    };

    std::vector<char> skip(n, 0);
    for (;;) {
        int j = -1;
        double best = tol;
        for (int i = 0; i < n; ++i)
            if (!passive[i] && !skip[i] && w(i) > best) {
                best = w(i);
                j = i;
            }
        if (j < 0) break;
        if (++cycles > max_cycles) throw NumericError("nnls: active-set cycle cap exceeded");
        passive[j] = 1;
        Vector z;
        solve_passive(z);
        if (z(j) <= 0.0) {
            // Numerically useless direction; leave it out for this cycle.
            passive[j] = 0;
            skip[j] = 1;
            continue;
        }
        std::fill(skip.begin(), skip.end(), 0);
        for (int inner = 0; inner <= n; ++inner) {
            bool feasible = true;
            double alpha = std::numeric_limits<double>::infinity();
            for (int i = 0; i < n; ++i)
                if (passive[i] && z(i) <= 0.0) {
                    feasible = false;
                    alpha = std::min(alpha, x(i) / (x(i) - z(i)));
                }
            if (feasible) break;
            x += alpha * (z - x);
            for (int i = 0; i < n; ++i)
                if (passive[i] && x(i) <= 1e-15 * x.cwiseAbs().maxCoeff()) {
                    passive[i] = 0;
                    x(i) = 0.0;
                }
            solve_passive(z);
        }
        x = z;
        for (int i = 0; i < n; ++i)
            if (!passive[i]) x(i) = 0.0;
        w = C.transpose() * (b - C * x);
    }

    // Optimality: x >= 0, gradient zero on the passive set, dual nonnegative elsewhere.
    double viol = 0.0;
    for (int i = 0; i < n; ++i) {
        viol = std::max(viol, -x(i));
        viol = std::max(viol, passive[i] ? std::abs(w(i)) : w(i));
    }
    viol /= scale;
    if (info) *info = {cycles, viol};
    if (viol > 1e-8) throw NumericError("nnls: optimality conditions violated by " + std::to_string(viol));
    return x;
}

Vector solve_ls(const Matrix& C, const Vector& b, Constraint constraint) {
    if (C.size() == 0) throw ArgumentError("solve_ls: empty matrix");
    if (b.size() != C.rows()) throw ArgumentError("solve_ls: dimension mismatch");
    if (constraint == Constraint::nonnegative) return nnls(C, b);
    return pseudo_inverse(C) * b;
}

Solver solver_for(Constraint c) {
    return [c](const Matrix& C, const Vector& b) { return solve_ls(C, b, c); };
}

CoresetEvaluation evaluate_coreset(const RegressionProblem& p, const Coreset& c) {
    if (c.C.cols() != p.A.cols() || c.b_c.size() != c.C.rows())
        throw ArgumentError("evaluate_coreset: coreset dimensions do not match the problem");
    const Solver solve = solver_for(p.constraint);
    CoresetEvaluation ev;
    auto t0 = std::chrono::steady_clock::now();
    ev.x_opt = solve(p.A, p.b);
    ev.full_seconds = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    ev.x_tilde = solve(c.C, c.b_c);
    ev.coreset_seconds = seconds_since(t0);
    ev.full_residual2 = (p.A * ev.x_opt - p.b).squaredNorm();
    ev.coreset_residual2 = (p.A * ev.x_tilde - p.b).squaredNorm();
    const double floor = 1e-24 * std::max(p.b.squaredNorm(), std::numeric_limits<double>::min());
    if (ev.full_residual2 > floor)
        ev.ratio = ev.coreset_residual2 / ev.full_residual2;
    else
        ev.ratio = ev.coreset_residual2 <= floor ? 1.0 : std::numeric_limits<double>::infinity();
    ev.rows = c.plan.size();
    std::set<int> d;
    for (const Pick& pk : c.plan.picks) d.insert(pk.index);
    ev.distinct_rows = static_cast<int>(d.size());
    return ev;
}

}  // namespace matsketch
