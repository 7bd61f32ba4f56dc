#include "matsketch/synthetic.hpp"

#include <cmath>
#include <sstream>

#include "matsketch/sketch.hpp"

namespace matsketch::synthetic {

using rng::derive_seed;
using rng::Stream;

Matrix lowrank(int m, int n, int k, double noise, std::uint64_t seed) {
    if (m < 1 || n < 1 || k < 1 || k > std::min(m, n)) throw ArgumentError("lowrank: bad dimensions");
    if (!(noise >= 0.0)) throw ArgumentError("lowrank: noise must be nonnegative");
    const Matrix G1 = gaussian_matrix(m, k, derive_seed(seed, Stream::synthetic, 0));
    const Matrix G2 = gaussian_matrix(n, k, derive_seed(seed, Stream::synthetic, 1));
    Matrix A = G1 * G2.transpose() / std::sqrt(static_cast<double>(k));
    if (noise > 0.0) A += noise * gaussian_matrix(m, n, derive_seed(seed, Stream::synthetic, 2));
    return A;
}

Blobs blobs(int m, int n, int k, double sep, std::uint64_t seed) {
    if (m < k || n < 1 || k < 1) throw ArgumentError("blobs: bad dimensions");
    Blobs out;
    out.informative = std::min(n, std::max(k, n / 10));
    const Matrix centers = sep * gaussian_matrix(k, out.informative, derive_seed(seed, Stream::synthetic, 3));
    out.data = gaussian_matrix(m, n, derive_seed(seed, Stream::synthetic, 4));
    out.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        out.labels[i] = i % k;
        out.data.row(i).head(out.informative) += centers.row(out.labels[i]);
    }
    return out;
}

Regression regression(int m, int n, double noise, std::uint64_t seed) {
    if (m <= n || n < 1) throw ArgumentError("regression: need m > n >= 1");
    Regression out;
    out.A = gaussian_matrix(m, n, derive_seed(seed, Stream::synthetic, 5));
    out.x_true = gaussian_matrix(n, 1, derive_seed(seed, Stream::synthetic, 6)).col(0);
    out.b = out.A * out.x_true + noise * gaussian_matrix(m, 1, derive_seed(seed, Stream::synthetic, 7)).col(0);
    return out;
}

Spec parse_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ArgumentError("synthetic spec must look like kind:p1,p2,...");
    Spec s;
    s.kind = text.substr(0, colon);
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            s.params.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ArgumentError("synthetic spec: bad number '" + tok + "'");
        }
    }
    const std::size_t want = s.kind == "lowerbound" ? 2 : s.kind == "regression" ? 3 : 4;
    if (s.kind != "lowrank" && s.kind != "blobs" && s.kind != "lowerbound" && s.kind != "regression")
        throw ArgumentError("synthetic spec: unknown kind '" + s.kind + "'");
    if (s.params.size() != want)
        throw ArgumentError("synthetic spec: " + s.kind + " takes " + std::to_string(want) + " parameters");
    return s;
}

}  // namespace matsketch::synthetic
