#pragma once

// Shared helpers for the test binaries.  The oracles here are written
// straight from the definitions, independently of the library code they
// check: dense matrices are assembled entry by entry, modularity is
// accumulated in doubles over explicit block sets, and the cut constant
// is minimized over raw subsets with floating-point ratios.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "modsep/graph.hpp"

namespace support {

using Matrix = std::vector<std::vector<double>>;

inline Matrix dense_combinatorial(const modsep::Graph& g) {
    const int n = g.vertex_count();
    Matrix a(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) {
        a[v][v] = g.degree(v);
        for (int u : g.neighbors(v)) a[v][u] = -1.0;
    }
    return a;
}

inline Matrix dense_normalized(const modsep::Graph& g) {
    const int n = g.vertex_count();
    Matrix a(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) {
        a[v][v] = 1.0;
        for (int u : g.neighbors(v))
            a[v][u] = -1.0 / std::sqrt(static_cast<double>(g.degree(v)) * g.degree(u));
    }
    return a;
}

inline std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    std::vector<double> y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// ||A x - lambda x||, straight from the dense matrix.
inline double eigen_residual(const Matrix& a, const std::vector<double>& x,
                             double lambda) {
    auto y = matvec(a, x);
    for (std::size_t i = 0; i < x.size(); ++i) y[i] -= lambda * x[i];
    return norm(y);
}

// Newman-Girvan score from explicit blocks, double arithmetic.
inline double modularity_direct(const modsep::Graph& g,
                                const std::vector<std::vector<int>>& blocks) {
    const double m = static_cast<double>(g.edge_count());
    if (m == 0) return 0.0;
    double score = 0.0;
    for (const auto& block : blocks) {
        const std::set<int> members(block.begin(), block.end());
        long long internal = 0;
        long long degsum = 0;
        for (int v : block) {
            degsum += g.degree(v);
            for (int u : g.neighbors(v))
                if (u > v && members.count(u)) ++internal;
        }
        const double w = static_cast<double>(degsum) / (2.0 * m);
        score += static_cast<double>(internal) / m - w * w;
    }
    return score;
}

// Minimum cut ratio over all proper subsets, floating point.
inline double cheeger_direct(const modsep::Graph& g) {
    const int n = g.vertex_count();
    const long long total = g.total_degree();
    const auto edges = g.edges();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        long long cut = 0;
        long long deg_s = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) deg_s += g.degree(v);
        for (const auto& [u, v] : edges)
            if (((mask >> u) & 1u) != ((mask >> v) & 1u)) ++cut;
        const long long den = std::min(deg_s, total - deg_s);
        if (den == 0) continue;
        best = std::min(best, static_cast<double>(cut) / static_cast<double>(den));
    }
    return best;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, int n) {
    std::vector<double> x(n);
    for (double& v : x)
        v = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    return x;
}

// Random block labels over 1..max_blocks blocks.
inline std::vector<int> random_labels(std::mt19937_64& rng, int n, int max_blocks) {
    std::vector<int> labels(n);
    for (int& l : labels) l = static_cast<int>(rng() % static_cast<std::uint64_t>(max_blocks));
    return labels;
}

}  // namespace support
