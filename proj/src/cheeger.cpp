#include "modsep/cheeger.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace modsep {

namespace {

void require_connected(const Graph& g, const char* what) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument(std::string(what) + " needs two vertices");
    if (g.edge_count() == 0)
        throw std::invalid_argument(std::string(what) + " needs an edge");
    if (components(g).count != 1)
        throw std::invalid_argument(std::string(what) +
                                    " needs a connected graph");
}

std::vector<Edge> crossing_edges(const Graph& g,
                                 const std::vector<char>& in_side) {
    std::vector<Edge> out;
    g.for_each_edge([&](int u, int v) {
        if (in_side[u] != in_side[v]) out.emplace_back(u, v);
    });
    return out;
}

}  // namespace

CutResult sweep_cut(const Graph& g, const std::vector<double>& x) {
    require_connected(g, "sweep cut");
    const int n = g.vertex_count();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("score vector has wrong length");

    std::vector<double> f(n);
    for (int v = 0; v < n; ++v)
        f[v] = x[v] / std::sqrt(static_cast<double>(g.degree(v)));

    const double total = static_cast<double>(g.total_degree());
    double mean = 0.0;
    for (int v = 0; v < n; ++v)
        mean += static_cast<double>(g.degree(v)) * f[v];
    mean /= total;

    double num = 0.0, den = 0.0;
    g.for_each_edge([&](int u, int v) {
        const double d = f[u] - f[v];
        num += d * d;
    });
    for (int v = 0; v < n; ++v) {
        const double c = f[v] - mean;
        den += static_cast<double>(g.degree(v)) * c * c;
    }
    if (den <= 0.0)
        throw std::invalid_argument("score vector is constant after scaling");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (f[a] != f[b]) return f[a] > f[b];
        return a < b;
    });

    const long long two_m = g.total_degree();
    std::vector<char> in_s(n, 0);
    long long cut = 0, vol = 0;
    long long best_cut = -1, best_min_vol = 0;
    int best_k = -1;
    for (int k = 0; k < n - 1; ++k) {
        const int v = order[k];
        long long inside = 0;
        for (int u : g.neighbors(v)) inside += in_s[u];
        cut += g.degree(v) - 2 * inside;
        vol += g.degree(v);
        in_s[v] = 1;

        const long long min_vol = std::min(vol, two_m - vol);
        if (best_k < 0 || cut * best_min_vol < best_cut * min_vol ||
            (cut * best_min_vol == best_cut * min_vol &&
             min_vol > best_min_vol)) {
            best_cut = cut;
            best_min_vol = min_vol;
            best_k = k;
        }
    }

    std::fill(in_s.begin(), in_s.end(), 0);
    long long vol_s = 0;
    for (int k = 0; k <= best_k; ++k) {
        in_s[order[k]] = 1;
        vol_s += g.degree(order[k]);
    }

    CutResult out;
    out.prefix_size = best_k + 1;
    out.cut_size = best_cut;
    const bool keep_prefix = vol_s <= two_m - vol_s;
    out.side_degree = keep_prefix ? vol_s : two_m - vol_s;
    out.complement_degree = two_m - out.side_degree;
    for (int v = 0; v < n; ++v)
        if (in_s[v] == (keep_prefix ? 1 : 0)) out.side.push_back(v);
    out.crossing = crossing_edges(g, in_s);
    out.ratio = static_cast<double>(out.cut_size) /
                static_cast<double>(out.side_degree);
    out.rayleigh = num / den;
    return out;
}

CutResult cheeger_constant_exact(const Graph& g, int limit) {
    require_connected(g, "exhaustive Cheeger");
    const int n = g.vertex_count();
    if (n > limit)
        throw std::invalid_argument("exhaustive Cheeger limited to " +
                                    std::to_string(limit) + " vertices, got " +
                                    std::to_string(n));

    const long long two_m = g.total_degree();
    std::vector<long long> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    const std::vector<Edge> all_edges = g.edges();

    long long best_cut = -1, best_den = 1;
    std::uint32_t best_mask = 0;
    const std::uint32_t top = 1u << (n - 1);
    for (std::uint32_t mask = 1; mask < top; ++mask) {
        // vertex 0 always on the complement side, so each split comes up once
        long long vol = 0;
        for (int v = 1; v < n; ++v)
            if (mask & (1u << (v - 1))) vol += deg[v];
        long long cut = 0;
        for (const auto& [u, v] : all_edges) {
            const bool su = u > 0 && (mask & (1u << (u - 1)));
            const bool sv = mask & (1u << (v - 1));  // v > u >= 0, so v > 0
            cut += su != sv;
        }
        const long long den = std::min(vol, two_m - vol);
        if (best_cut < 0 || cut * best_den < best_cut * den) {
            best_cut = cut;
            best_den = den;
            best_mask = mask;
        }
    }

    std::vector<char> in_s(n, 0);
    CutResult out;
    for (int v = 1; v < n; ++v) {
        if (best_mask & (1u << (v - 1))) {
            in_s[v] = 1;
            out.side.push_back(v);
        }
    }
    long long vol_s = 0;
    for (int v : out.side) vol_s += deg[v];
    out.cut_size = best_cut;
    out.side_degree = std::min(vol_s, two_m - vol_s);
    out.complement_degree = two_m - out.side_degree;
    out.crossing = crossing_edges(g, in_s);
    out.ratio = static_cast<double>(best_cut) / static_cast<double>(best_den);
    return out;
}

SandwichReport verify_cheeger_sandwich(const Graph& g,
                                        const SolverConfig& cfg) {
    require_connected(g, "Cheeger sandwich");
    SolverConfig dense_cfg = cfg;
    dense_cfg.dense_cutoff = std::max(cfg.dense_cutoff, g.vertex_count());

    SandwichReport out;
    out.lambda2 = lambda2(g, LaplacianVariant::normalized, dense_cfg).lambda2;
    out.h_exact = cheeger_constant_exact(g).ratio;
    out.lower = out.lambda2 / 2.0;
    out.upper = std::sqrt(2.0 * out.lambda2);
    out.holds = out.lower - 1e-9 <= out.h_exact && out.h_exact <= out.upper + 1e-9;
    return out;
}

}  // namespace modsep
