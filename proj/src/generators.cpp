#include "modsep/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace modsep {

Family family_from_string(const std::string& name) {
    if (name == "star") return Family::star;
    if (name == "cycle") return Family::cycle;
    if (name == "path") return Family::path;
    if (name == "grid") return Family::grid;
    if (name == "torus-grid") return Family::torus_grid;
    if (name == "apollonian") return Family::apollonian;
    if (name == "complete") return Family::complete;
    if (name == "random-cubic") return Family::random_cubic;
    if (name == "two-triangles-bridge") return Family::two_triangles_bridge;
    throw std::invalid_argument("unknown graph family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::star: return "star";
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::grid: return "grid";
        case Family::torus_grid: return "torus-grid";
        case Family::apollonian: return "apollonian";
        case Family::complete: return "complete";
        case Family::random_cubic: return "random-cubic";
        case Family::two_triangles_bridge: return "two-triangles-bridge";
    }
    return "?";
}

std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bounded_rand: zero bound");
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

double uniform_pm1(std::mt19937_64& rng) {
    // 53 random bits -> [0,1), then map to [-1,1)
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

namespace {

Graph make_star(long long leaves) {
    if (leaves < 1) throw std::invalid_argument("star: need at least one leaf");
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(static_cast<int>(leaves) + 1, e);
}

Graph make_cycle(long long n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, static_cast<int>(n) - 1);
    return Graph::from_edges(static_cast<int>(n), e);
}

Graph make_path(long long n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(static_cast<int>(n), e);
}

Graph make_grid(long long k, bool wrap) {
    if (!wrap && k < 1) throw std::invalid_argument("grid: need k >= 1");
    if (wrap && k < 3)
        throw std::invalid_argument("torus-grid: need k >= 3 to stay simple");
    const int kk = static_cast<int>(k);
    auto id = [kk](int r, int c) { return r * kk + c; };
    std::vector<Edge> e;
    for (int r = 0; r < kk; ++r) {
        for (int c = 0; c < kk; ++c) {
            if (c + 1 < kk) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < kk) e.emplace_back(id(r, c), id(r + 1, c));
            if (wrap && c == kk - 1) e.emplace_back(id(r, 0), id(r, c));
            if (wrap && r == kk - 1) e.emplace_back(id(0, c), id(r, c));
        }
    }
    return Graph::from_edges(kk * kk, e);
}

Graph make_complete(long long n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(static_cast<int>(n), e);
}

// Iterated face subdivision of a triangle: each insertion picks a face
// uniformly at random, adds a vertex joined to its three corners, and
// replaces the face by three new ones.  Output is a planar triangulation
// with m = 3n - 6.
Graph make_apollonian(long long depth, std::uint64_t seed) {
    if (depth < 0) throw std::invalid_argument("apollonian: need depth >= 0");
    if (depth > 12) throw std::invalid_argument("apollonian: depth > 12 exceeds desk scale");
    long long insertions = 0, pow3 = 1;
    for (long long i = 0; i < depth; ++i) pow3 *= 3;
    insertions = (pow3 - 1) / 2;

    std::mt19937_64 rng(seed);
    std::vector<std::array<int, 3>> faces{{0, 1, 2}};
    std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}};
    int next = 3;
    for (long long i = 0; i < insertions; ++i) {
        const std::size_t pick = bounded_rand(rng, faces.size());
        const auto f = faces[pick];
        const int v = next++;
        e.emplace_back(f[0], v);
        e.emplace_back(f[1], v);
        e.emplace_back(f[2], v);
        faces[pick] = {f[0], f[1], v};
        faces.push_back({f[0], f[2], v});
        faces.push_back({f[1], f[2], v});
    }
    return Graph::from_edges(next, e);
}

// Configuration model with full-restart rejection: pair up 3n stubs by a
// seeded shuffle, retry from scratch whenever the pairing has a loop or a
// repeated edge.
Graph make_random_cubic(long long n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument(
            "random-cubic: need even n >= 4 (odd n gives odd total degree)");
    std::mt19937_64 rng(seed);
    const int nn = static_cast<int>(n);
    std::vector<int> stubs(3 * nn);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        for (int i = 0; i < 3 * nn; ++i) stubs[i] = i / 3;
        for (int i = 3 * nn - 1; i > 0; --i) {
            int j = static_cast<int>(bounded_rand(rng, i + 1));
            std::swap(stubs[i], stubs[j]);
        }
        std::vector<Edge> e;
        e.reserve(3 * nn / 2);
        bool ok = true;
        std::set<Edge> seen;
        for (int i = 0; ok && i < 3 * nn; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { ok = false; break; }
            Edge key{std::min(u, v), std::max(u, v)};
            if (!seen.insert(key).second) { ok = false; break; }
            e.push_back(key);
        }
        if (ok) return Graph::from_edges(nn, e);
    }
    throw std::runtime_error("random-cubic: resampling cap reached");
}

Graph make_two_triangles_bridge() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2},
                                 {3, 4}, {3, 5}, {4, 5},
                                 {0, 3}});
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::star: return make_star(spec.size);
        case Family::cycle: return make_cycle(spec.size);
        case Family::path: return make_path(spec.size);
        case Family::grid: return make_grid(spec.size, false);
        case Family::torus_grid: return make_grid(spec.size, true);
        case Family::apollonian: return make_apollonian(spec.size, spec.seed);
        case Family::complete: return make_complete(spec.size);
        case Family::random_cubic: return make_random_cubic(spec.size, spec.seed);
        case Family::two_triangles_bridge: return make_two_triangles_bridge();
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace modsep
