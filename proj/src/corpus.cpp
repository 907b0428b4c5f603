#include "modsep/corpus.hpp"

#include <cstdint>
#include <utility>

#include "modsep/generators.hpp"

namespace modsep {

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

bool mask_connected(int n, const std::vector<std::pair<int, int>>& pairs,
                    std::uint32_t mask) {
    std::uint32_t adj[6] = {};
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (!(mask >> e & 1u)) continue;
        adj[pairs[e].first] |= 1u << pairs[e].second;
        adj[pairs[e].second] |= 1u << pairs[e].first;
    }
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1u) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1u;
}

Graph named(Family f, long long size, std::uint64_t seed = 0) {
    return generate({f, size, seed});
}

}  // namespace

std::vector<CorpusEntry> tiny_connected(int max_n) {
    std::vector<CorpusEntry> out;
    for (int n = 2; n <= max_n && n <= 6; ++n) {
        const auto pairs = vertex_pairs(n);
        const std::uint32_t masks = 1u << pairs.size();
        for (std::uint32_t mask = 1; mask < masks; ++mask) {
            if (!mask_connected(n, pairs, mask)) continue;
            std::vector<Edge> edges;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1u) edges.push_back({pairs[e].first, pairs[e].second});
            out.push_back({"tiny-n" + std::to_string(n) + "-" + std::to_string(mask),
                           Graph::from_edges(n, edges)});
        }
    }
    return out;
}

std::vector<CorpusEntry> fixtures() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, Graph g) {
        out.push_back({std::move(name), std::move(g)});
    };

    for (long long k : {3, 5, 7, 15})
        add("star" + std::to_string(k), named(Family::star, k));
    for (long long n : {4, 8, 16}) {
        add("path" + std::to_string(n), named(Family::path, n));
        add("cycle" + std::to_string(n), named(Family::cycle, n));
    }
    add("cycle5", named(Family::cycle, 5));
    for (long long k : {2, 3, 4, 8})
        add("grid" + std::to_string(k), named(Family::grid, k));
    for (long long k : {3, 4})
        add("torus" + std::to_string(k), named(Family::torus_grid, k));
    for (long long n : {4, 5, 6})
        add("complete" + std::to_string(n), named(Family::complete, n));
    for (long long d : {1, 2, 3, 4})
        add("apollonian" + std::to_string(d), named(Family::apollonian, d, 42));
    for (long long n : {8, 14, 20})
        add("cubic" + std::to_string(n), named(Family::random_cubic, n, 1));
    add("dumbbell", dumbbell());
    add("two-triangles", two_triangles());
    add("three-edges", three_disjoint_edges());
    return out;
}

Graph dumbbell() { return generate({Family::two_triangles_bridge, 0, 0}); }

Graph two_triangles() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

Graph three_disjoint_edges() {
    return Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
}

}  // namespace modsep
