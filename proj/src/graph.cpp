#include "modsep/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modsep {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.m_ = static_cast<long long>(edges.size());
    g.offsets_.assign(n + 1, 0);

    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) +
                                        ") out of range [0, " +
                                        std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " +
                                        std::to_string(u));
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.adj_.resize(2 * g.m_);
    std::vector<long long> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v) {
        auto begin = g.adj_.begin() + g.offsets_[v];
        auto end = g.adj_.begin() + g.offsets_[v + 1];
        std::sort(begin, end);
        auto dup = std::adjacent_find(begin, end);
        if (dup != end)
            throw std::invalid_argument("duplicate edge (" +
                                        std::to_string(std::min(v, *dup)) +
                                        ", " +
                                        std::to_string(std::max(v, *dup)) +
                                        ")");
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
    return out;
}

std::vector<double> vertex_weights(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("vertex weights undefined for edgeless graph");
    const double total = static_cast<double>(g.total_degree());
    std::vector<double> w(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) w[v] = g.degree(v) / total;
    return w;
}

ComponentScan components(const Graph& g) {
    const int n = g.vertex_count();
    ComponentScan scan;
    scan.comp.assign(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (scan.comp[s] != -1) continue;
        const int id = scan.count++;
        scan.comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (scan.comp[v] == -1) {
                    scan.comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return scan;
}

std::vector<std::vector<int>> component_members(const Graph& g) {
    auto scan = components(g);
    std::vector<std::vector<int>> members(scan.count);
    for (int v = 0; v < g.vertex_count(); ++v)
        members[scan.comp[v]].push_back(v);
    return members;
}

InducedSubgraph induce(const Graph& g, std::vector<int> subset) {
    for (int v : subset)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induce: vertex " + std::to_string(v) +
                                        " out of range");
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw std::invalid_argument("induce: repeated vertex in subset");

    const int k = static_cast<int>(subset.size());
    std::vector<Edge> local_edges;
    for (int i = 0; i < k; ++i) {
        for (int v : g.neighbors(subset[i])) {
            auto it = std::lower_bound(subset.begin(), subset.end(), v);
            if (it != subset.end() && *it == v) {
                int j = static_cast<int>(it - subset.begin());
                if (i < j) local_edges.emplace_back(i, j);
            }
        }
    }
    InducedSubgraph sub;
    sub.parent = &g;
    sub.vertices = std::move(subset);
    sub.local = Graph::from_edges(k, local_edges);
    return sub;
}

}  // namespace modsep
