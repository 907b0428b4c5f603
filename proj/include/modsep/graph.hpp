#pragma once

#include <span>
#include <utility>
#include <vector>

namespace modsep {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph in compressed adjacency form.
/// Vertex ids are dense 0-based integers; neighbor lists are sorted
/// ascending so that equal edge sets produce identical bytes.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n vertices from an undirected edge list.
    /// Throws std::invalid_argument naming the offending edge on
    /// self-loops, duplicate edges, or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    long long total_degree() const { return 2 * m_; }

    int degree(int v) const {
        return static_cast<int>(offsets_[v + 1] - offsets_[v]);
    }
    int max_degree() const;

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v],
                static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }

    bool has_edge(int u, int v) const;

    /// All edges with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    template <class F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) f(u, v);
    }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<long long> offsets_{0};
    std::vector<int> adj_;
};

/// Degree-proportional vertex weights w(v) = deg(v)/deg(V).
/// Throws std::invalid_argument for edgeless graphs.
std::vector<double> vertex_weights(const Graph& g);

struct ComponentScan {
    int count = 0;
    std::vector<int> comp;  // component id per vertex, ids by first visit
};

ComponentScan components(const Graph& g);

/// Vertex lists of each component, each sorted, ordered by component id.
std::vector<std::vector<int>> component_members(const Graph& g);

/// A subgraph induced by a vertex subset.  `local` is a standalone Graph
/// on local ids 0..|vertices|-1; `vertices[i]` is the parent id of local
/// vertex i.
struct InducedSubgraph {
    const Graph* parent = nullptr;
    std::vector<int> vertices;  // sorted parent ids
    Graph local;

    int to_global(int local_id) const { return vertices[local_id]; }
};

/// Induces the subgraph of g on `subset` (parent ids; any order, no
/// duplicates).  Throws std::invalid_argument on out-of-range or repeated
/// ids.
InducedSubgraph induce(const Graph& g, std::vector<int> subset);

}  // namespace modsep
