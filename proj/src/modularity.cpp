#include "modsep/modularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace modsep {

Partition Partition::from_labels(const std::vector<int>& labels) {
    Partition p;
    p.block_of.reserve(labels.size());
    std::map<int, int> renumber;
    for (int label : labels) {
        auto [it, inserted] = renumber.emplace(label, p.block_count);
        if (inserted) ++p.block_count;
        p.block_of.push_back(it->second);
    }
    return p;
}

Partition Partition::from_blocks(int n,
                                 const std::vector<std::vector<int>>& blocks) {
    Partition p;
    p.block_of.assign(n, -1);
    p.block_count = static_cast<int>(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw std::invalid_argument("empty block " + std::to_string(b));
        for (int v : blocks[b]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("block vertex " +
                                            std::to_string(v) +
                                            " out of range");
            if (p.block_of[v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " in two blocks");
            p.block_of[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < n; ++v)
        if (p.block_of[v] == -1)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " not covered by any block");
    return p;
}

Partition Partition::single_block(int n) {
    if (n < 1) throw std::invalid_argument("partition needs a vertex");
    Partition p;
    p.block_of.assign(n, 0);
    p.block_count = 1;
    return p;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(block_count);
    for (std::size_t v = 0; v < block_of.size(); ++v)
        out[block_of[v]].push_back(static_cast<int>(v));
    return out;
}

ModularityReport score_partition(const Graph& g, const Partition& p) {
    const int n = g.vertex_count();
    if (static_cast<int>(p.block_of.size()) != n)
        throw std::invalid_argument("partition covers " +
                                    std::to_string(p.block_of.size()) +
                                    " vertices, graph has " +
                                    std::to_string(n));
    if (p.block_count < 1)
        throw std::invalid_argument("partition needs at least one block");
    for (int v = 0; v < n; ++v)
        if (p.block_of[v] < 0 || p.block_of[v] >= p.block_count)
            throw std::invalid_argument("block id out of range at vertex " +
                                        std::to_string(v));

    ModularityReport rep;
    rep.per_block.resize(p.block_count);
    const long long m = g.edge_count();
    if (m == 0) {
        rep.edgeless = true;
        return rep;
    }

    for (int v = 0; v < n; ++v)
        rep.per_block[p.block_of[v]].degree_sum += g.degree(v);
    g.for_each_edge([&](int u, int v) {
        if (p.block_of[u] == p.block_of[v])
            ++rep.per_block[p.block_of[u]].internal_edges;
    });

    const double dm = static_cast<double>(m);
    const double dtwo_m = static_cast<double>(g.total_degree());
    for (auto& bt : rep.per_block) {
        bt.edge_fraction = static_cast<double>(bt.internal_edges) / dm;
        bt.weight = static_cast<double>(bt.degree_sum) / dtwo_m;
        bt.contribution = bt.edge_fraction - bt.weight * bt.weight;
        rep.edge_contribution += bt.edge_fraction;
        rep.degree_tax += bt.weight * bt.weight;
    }
    rep.score = rep.edge_contribution - rep.degree_tax;
    return rep;
}

BruteForceResult brute_force_modularity(const Graph& g, int cap) {
    const int n = g.vertex_count();
    const long long m = g.edge_count();
    if (m < 1)
        throw std::invalid_argument("brute force needs an edge");
    if (n > cap)
        throw std::invalid_argument("brute force capped at " +
                                    std::to_string(cap) + " vertices, got " +
                                    std::to_string(n));

    std::vector<int> a(n, 0);
    std::vector<int> best_a = a;
    long long best_num = std::numeric_limits<long long>::min();
    long long enumerated = 0;

    std::vector<long long> internal(n), degsum(n);
    const std::vector<Edge> all_edges = g.edges();

    // score numerator over the fixed denominator 4 m^2:
    //   4 m sum |E(A)|  -  sum deg(A)^2
    for (;;) {
        ++enumerated;
        int k = 1 + *std::max_element(a.begin(), a.end());
        std::fill(internal.begin(), internal.begin() + k, 0);
        std::fill(degsum.begin(), degsum.begin() + k, 0);
        for (int v = 0; v < n; ++v) degsum[a[v]] += g.degree(v);
        for (const auto& [u, v] : all_edges)
            if (a[u] == a[v]) ++internal[a[u]];
        long long num = 0;
        for (int b = 0; b < k; ++b)
            num += 4 * m * internal[b] - degsum[b] * degsum[b];
        if (num > best_num) {
            best_num = num;
            best_a = a;
        }

        int j = n - 1;
        for (; j >= 1; --j) {
            int mx = 0;
            for (int i = 0; i < j; ++i) mx = std::max(mx, a[i]);
            if (a[j] <= mx) {
                ++a[j];
                std::fill(a.begin() + j + 1, a.end(), 0);
                break;
            }
        }
        if (j == 0) break;
    }

    BruteForceResult out;
    out.score_num = best_num;
    out.score_den = 4 * m * m;
    out.score = static_cast<double>(best_num) / static_cast<double>(out.score_den);
    out.best = Partition::from_labels(best_a);
    out.enumerated = enumerated;
    return out;
}

BoundReport assemble_bound(const SeparatorRun& run, const Graph& g) {
    if (run.n != g.vertex_count() || run.m != g.edge_count())
        throw std::invalid_argument("run does not belong to this graph");

    Partition p = Partition::from_blocks(run.n, run.components);
    BoundReport out;
    out.partition_report = score_partition(g, p);
    out.deleted = static_cast<long long>(run.deleted_edges.size());
    out.deleted_fraction =
        static_cast<double>(out.deleted) / static_cast<double>(run.m);
    out.edge_contribution = 1.0 - out.deleted_fraction;
    out.degree_tax = out.partition_report.degree_tax;
    for (const auto& bt : out.partition_report.per_block)
        out.max_block_weight = std::max(out.max_block_weight, bt.weight);
    out.score = out.partition_report.score;
    out.identity_gap =
        std::abs(out.score - (out.edge_contribution - out.degree_tax));
    return out;
}

LowerBoundResult modularity_lower_bound(const Graph& g,
                                        const SeparatorConfig& cfg) {
    LowerBoundResult out;
    out.run = run_separator(g, cfg);
    out.bound = assemble_bound(out.run, g);
    return out;
}

}  // namespace modsep
