#pragma once

#include <vector>

#include "modsep/graph.hpp"
#include "modsep/partitioner.hpp"

namespace modsep {

// Vertex blocks as a dense block-id array.
struct Partition {
    std::vector<int> block_of;  // block id per vertex, in [0, block_count)
    int block_count = 0;

    // Renumbers arbitrary labels by first appearance.
    static Partition from_labels(const std::vector<int>& labels);
    // Explicit blocks; they must cover every vertex exactly once.
    static Partition from_blocks(int n,
                                 const std::vector<std::vector<int>>& blocks);
    static Partition single_block(int n);

    std::vector<std::vector<int>> blocks() const;  // members sorted per block
};

struct BlockTerms {
    long long internal_edges = 0;
    long long degree_sum = 0;
    double edge_fraction = 0.0;  // internal_edges / m
    double weight = 0.0;         // degree_sum / 2m
    double contribution = 0.0;   // edge_fraction - weight^2
};

struct ModularityReport {
    double score = 0.0;
    double edge_contribution = 0.0;  // sum of edge fractions
    double degree_tax = 0.0;         // sum of squared weights
    bool edgeless = false;           // score pinned to 0 by convention
    std::vector<BlockTerms> per_block;
};

// Evaluates edge contribution minus degree tax in one pass over the edges.
ModularityReport score_partition(const Graph& g, const Partition& p);

struct BruteForceResult {
    double score = 0.0;
    long long score_num = 0;  // exact: score = score_num / score_den
    long long score_den = 1;  // always 4 m^2
    Partition best;
    long long enumerated = 0;
};

// Exact maximum over every set partition, enumerated as restricted growth
// strings with integer arithmetic throughout.
BruteForceResult brute_force_modularity(const Graph& g, int cap = 10);

struct BoundReport {
    long long deleted = 0;
    double deleted_fraction = 0.0;
    double edge_contribution = 0.0;  // 1 - deleted fraction
    double degree_tax = 0.0;
    double max_block_weight = 0.0;   // degree tax never exceeds this
    double score = 0.0;
    double identity_gap = 0.0;       // |score - (contribution - tax)|
    ModularityReport partition_report;
};

// Scores a separator run's blocks as a modularity partition.
BoundReport assemble_bound(const SeparatorRun& run, const Graph& g);

struct LowerBoundResult {
    SeparatorRun run;
    BoundReport bound;
};

// Runs the separator and scores its partition; the score is a certified
// lower bound because the partition is explicit.
LowerBoundResult modularity_lower_bound(const Graph& g,
                                        const SeparatorConfig& cfg);

}  // namespace modsep
