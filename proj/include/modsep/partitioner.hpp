#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modsep/cheeger.hpp"
#include "modsep/graph.hpp"
#include "modsep/spectral.hpp"

namespace modsep {

struct SeparatorConfig {
    double epsilon = 0.1;       // target weight bound, in (0,1)
    SolverConfig spectral;
    bool charge_audit = false;  // keep the full per-vertex charge ledger
};

struct ChargeEntry {
    int step = 0;
    double amount = 0.0;
};

struct ChargeLedger {
    std::vector<std::vector<ChargeEntry>> entries;  // per vertex, audit runs only
    std::vector<int> nonzero_counts;                // per vertex, always kept
    std::vector<double> totals;                     // per vertex, always kept
    double sum() const;
};

struct StepTrace {
    int step = 0;
    int vertex_count = 0;
    long long internal_degree = 0;     // of the piece, before this step
    bool disconnected_split = false;   // piece fell apart for free
    double rayleigh = 0.0;             // of the sweep score, spectral steps only
    double ratio = 0.0;                // achieved cut ratio
    long long deleted = 0;
    long long charged_side_degree = 0;
    bool spectral_converged = true;
    int blocks_out = 0;
};

struct SeparatorRun {
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> components;  // sorted inside, ordered by first vertex
    std::vector<Edge> deleted_edges;           // sorted
    std::vector<double> component_weights;     // deg_G(block) / deg_G(V)
    ChargeLedger ledger;
    std::vector<StepTrace> trace;
    bool charge_audit = false;
    bool all_spectral_converged = true;
};

struct CutStepResult {
    std::vector<std::vector<int>> blocks;          // global ids, sorted; ordered by first vertex
    std::vector<Edge> deleted;                     // global ids, sorted
    std::vector<std::pair<int, double>> charges;   // (global vertex, amount), ascending
    bool disconnected_split = false;
    double rayleigh = 0.0;
    double ratio = 0.0;
    long long charged_side_degree = 0;             // in the piece, before deletion
    bool spectral_converged = true;
};

// One round of the separator: a disconnected piece splits for free; a
// connected piece is cut along a Fiedler sweep, the crossing edges are
// deleted and charged to the smaller-degree side (ties to the sweep side)
// in proportion to each vertex's degree inside the piece.
CutStepResult single_cut_step(const InducedSubgraph& piece,
                              const SeparatorConfig& cfg);

// Repeatedly cuts every piece whose internal degree sum is at least
// (epsilon/2) * deg(V) until only light pieces remain. Isolated vertices
// become zero-weight singleton blocks up front. Deterministic for a fixed
// (graph, config) pair.
SeparatorRun run_separator(const Graph& g, const SeparatorConfig& cfg);

struct AuditCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditCheck> checks;
    bool all_passed = false;
};

// Recomputes everything the run claims from scratch. Reports failures
// instead of throwing.
AuditReport audit_run(const SeparatorRun& run, const Graph& g,
                      const SeparatorConfig& cfg);

// Largest number of times any vertex may pick up a nonzero charge.
int charge_count_limit(double epsilon);

}  // namespace modsep
