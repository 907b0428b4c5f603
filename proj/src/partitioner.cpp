#include "modsep/partitioner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace modsep {

double ChargeLedger::sum() const {
    return std::accumulate(totals.begin(), totals.end(), 0.0);
}

int charge_count_limit(double epsilon) {
    return static_cast<int>(std::floor(std::log2(1.0 / epsilon))) + 2;
}

namespace {

void validate_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie strictly between 0 and 1");
}

// Spectral estimate for one connected piece. Honors the configured solver
// but falls back to the dense path when the iterative one fails to converge
// and the piece is small enough to afford it.
SpectralEstimate piece_fiedler(const Graph& piece, const SolverConfig& scfg) {
    SpectralEstimate est = lambda2(piece, LaplacianVariant::normalized, scfg);
    if (!est.converged && est.solver == SolverKind::iterative &&
        piece.vertex_count() <= 1024) {
        SolverConfig dense = scfg;
        dense.dense_cutoff = piece.vertex_count();
        long long spent = est.iterations;
        est = lambda2(piece, LaplacianVariant::normalized, dense);
        est.iterations += spent;
    }
    return est;
}

std::vector<std::vector<int>> to_global_blocks(
    const InducedSubgraph& piece, const std::vector<std::vector<int>>& local) {
    std::vector<std::vector<int>> out;
    out.reserve(local.size());
    for (const auto& block : local) {
        std::vector<int> g;
        g.reserve(block.size());
        for (int v : block) g.push_back(piece.to_global(v));
        std::sort(g.begin(), g.end());
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

CutStepResult single_cut_step(const InducedSubgraph& piece,
                              const SeparatorConfig& cfg) {
    validate_epsilon(cfg.epsilon);
    const Graph& local = piece.local;
    if (local.vertex_count() == 0)
        throw std::invalid_argument("cut step on an empty piece");

    CutStepResult out;
    if (components(local).count != 1) {
        out.disconnected_split = true;
        out.blocks = to_global_blocks(piece, component_members(local));
        return out;
    }

    SpectralEstimate est = piece_fiedler(local, cfg.spectral);
    out.spectral_converged = est.converged;

    CutResult cut = sweep_cut(local, est.vec);
    out.rayleigh = cut.rayleigh.value();
    out.ratio = cut.ratio;
    out.charged_side_degree = cut.side_degree;

    for (const auto& [u, v] : cut.crossing) {
        int gu = piece.to_global(u), gv = piece.to_global(v);
        out.deleted.emplace_back(std::min(gu, gv), std::max(gu, gv));
    }
    std::sort(out.deleted.begin(), out.deleted.end());

    // cut.side is the smaller-degree side, ties resolved to the sweep side
    const double total = static_cast<double>(cut.cut_size);
    for (int v : cut.side) {
        const double share =
            total * static_cast<double>(local.degree(v)) /
            static_cast<double>(cut.side_degree);
        out.charges.emplace_back(piece.to_global(v), share);
    }

    const std::vector<Edge> local_edges = local.edges();
    std::vector<Edge> remaining;
    remaining.reserve(local_edges.size() - cut.crossing.size());
    std::set_difference(local_edges.begin(), local_edges.end(),
                        cut.crossing.begin(), cut.crossing.end(),
                        std::back_inserter(remaining));
    Graph reduced = Graph::from_edges(local.vertex_count(), remaining);
    out.blocks = to_global_blocks(piece, component_members(reduced));
    return out;
}

namespace {

struct WorkItem {
    std::vector<int> vertices;   // sorted global ids
    long long internal_degree = 0;
};

long long internal_degree_of(const Graph& g, const std::vector<int>& block) {
    long long total = 0;
    for (int v : block)
        for (int u : g.neighbors(v))
            total += std::binary_search(block.begin(), block.end(), u);
    return total;
}

}  // namespace

SeparatorRun run_separator(const Graph& g, const SeparatorConfig& cfg) {
    validate_epsilon(cfg.epsilon);
    if (g.edge_count() < 1)
        throw std::invalid_argument("separator needs at least one edge");

    const int n = g.vertex_count();
    const long long m = g.edge_count();
    const double threshold = cfg.epsilon * static_cast<double>(m);

    SeparatorRun run;
    run.epsilon = cfg.epsilon;
    run.seed = cfg.spectral.seed;
    run.n = n;
    run.m = m;
    run.charge_audit = cfg.charge_audit;
    run.ledger.nonzero_counts.assign(n, 0);
    run.ledger.totals.assign(n, 0.0);
    if (cfg.charge_audit) run.ledger.entries.resize(n);

    std::vector<std::vector<int>> final_blocks;
    std::vector<int> carried;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0)
            final_blocks.push_back({v});  // zero-weight singleton
        else
            carried.push_back(v);
    }

    std::vector<WorkItem> worklist;
    worklist.push_back({std::move(carried), g.total_degree()});

    int step_id = 0;
    while (!worklist.empty()) {
        auto heaviest = std::max_element(
            worklist.begin(), worklist.end(),
            [](const WorkItem& a, const WorkItem& b) {
                if (a.internal_degree != b.internal_degree)
                    return a.internal_degree < b.internal_degree;
                return a.vertices.front() > b.vertices.front();
            });
        WorkItem item = std::move(*heaviest);
        worklist.erase(heaviest);

        if (static_cast<double>(item.internal_degree) < threshold) {
            final_blocks.push_back(std::move(item.vertices));
            continue;
        }

        InducedSubgraph piece = induce(g, item.vertices);
        ++step_id;
        CutStepResult res = single_cut_step(piece, cfg);

        StepTrace t;
        t.step = step_id;
        t.vertex_count = static_cast<int>(item.vertices.size());
        t.internal_degree = item.internal_degree;
        t.disconnected_split = res.disconnected_split;
        t.rayleigh = res.rayleigh;
        t.ratio = res.ratio;
        t.deleted = static_cast<long long>(res.deleted.size());
        t.charged_side_degree = res.charged_side_degree;
        t.spectral_converged = res.spectral_converged;
        t.blocks_out = static_cast<int>(res.blocks.size());
        run.trace.push_back(t);

        run.all_spectral_converged &= res.spectral_converged;
        run.deleted_edges.insert(run.deleted_edges.end(), res.deleted.begin(),
                                 res.deleted.end());
        for (const auto& [v, amount] : res.charges) {
            run.ledger.totals[v] += amount;
            if (amount > 0.0) ++run.ledger.nonzero_counts[v];
            if (cfg.charge_audit)
                run.ledger.entries[v].push_back({step_id, amount});
        }
        for (auto& block : res.blocks) {
            const long long ideg = internal_degree_of(g, block);
            worklist.push_back({std::move(block), ideg});
        }
    }

    std::sort(run.deleted_edges.begin(), run.deleted_edges.end());
    std::sort(final_blocks.begin(), final_blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    run.components = std::move(final_blocks);

    const double total_degree = static_cast<double>(g.total_degree());
    run.component_weights.reserve(run.components.size());
    for (const auto& block : run.components) {
        long long deg = 0;
        for (int v : block) deg += g.degree(v);
        run.component_weights.push_back(static_cast<double>(deg) /
                                        total_degree);
    }
    return run;
}

namespace {

AuditCheck check(const std::string& name, bool ok, std::string detail) {
    return {name, ok, std::move(detail)};
}

}  // namespace

AuditReport audit_run(const SeparatorRun& run, const Graph& g,
                      const SeparatorConfig& cfg) {
    AuditReport report;
    auto add = [&](const std::string& name, bool ok, const std::string& why) {
        report.checks.push_back(check(name, ok, ok ? "ok" : why));
    };

    add("full-ledger", run.charge_audit,
        "run was produced without charge_audit");

    const int n = g.vertex_count();
    const long long m = g.edge_count();
    const double threshold = cfg.epsilon * static_cast<double>(m);

    // partition validity: blocks disjoint, cover V, equal to the components
    // of the graph with the deleted edges removed
    bool ids_valid = true;
    bool partition_ok = true;
    std::string partition_why;
    std::vector<int> block_of(n, -1);
    {
        for (std::size_t b = 0; b < run.components.size() && ids_valid; ++b) {
            for (int v : run.components[b]) {
                if (v < 0 || v >= n || block_of[v] != -1) {
                    ids_valid = false;
                    partition_why = "vertex " + std::to_string(v) +
                                    " missing or repeated";
                    break;
                }
                block_of[v] = static_cast<int>(b);
            }
        }
        if (ids_valid)
            for (int v = 0; v < n; ++v)
                if (block_of[v] == -1) {
                    ids_valid = false;
                    partition_why = "vertex " + std::to_string(v) + " unassigned";
                    break;
                }
        partition_ok = ids_valid;
        if (partition_ok) {
            const std::vector<Edge> all_edges = g.edges();
            std::vector<Edge> kept;
            std::vector<Edge> sorted_deleted = run.deleted_edges;
            std::sort(sorted_deleted.begin(), sorted_deleted.end());
            std::set_difference(all_edges.begin(), all_edges.end(),
                                sorted_deleted.begin(), sorted_deleted.end(),
                                std::back_inserter(kept));
            Graph residue = Graph::from_edges(n, kept);
            auto comps = component_members(residue);
            std::vector<std::vector<int>> want = run.components;
            std::sort(want.begin(), want.end());
            std::sort(comps.begin(), comps.end());
            if (comps != want) {
                partition_ok = false;
                partition_why = "blocks differ from residual components";
            }
        }
    }
    add("partition-validity", partition_ok, partition_why);

    // deleted edges: real, unique, crossing distinct blocks, conservation
    bool deleted_ok = true;
    std::string deleted_why;
    {
        std::vector<Edge> sorted_deleted = run.deleted_edges;
        std::sort(sorted_deleted.begin(), sorted_deleted.end());
        if (std::adjacent_find(sorted_deleted.begin(), sorted_deleted.end()) !=
            sorted_deleted.end()) {
            deleted_ok = false;
            deleted_why = "duplicate deleted edge";
        }
        for (const auto& [u, v] : sorted_deleted) {
            if (!deleted_ok) break;
            if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v)) {
                deleted_ok = false;
                deleted_why = "deleted edge not in the graph";
            } else if (ids_valid && block_of[u] == block_of[v]) {
                deleted_ok = false;
                deleted_why = "deleted edge inside one block";
            }
        }
        if (deleted_ok && ids_valid) {
            long long internal = 0;
            for (const auto& block : run.components)
                internal += internal_degree_of(g, block) / 2;
            if (static_cast<long long>(run.deleted_edges.size()) + internal !=
                m) {
                deleted_ok = false;
                deleted_why = "edge conservation broken";
            }
        }
    }
    add("deleted-edges", deleted_ok, deleted_why);

    // stopping rule: every block light
    bool light_ok = ids_valid;
    std::string light_why = ids_valid ? "" : "invalid partition";
    if (ids_valid)
        for (const auto& block : run.components) {
            const long long ideg = internal_degree_of(g, block);
            if (static_cast<double>(ideg) >= threshold) {
                light_ok = false;
                light_why = "block starting at vertex " +
                            std::to_string(block.front()) +
                            " has internal degree " + std::to_string(ideg);
                break;
            }
        }
    add("stopping-rule", light_ok, light_why);

    // per-vertex nonzero-charge counts within the halving bound
    bool counts_ok = true;
    std::string counts_why;
    const int limit = charge_count_limit(cfg.epsilon);
    for (int v = 0; v < n && counts_ok; ++v) {
        int recount = run.ledger.nonzero_counts[v];
        if (run.charge_audit) {
            recount = 0;
            for (const auto& e : run.ledger.entries[v]) recount += e.amount > 0.0;
            if (recount != run.ledger.nonzero_counts[v]) {
                counts_ok = false;
                counts_why = "stored count disagrees with ledger entries at vertex " +
                             std::to_string(v);
            }
        }
        if (counts_ok && recount > limit) {
            counts_ok = false;
            counts_why = "vertex " + std::to_string(v) + " charged " +
                         std::to_string(recount) + " times, limit " +
                         std::to_string(limit);
        }
    }
    add("charge-counts", counts_ok, counts_why);

    // total charge equals the number of deleted edges
    const double charge_gap =
        std::abs(run.ledger.sum() -
                 static_cast<double>(run.deleted_edges.size()));
    add("charge-sum", charge_gap <= 1e-9,
        "ledger sum off by " + std::to_string(charge_gap));

    // every spectral step's cut ratio within its own certificate, and the
    // charged side never more than half the piece
    bool cert_ok = true;
    std::string cert_why;
    for (const auto& t : run.trace) {
        if (t.disconnected_split) continue;
        if (t.ratio > std::sqrt(2.0 * t.rayleigh) + 1e-9) {
            cert_ok = false;
            cert_why = "step " + std::to_string(t.step) + " ratio " +
                       std::to_string(t.ratio) + " above certificate";
            break;
        }
        if (2 * t.charged_side_degree > t.internal_degree) {
            cert_ok = false;
            cert_why = "step " + std::to_string(t.step) +
                       " charged the heavier side";
            break;
        }
    }
    add("cut-certificates", cert_ok, cert_why);

    // reported weights, and the conditional overall weight bound
    bool weights_ok = ids_valid;
    std::string weights_why = ids_valid ? "" : "invalid partition";
    {
        if (weights_ok &&
            run.component_weights.size() != run.components.size()) {
            weights_ok = false;
            weights_why = "weight list length mismatch";
        }
        const double total_degree = static_cast<double>(g.total_degree());
        double max_weight = 0.0;
        for (std::size_t b = 0; weights_ok && b < run.components.size(); ++b) {
            long long deg = 0;
            for (int v : run.components[b]) deg += g.degree(v);
            const double w = static_cast<double>(deg) / total_degree;
            if (std::abs(w - run.component_weights[b]) > 1e-12) {
                weights_ok = false;
                weights_why = "reported weight wrong for block " +
                              std::to_string(b);
            }
            max_weight = std::max(max_weight, w);
        }
        const double d = static_cast<double>(run.deleted_edges.size());
        if (weights_ok && d <= cfg.epsilon * static_cast<double>(m) / 2.0 &&
            max_weight >= cfg.epsilon) {
            weights_ok = false;
            weights_why = "sparse cut but a block has weight " +
                          std::to_string(max_weight);
        }
    }
    add("component-weights", weights_ok, weights_why);

    report.all_passed = true;
    for (const auto& c : report.checks) report.all_passed &= c.passed;
    return report;
}

}  // namespace modsep
