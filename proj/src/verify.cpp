#include "modsep/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "modsep/cheeger.hpp"
#include "modsep/corpus.hpp"
#include "modsep/generators.hpp"
#include "modsep/modularity.hpp"
#include "modsep/partitioner.hpp"
#include "modsep/spectral.hpp"

namespace modsep {

namespace {

constexpr std::size_t kFailureCap = 20;

void record(SuiteResult& r, bool ok, const std::string& what) {
    ++r.checked;
    if (ok) return;
    ++r.failed;
    if (r.failures.size() < kFailureCap) r.failures.push_back(what);
}

bool connected(const Graph& g) { return components(g).count == 1; }

bool has_isolated(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

std::vector<CorpusEntry> whole_corpus() {
    auto all = tiny_connected();
    for (auto& e : fixtures()) all.push_back(std::move(e));
    return all;
}

}  // namespace

SuiteResult verify_cheeger_suite() {
    SuiteResult r{"cheeger", 0, 0, {}};
    for (const auto& e : whole_corpus()) {
        const Graph& g = e.graph;
        if (g.vertex_count() > 16 || g.edge_count() == 0 || !connected(g)) continue;
        SolverConfig cfg;
        const auto rep = verify_cheeger_sandwich(g, cfg);
        record(r, rep.holds,
               e.name + ": sandwich violated, lower=" + std::to_string(rep.lower) +
                   " h=" + std::to_string(rep.h_exact) +
                   " upper=" + std::to_string(rep.upper));
    }
    return r;
}

SuiteResult verify_lambda_order_suite() {
    SuiteResult r{"lambda-order", 0, 0, {}};
    for (const auto& e : whole_corpus()) {
        const Graph& g = e.graph;
        if (g.edge_count() == 0 || has_isolated(g)) continue;
        SolverConfig cfg;
        cfg.dense_cutoff = g.vertex_count();
        const auto chk = check_lambda2_ordering(g, cfg);
        record(r, chk.holds,
               e.name + ": normalized " + std::to_string(chk.lambda2_normalized) +
                   " > combinatorial " + std::to_string(chk.lambda2_combinatorial));
    }
    return r;
}

SuiteResult verify_oracle_suite() {
    SuiteResult r{"oracle", 0, 0, {}};
    auto graphs = tiny_connected();
    for (auto& e : fixtures())
        if (e.graph.vertex_count() <= 8) graphs.push_back(std::move(e));
    for (const auto& e : graphs) {
        const Graph& g = e.graph;
        if (g.vertex_count() > 8 || g.edge_count() == 0) continue;
        const auto brute = brute_force_modularity(g);
        for (double eps : {0.1, 0.5}) {
            SeparatorConfig cfg;
            cfg.epsilon = eps;
            const auto res = modularity_lower_bound(g, cfg);
            const bool bounded = res.bound.score <= brute.score + 1e-12;
            const bool consistent = res.bound.identity_gap <= 1e-12;
            record(r, bounded && consistent,
                   e.name + " eps=" + std::to_string(eps) + ": bound " +
                       std::to_string(res.bound.score) +
                       (bounded ? " identity gap " + std::to_string(res.bound.identity_gap)
                                : " exceeds optimum " + std::to_string(brute.score)));
        }
    }
    return r;
}

SuiteResult verify_audit_suite() {
    SuiteResult r{"audit", 0, 0, {}};
    auto graphs = fixtures();
    graphs.push_back({"grid16", generate({Family::grid, 16, 0})});
    graphs.push_back({"apollonian5", generate({Family::apollonian, 5, 42})});
    graphs.push_back({"cubic100", generate({Family::random_cubic, 100, 1})});
    for (const auto& e : graphs) {
        const Graph& g = e.graph;
        if (g.edge_count() == 0) continue;
        const bool small = g.vertex_count() <= 64;
        for (double eps : {0.05, 0.1, 0.2, 0.5}) {
            if (!small && eps != 0.1) continue;
            SeparatorConfig cfg;
            cfg.epsilon = eps;
            cfg.charge_audit = true;
            const auto run = run_separator(g, cfg);
            const auto audit = audit_run(run, g, cfg);
            std::string detail;
            for (const auto& c : audit.checks)
                if (!c.passed) detail += " [" + c.name + ": " + c.detail + "]";
            record(r, audit.all_passed,
                   e.name + " eps=" + std::to_string(eps) + ":" + detail);
        }
    }
    return r;
}

SuiteResult run_verify_suite(const std::string& name) {
    if (name == "cheeger") return verify_cheeger_suite();
    if (name == "lambda-order") return verify_lambda_order_suite();
    if (name == "oracle") return verify_oracle_suite();
    if (name == "audit") return verify_audit_suite();
    throw std::invalid_argument("unknown verify suite: " + name);
}

std::vector<std::string> verify_suite_names() {
    return {"cheeger", "lambda-order", "oracle", "audit"};
}

}  // namespace modsep
