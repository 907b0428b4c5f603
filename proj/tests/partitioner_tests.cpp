#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "modsep/corpus.hpp"
#include "modsep/generators.hpp"
#include "modsep/partitioner.hpp"
#include "test_support.hpp"

using namespace modsep;

namespace {

SeparatorConfig config(double eps, bool audit = true) {
    SeparatorConfig cfg;
    cfg.epsilon = eps;
    cfg.charge_audit = audit;
    return cfg;
}

std::multiset<std::size_t> block_sizes(const SeparatorRun& run) {
    std::multiset<std::size_t> sizes;
    for (const auto& c : run.components) sizes.insert(c.size());
    return sizes;
}

}  // namespace

TEST_CASE("charge count limit") {
    CHECK(charge_count_limit(0.5) == 3);
    CHECK(charge_count_limit(0.25) == 4);
    CHECK(charge_count_limit(0.1) == 5);
    CHECK(charge_count_limit(0.05) == 6);
}

TEST_CASE("all-light run: three disjoint edges at high epsilon") {
    // threshold eps*m = 2.7 exceeds every component's internal degree of 2,
    // so the free split of the root is the only step
    const auto run = run_separator(three_disjoint_edges(), config(0.9));
    CHECK(run.deleted_edges.empty());
    CHECK(run.components ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
    REQUIRE(run.trace.size() == 1);
    CHECK(run.trace[0].disconnected_split);
    CHECK(run.trace[0].blocks_out == 3);
    CHECK(run.ledger.sum() == 0.0);
    for (double w : run.component_weights)
        CHECK(w == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(audit_run(run, three_disjoint_edges(), config(0.9)).all_passed);
}

TEST_CASE("two disjoint triangles are each still heavy") {
    // threshold 3.6 < 6, so both triangles get cut after the free split
    const Graph g = two_triangles();
    const auto run = run_separator(g, config(0.6));
    CHECK(run.deleted_edges.size() == 4);
    CHECK(block_sizes(run) == std::multiset<std::size_t>{1, 1, 2, 2});
    CHECK(run.ledger.sum() == doctest::Approx(4.0).epsilon(1e-12));
    REQUIRE(run.trace.size() == 3);
    CHECK(run.trace[0].disconnected_split);
    CHECK_FALSE(run.trace[1].disconnected_split);
    CHECK(run.trace[1].deleted == 2);
    CHECK(run.trace[2].deleted == 2);
    int charged = 0;
    for (int c : run.ledger.nonzero_counts) {
        CHECK(c <= charge_count_limit(0.6));
        if (c > 0) ++charged;
    }
    CHECK(charged == 2);  // one apex per triangle
    CHECK(audit_run(run, g, config(0.6)).all_passed);
}

TEST_CASE("six disjoint triangles split for free") {
    std::vector<Edge> edges;
    for (int t = 0; t < 6; ++t) {
        const int b = 3 * t;
        edges.push_back({b, b + 1});
        edges.push_back({b, b + 2});
        edges.push_back({b + 1, b + 2});
    }
    const Graph g = Graph::from_edges(18, edges);
    const auto run = run_separator(g, config(0.6));
    CHECK(run.deleted_edges.empty());
    CHECK(run.components.size() == 6);
    for (double w : run.component_weights)
        CHECK(w == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(audit_run(run, g, config(0.6)).all_passed);
}

TEST_CASE("dumbbell run deletes the bridge first") {
    const Graph g = dumbbell();
    const auto run = run_separator(g, config(0.5));
    REQUIRE(!run.trace.empty());
    CHECK_FALSE(run.trace[0].disconnected_split);
    CHECK(run.trace[0].deleted == 1);
    CHECK(run.trace[0].ratio == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
    CHECK(std::count(run.deleted_edges.begin(), run.deleted_edges.end(),
                     Edge{0, 3}) == 1);
    CHECK(run.deleted_edges.size() == 5);
    CHECK(block_sizes(run) == std::multiset<std::size_t>{1, 1, 2, 2});
    CHECK(run.ledger.sum() == doctest::Approx(5.0).epsilon(1e-12));
    for (int c : run.ledger.nonzero_counts) CHECK(c <= charge_count_limit(0.5));
    CHECK(run.all_spectral_converged);
    CHECK(audit_run(run, g, config(0.5)).all_passed);
}

TEST_CASE("isolated vertices become zero-weight singletons") {
    const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});
    const auto run = run_separator(g, config(0.9));
    CHECK(run.deleted_edges == std::vector<Edge>{{1, 2}});
    CHECK(run.components ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4}});
    CHECK(run.component_weights[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(run.component_weights[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(run.component_weights[2] == 0.0);
    CHECK(audit_run(run, g, config(0.9)).all_passed);
}

TEST_CASE("single cut step on a connected piece accounts for every edge") {
    const Graph g = dumbbell();
    const auto piece = induce(g, {0, 1, 2, 3, 4, 5});
    const auto step = single_cut_step(piece, config(0.5));
    CHECK_FALSE(step.disconnected_split);
    CHECK(step.spectral_converged);
    REQUIRE(step.blocks.size() >= 2);

    std::set<Edge> seen(step.deleted.begin(), step.deleted.end());
    long long internal = 0;
    for (const auto& block : step.blocks) {
        const std::set<int> members(block.begin(), block.end());
        for (int v : block)
            for (int u : g.neighbors(v))
                if (u > v && members.count(u)) {
                    ++internal;
                    CHECK(seen.insert({v, u}).second);  // never deleted too
                }
    }
    CHECK(internal + static_cast<long long>(step.deleted.size()) ==
          g.edge_count());

    double total = 0.0;
    for (const auto& [v, amount] : step.charges) {
        CHECK(amount > 0.0);
        CHECK(v >= 0);
        CHECK(v < g.vertex_count());
        total += amount;
    }
    CHECK(total == doctest::Approx(static_cast<double>(step.deleted.size()))
                       .epsilon(1e-12));
    CHECK(2 * step.charged_side_degree <= g.total_degree());
    CHECK(step.ratio <= std::sqrt(2.0 * step.rayleigh) + 1e-9);
}

TEST_CASE("single cut step splits a disconnected piece for free") {
    const Graph g = two_triangles();
    const auto piece = induce(g, {0, 1, 2, 3, 4, 5});
    const auto step = single_cut_step(piece, config(0.6));
    CHECK(step.disconnected_split);
    CHECK(step.blocks.size() == 2);
    CHECK(step.deleted.empty());
    CHECK(step.charges.empty());
}

TEST_CASE("domain guards") {
    const Graph g = dumbbell();
    CHECK_THROWS_AS(run_separator(g, config(0.0)), std::invalid_argument);
    CHECK_THROWS_AS(run_separator(g, config(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(run_separator(g, config(-0.2)), std::invalid_argument);
    CHECK_THROWS_AS(run_separator(Graph::from_edges(4, {}), config(0.5)),
                    std::invalid_argument);
    CHECK_THROWS(single_cut_step(induce(g, {}), config(0.5)));
}

TEST_CASE("separator runs are deterministic") {
    const Graph g = generate({Family::apollonian, 4, 42});
    const auto a = run_separator(g, config(0.1));
    const auto b = run_separator(g, config(0.1));
    CHECK(a.deleted_edges == b.deleted_edges);
    CHECK(a.components == b.components);
    CHECK(a.component_weights == b.component_weights);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].deleted == b.trace[i].deleted);
        CHECK(a.trace[i].ratio == b.trace[i].ratio);
    }
}

TEST_CASE("audited grid run satisfies the full contract") {
    const Graph g = generate({Family::grid, 8, 0});
    const auto cfg = config(0.1);
    const auto run = run_separator(g, cfg);
    CHECK(run.all_spectral_converged);
    CHECK_FALSE(run.deleted_edges.empty());
    const auto audit = audit_run(run, g, cfg);
    for (const auto& c : audit.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
    CHECK(audit.all_passed);

    // step count stays within the deletion budget
    CHECK(run.trace.size() <= static_cast<std::size_t>(2 * g.edge_count()));
    // every block is light
    const double threshold = cfg.epsilon * static_cast<double>(g.edge_count());
    for (const auto& block : run.components) {
        const auto sub = induce(g, block);
        CHECK(static_cast<double>(sub.local.total_degree()) < threshold);
    }
}

TEST_CASE("audit flags corrupted runs without crashing") {
    const Graph g = dumbbell();
    const auto cfg = config(0.5);
    const auto clean = run_separator(g, cfg);
    REQUIRE(audit_run(clean, g, cfg).all_passed);

    SUBCASE("missing deleted edge") {
        auto bad = clean;
        bad.deleted_edges.pop_back();
        CHECK_FALSE(audit_run(bad, g, cfg).all_passed);
    }
    SUBCASE("merged components") {
        auto bad = clean;
        REQUIRE(bad.components.size() >= 2);
        auto tail = bad.components.back();
        bad.components.pop_back();
        auto& first = bad.components.front();
        first.insert(first.end(), tail.begin(), tail.end());
        std::sort(first.begin(), first.end());
        CHECK_FALSE(audit_run(bad, g, cfg).all_passed);
    }
    SUBCASE("tampered charge total") {
        auto bad = clean;
        bad.ledger.totals[0] += 0.5;
        CHECK_FALSE(audit_run(bad, g, cfg).all_passed);
    }
    SUBCASE("deleted edge that is not an edge") {
        auto bad = clean;
        bad.deleted_edges[0] = Edge{1, 4};
        CHECK_FALSE(audit_run(bad, g, cfg).all_passed);
    }
    SUBCASE("wrong component weight") {
        auto bad = clean;
        bad.component_weights[0] += 0.1;
        CHECK_FALSE(audit_run(bad, g, cfg).all_passed);
    }
    SUBCASE("dropped vertex") {
        auto bad = clean;
        for (auto& block : bad.components)
            if (block.size() > 1) {
                block.pop_back();
                break;
            }
        CHECK_FALSE(audit_run(bad, g, cfg).all_passed);
    }
}

TEST_CASE("charge counts recount from the audit ledger") {
    const Graph g = generate({Family::grid, 6, 0});
    const auto cfg = config(0.2);
    const auto run = run_separator(g, cfg);
    REQUIRE(run.charge_audit);
    REQUIRE(static_cast<int>(run.ledger.entries.size()) == g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int nonzero = 0;
        double total = 0.0;
        for (const auto& entry : run.ledger.entries[v]) {
            if (entry.amount > 0.0) ++nonzero;
            total += entry.amount;
        }
        CHECK(nonzero == run.ledger.nonzero_counts[v]);
        CHECK(total == doctest::Approx(run.ledger.totals[v]).epsilon(1e-12));
        CHECK(nonzero <= charge_count_limit(cfg.epsilon));
    }
    CHECK(audit_run(run, g, cfg).all_passed);
}
