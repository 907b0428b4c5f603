#include "modsep/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "modsep/experiment.hpp"
#include "modsep/generators.hpp"
#include "modsep/graph_io.hpp"
#include "modsep/modularity.hpp"
#include "modsep/partitioner.hpp"
#include "modsep/spectral.hpp"
#include "modsep/verify.hpp"

namespace modsep {

namespace {

using nlohmann::ordered_json;

Graph read_graph(const std::string& path, const std::string& format_name) {
    const GraphFormat fmt = format_from_string(format_name);
    if (path == "-") return load_graph(std::cin, fmt);
    return load_graph_file(path, fmt);
}

// One block label per vertex, whitespace separated, '#' comments.
std::vector<int> load_labels(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open partition file: " + path);
    std::vector<int> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream row(line);
        int label = 0;
        while (row >> label) labels.push_back(label);
        if (!row.eof())
            throw std::runtime_error("partition file: non-integer token in \"" +
                                     line + "\"");
    }
    if (static_cast<int>(labels.size()) != n)
        throw std::runtime_error("partition file holds " +
                                 std::to_string(labels.size()) + " labels for " +
                                 std::to_string(n) + " vertices");
    return labels;
}

struct SolverFlags {
    double tol = 1e-8;
    long long max_iters = 0;
    int dense_cutoff = 64;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol, "eigensolver residual tolerance");
        cmd->add_option("--max-iters", max_iters,
                        "eigensolver iteration cap (0 = automatic)");
        cmd->add_option("--dense-cutoff", dense_cutoff,
                        "largest order handled by the dense solver");
    }

    SolverConfig config(std::uint64_t seed) const {
        SolverConfig c;
        c.tolerance = tol;
        c.max_iterations = max_iters;
        c.dense_cutoff = dense_cutoff;
        c.seed = seed;
        return c;
    }
};

void print_kv(std::ostream& out, const char* key, double value) {
    out << key << ' ' << format_double(value) << '\n';
}

void print_score(std::ostream& out, const Graph& g, int blocks,
                 const ModularityReport& rep) {
    out << "n " << g.vertex_count() << '\n';
    out << "m " << g.edge_count() << '\n';
    out << "blocks " << blocks << '\n';
    print_kv(out, "edge_contribution", rep.edge_contribution);
    print_kv(out, "degree_tax", rep.degree_tax);
    print_kv(out, "score", rep.score);
}

int print_audit(std::ostream& out, const AuditReport& audit) {
    for (const auto& c : audit.checks) {
        out << "audit " << c.name << ' ' << (c.passed ? "pass" : "FAIL");
        if (!c.passed) out << ' ' << c.detail;
        out << '\n';
    }
    out << "audit_passed " << (audit.all_passed ? 1 : 0) << '\n';
    return audit.all_passed ? 0 : 1;
}

ordered_json run_to_json(const SeparatorRun& run, const BoundReport& bound,
                         const AuditReport* audit) {
    ordered_json j;
    j["schema"] = "modsep-partition-v1";
    j["n"] = run.n;
    j["m"] = run.m;
    j["epsilon"] = run.epsilon;
    j["seed"] = run.seed;
    j["blocks"] = run.components;
    j["deleted_edges"] = ordered_json::array();
    for (const auto& [u, v] : run.deleted_edges)
        j["deleted_edges"].push_back({u, v});
    j["component_weights"] = run.component_weights;
    j["score"] = bound.score;
    j["edge_contribution"] = bound.edge_contribution;
    j["degree_tax"] = bound.degree_tax;
    j["deleted_fraction"] = bound.deleted_fraction;
    j["max_block_weight"] = bound.max_block_weight;
    j["all_spectral_converged"] = run.all_spectral_converged;

    long long charged = 0;
    int max_steps = 0;
    for (int c : run.ledger.nonzero_counts) {
        if (c > 0) ++charged;
        max_steps = std::max(max_steps, c);
    }
    j["ledger"] = {{"charge_total", run.ledger.sum()},
                   {"vertices_charged", charged},
                   {"max_charge_steps", max_steps},
                   {"step_limit", charge_count_limit(run.epsilon)}};

    j["trace"] = ordered_json::array();
    for (const auto& t : run.trace) {
        ordered_json step;
        step["step"] = t.step;
        step["kind"] = t.disconnected_split ? "split" : "cut";
        step["vertices"] = t.vertex_count;
        step["internal_degree"] = t.internal_degree;
        step["blocks_out"] = t.blocks_out;
        if (!t.disconnected_split) {
            step["rayleigh"] = t.rayleigh;
            step["ratio"] = t.ratio;
            step["deleted"] = t.deleted;
            step["charged_side_degree"] = t.charged_side_degree;
            step["spectral_converged"] = t.spectral_converged;
        }
        j["trace"].push_back(std::move(step));
    }

    if (audit != nullptr) {
        ordered_json a;
        a["passed"] = audit->all_passed;
        a["checks"] = ordered_json::array();
        for (const auto& c : audit->checks)
            a["checks"].push_back(
                {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        j["audit"] = std::move(a);
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"modularity lower bounds via spectral edge separators"};
    app.name("modsep");
    app.require_subcommand(1);

    // generate
    std::string gen_family, gen_format = "edge-list", gen_out;
    long long gen_size = 0;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("generate", "write a graph from a named family");
    gen->add_option("family", gen_family,
                    "star|cycle|path|grid|torus-grid|apollonian|complete|"
                    "random-cubic|two-triangles-bridge")
        ->required();
    gen->add_option("size", gen_size, "family size parameter")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--format", gen_format, "edge-list|metis");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // score
    std::string score_graph, score_partition_path, score_format = "edge-list";
    auto* score = app.add_subcommand("score", "modularity of a given partition");
    score->add_option("graph", score_graph, "graph file ('-' for stdin)")
        ->required();
    score->add_option("--partition", score_partition_path,
                      "file with one block label per vertex")
        ->required();
    score->add_option("--format", score_format, "edge-list|metis");

    // oracle
    std::string oracle_graph, oracle_format = "edge-list";
    int oracle_max_n = 10;
    auto* oracle = app.add_subcommand(
        "oracle", "exact maximum modularity by exhaustive enumeration");
    oracle->add_option("graph", oracle_graph, "graph file ('-' for stdin)")
        ->required();
    oracle->add_option("--max-n", oracle_max_n, "refuse graphs larger than this");
    oracle->add_option("--format", oracle_format, "edge-list|metis");

    // bound
    std::string bound_graph, bound_format = "edge-list";
    double bound_eps = 0.1;
    std::uint64_t bound_seed = 1;
    bool bound_audit = false;
    SolverFlags bound_solver;
    auto* bound = app.add_subcommand(
        "bound", "modularity lower bound from the edge separator");
    bound->add_option("graph", bound_graph, "graph file ('-' for stdin)")
        ->required();
    bound->add_option("--epsilon", bound_eps, "separator weight target in (0,1)");
    bound->add_option("--seed", bound_seed, "eigensolver seed");
    bound->add_flag("--audit", bound_audit, "run the partition audit as well");
    bound->add_option("--format", bound_format, "edge-list|metis");
    bound_solver.attach(bound);

    // partition
    std::string part_graph, part_format = "edge-list", part_out;
    double part_eps = 0.1;
    std::uint64_t part_seed = 1;
    bool part_audit = false;
    SolverFlags part_solver;
    auto* part = app.add_subcommand(
        "partition", "full separator run with JSON report");
    part->add_option("graph", part_graph, "graph file ('-' for stdin)")
        ->required();
    part->add_option("--epsilon", part_eps, "separator weight target in (0,1)");
    part->add_option("--seed", part_seed, "eigensolver seed");
    part->add_flag("--audit", part_audit,
                   "include the audit section; exit 1 if it fails");
    part->add_option("--format", part_format, "edge-list|metis");
    part->add_option("--out", part_out, "report path (default stdout)");
    part_solver.attach(part);

    // experiment
    std::string exp_family_s, exp_out;
    std::vector<long long> exp_sizes;
    std::vector<double> exp_eps = {0.1};
    std::vector<std::uint64_t> exp_seeds = {1};
    SolverFlags exp_solver;
    auto* exp = app.add_subcommand("experiment", "family sweep, CSV output");
    exp->add_option("--family", exp_family_s, "graph family")->required();
    exp->add_option("--sizes", exp_sizes, "comma separated size list")
        ->required()
        ->delimiter(',');
    exp->add_option("--epsilon", exp_eps, "comma separated epsilon list")
        ->delimiter(',');
    exp->add_option("--seed", exp_seeds, "comma separated seed list")
        ->delimiter(',');
    exp->add_option("--out", exp_out, "CSV path (default stdout)");
    exp_solver.attach(exp);

    // verify
    std::string verify_suite;
    auto* verify = app.add_subcommand("verify", "run a built-in property suite");
    verify
        ->add_option("suite", verify_suite, "cheeger|lambda-order|oracle|audit|all")
        ->required()
        ->check(CLI::IsMember({"cheeger", "lambda-order", "oracle", "audit", "all"}));

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("modsep");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            const Graph g = generate(
                {family_from_string(gen_family), gen_size, gen_seed});
            const GraphFormat fmt = format_from_string(gen_format);
            std::ostringstream stats;
            stats << "n " << g.vertex_count() << " m " << g.edge_count()
                  << " max_degree " << g.max_degree() << '\n';
            if (gen_out.empty()) {
                save_graph(g, out, fmt);
                err << stats.str();
            } else {
                save_graph_file(g, gen_out, fmt);
                out << stats.str();
            }
            return 0;
        }

        if (score->parsed()) {
            const Graph g = read_graph(score_graph, score_format);
            const auto labels = load_labels(score_partition_path, g.vertex_count());
            const Partition p = Partition::from_labels(labels);
            print_score(out, g, p.block_count, score_partition(g, p));
            return 0;
        }

        if (oracle->parsed()) {
            const Graph g = read_graph(oracle_graph, oracle_format);
            const auto res = brute_force_modularity(g, oracle_max_n);
            out << "n " << g.vertex_count() << '\n';
            out << "m " << g.edge_count() << '\n';
            out << "enumerated " << res.enumerated << '\n';
            out << "blocks " << res.best.block_count << '\n';
            out << "score_num " << res.score_num << '\n';
            out << "score_den " << res.score_den << '\n';
            print_kv(out, "score", res.score);
            out << "partition";
            for (int b : res.best.block_of) out << ' ' << b;
            out << '\n';
            return 0;
        }

        if (bound->parsed()) {
            const Graph g = read_graph(bound_graph, bound_format);
            SeparatorConfig cfg;
            cfg.epsilon = bound_eps;
            cfg.spectral = bound_solver.config(bound_seed);
            cfg.charge_audit = bound_audit;
            const LowerBoundResult res = modularity_lower_bound(g, cfg);
            out << "n " << res.run.n << '\n';
            out << "m " << res.run.m << '\n';
            print_kv(out, "epsilon", res.run.epsilon);
            out << "seed " << res.run.seed << '\n';
            out << "blocks " << res.run.components.size() << '\n';
            out << "deleted " << res.run.deleted_edges.size() << '\n';
            print_kv(out, "deleted_fraction", res.bound.deleted_fraction);
            print_kv(out, "edge_contribution", res.bound.edge_contribution);
            print_kv(out, "degree_tax", res.bound.degree_tax);
            print_kv(out, "max_block_weight", res.bound.max_block_weight);
            print_kv(out, "score", res.bound.score);
            print_kv(out, "identity_gap", res.bound.identity_gap);
            out << "spectral_converged " << (res.run.all_spectral_converged ? 1 : 0)
                << '\n';
            if (!bound_audit) return 0;
            return print_audit(out, audit_run(res.run, g, cfg));
        }

        if (part->parsed()) {
            const Graph g = read_graph(part_graph, part_format);
            SeparatorConfig cfg;
            cfg.epsilon = part_eps;
            cfg.spectral = part_solver.config(part_seed);
            cfg.charge_audit = part_audit;
            const LowerBoundResult res = modularity_lower_bound(g, cfg);
            AuditReport audit;
            if (part_audit) audit = audit_run(res.run, g, cfg);
            const ordered_json j =
                run_to_json(res.run, res.bound, part_audit ? &audit : nullptr);
            const std::string text = j.dump(2) + "\n";
            if (part_out.empty())
                out << text;
            else
                write_text_file(part_out, text);
            return part_audit && !audit.all_passed ? 1 : 0;
        }

        if (exp->parsed()) {
            ExperimentSpec spec;
            spec.family = family_from_string(exp_family_s);
            spec.sizes = exp_sizes;
            spec.epsilons = exp_eps;
            spec.seeds = exp_seeds;
            spec.solver = exp_solver.config(exp_seeds.front());
            const auto rows = run_experiment(spec);
            if (exp_out.empty()) {
                write_csv(rows, out);
            } else {
                std::ostringstream csv;
                write_csv(rows, csv);
                write_text_file(exp_out, csv.str());
            }
            return 0;
        }

        if (verify->parsed()) {
            std::vector<SuiteResult> results;
            if (verify_suite == "all") {
                for (const auto& name : verify_suite_names())
                    results.push_back(run_verify_suite(name));
            } else {
                results.push_back(run_verify_suite(verify_suite));
            }
            bool all_ok = true;
            for (const auto& r : results) {
                out << r.name << ": " << r.checked << " checks, " << r.failed
                    << " failures\n";
                for (const auto& f : r.failures) out << "  " << f << '\n';
                all_ok = all_ok && r.passed();
            }
            out << (all_ok ? "PASS" : "FAIL") << '\n';
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace modsep
