#include "modsep/experiment.hpp"

#include <charconv>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "modsep/modularity.hpp"
#include "modsep/spectral.hpp"

namespace modsep {

const char* const kExperimentCsvHeader =
    "family,size,n,m,max_degree,epsilon,seed,deleted,deleted_fraction,"
    "degree_tax,score,lambda2,wall_ms";

std::string format_double(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
    if (spec.sizes.empty()) throw std::invalid_argument("experiment: no sizes");
    if (spec.epsilons.empty()) throw std::invalid_argument("experiment: no epsilons");
    if (spec.seeds.empty()) throw std::invalid_argument("experiment: no seeds");

    std::vector<ExperimentRow> rows;
    const std::string fname = family_name(spec.family);
    for (long long size : spec.sizes) {
        for (std::uint64_t seed : spec.seeds) {
            const Graph g = generate({spec.family, size, seed});
            SolverConfig solver = spec.solver;
            solver.seed = seed;
            const double l2 =
                lambda2(g, LaplacianVariant::combinatorial, solver).lambda2;
            for (double eps : spec.epsilons) {
                SeparatorConfig cfg;
                cfg.epsilon = eps;
                cfg.spectral = solver;
                const auto t0 = std::chrono::steady_clock::now();
                const LowerBoundResult res = modularity_lower_bound(g, cfg);
                const auto t1 = std::chrono::steady_clock::now();

                ExperimentRow row;
                row.family = fname;
                row.size = size;
                row.n = g.vertex_count();
                row.m = g.edge_count();
                row.max_degree = g.max_degree();
                row.epsilon = eps;
                row.seed = seed;
                row.deleted = static_cast<long long>(res.run.deleted_edges.size());
                row.deleted_fraction = res.bound.deleted_fraction;
                row.degree_tax = res.bound.degree_tax;
                row.score = res.bound.score;
                row.lambda2 = l2;
                row.wall_ms =
                    std::chrono::duration<double, std::milli>(t1 - t0).count();
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_csv(const std::vector<ExperimentRow>& rows, std::ostream& out) {
    out << kExperimentCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.family << ',' << r.size << ',' << r.n << ',' << r.m << ','
            << r.max_degree << ',' << format_double(r.epsilon) << ',' << r.seed
            << ',' << r.deleted << ',' << format_double(r.deleted_fraction) << ','
            << format_double(r.degree_tax) << ',' << format_double(r.score) << ','
            << format_double(r.lambda2) << ',' << format_double(r.wall_ms) << '\n';
    }
}

}  // namespace modsep
