#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "modsep/generators.hpp"
#include "modsep/partitioner.hpp"

namespace modsep {

struct ExperimentSpec {
    Family family = Family::grid;
    std::vector<long long> sizes;
    std::vector<double> epsilons;
    std::vector<std::uint64_t> seeds = {1};
    SolverConfig solver;
};

/// One sweep point. lambda2 is the algebraic connectivity of the input
/// graph (combinatorial Laplacian). wall_ms is the only field that is
/// not reproducible run to run.
struct ExperimentRow {
    std::string family;
    long long size = 0;
    int n = 0;
    long long m = 0;
    int max_degree = 0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    long long deleted = 0;
    double deleted_fraction = 0.0;
    double degree_tax = 0.0;
    double score = 0.0;
    double lambda2 = 0.0;
    double wall_ms = 0.0;
};

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

extern const char* const kExperimentCsvHeader;

std::string format_double(double x);
void write_csv(const std::vector<ExperimentRow>& rows, std::ostream& out);

}  // namespace modsep
