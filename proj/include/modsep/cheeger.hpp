#pragma once

#include <optional>
#include <vector>

#include "modsep/graph.hpp"
#include "modsep/spectral.hpp"

namespace modsep {

// Conductance-style cut: crossing edges over the smaller side's degree mass.
struct CutResult {
    std::vector<int> side;          // witness subset, sorted; sweeps report the
                                    // smaller-degree side, the oracle the side
                                    // without vertex 0
    std::vector<Edge> crossing;     // sorted, u < v
    long long cut_size = 0;
    long long side_degree = 0;      // min{deg(S), deg(V - S)}, the denominator
    long long complement_degree = 0;
    int prefix_size = 0;            // vertices taken in sweep order; 0 for oracle cuts
    double ratio = 0.0;             // cut_size / side_degree
    std::optional<double> rayleigh; // of the score that produced a sweep cut
};

// Sorts vertices by x_v / sqrt(deg v) (descending, ties by id) and returns
// the best of the n-1 prefix cuts; ratio never exceeds sqrt(2 * rayleigh).
// Needs a connected graph and a score that is not constant after scaling.
CutResult sweep_cut(const Graph& g, const std::vector<double>& x);

// Exhaustive minimum over all 2^(n-1) - 1 splits, exact integer comparisons.
// The reported side excludes vertex 0.
CutResult cheeger_constant_exact(const Graph& g, int limit = 20);

struct SandwichReport {
    double lower = 0.0;   // lambda2 / 2
    double h_exact = 0.0;
    double upper = 0.0;   // sqrt(2 lambda2)
    double lambda2 = 0.0;
    bool holds = false;
};

// lambda2/2 <= h <= sqrt(2 lambda2) for the normalized Laplacian, checked
// against the exhaustive constant with 1e-9 slack.
SandwichReport verify_cheeger_sandwich(const Graph& g,
                                       const SolverConfig& cfg = {});

}  // namespace modsep
