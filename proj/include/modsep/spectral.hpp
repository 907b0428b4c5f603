#pragma once

#include <cstdint>
#include <vector>

#include "modsep/graph.hpp"

namespace modsep {

enum class LaplacianVariant { combinatorial, normalized };

// Matrix-free Laplacian. The normalized variant needs every degree positive.
class LaplacianOperator {
public:
    LaplacianOperator(const Graph& g, LaplacianVariant variant);

    int size() const { return g_->vertex_count(); }
    LaplacianVariant variant() const { return variant_; }
    const Graph& graph() const { return *g_; }

    void apply(const std::vector<double>& x, std::vector<double>& y) const;

    // Unit vector spanning the kernel on a connected graph.
    std::vector<double> kernel_direction() const;

    // Upper bound on the spectrum, used to shift into a definite operator.
    double shift_bound() const;

    std::vector<std::vector<double>> dense_matrix() const;

private:
    const Graph* g_;
    LaplacianVariant variant_;
    std::vector<double> inv_sqrt_deg_;
};

struct SolverConfig {
    double tolerance = 1e-8;
    long long max_iterations = 0;  // 0 picks 10n + 1000
    int dense_cutoff = 64;
    std::uint64_t seed = 1;
};

enum class SolverKind { iterative, dense };

struct SpectralEstimate {
    double lambda2 = 0.0;
    std::vector<double> vec;      // unit norm, orthogonal to the kernel
    double rayleigh = 0.0;        // of vec, recomputed from the operator
    double residual = 0.0;        // ||L vec - lambda2 vec||
    long long iterations = 0;
    SolverKind solver = SolverKind::dense;
    bool converged = false;
};

struct DenseEigen {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
    int sweeps = 0;
};

// Cyclic Jacobi on a symmetric matrix.
DenseEigen jacobi_eigen(const std::vector<std::vector<double>>& a);

std::vector<double> laplacian_matvec(const LaplacianOperator& op,
                                     const std::vector<double>& x);

// Second-smallest Laplacian eigenvalue with eigenvector estimate.
// Disconnected graphs report 0 exactly together with a kernel-orthogonal
// component indicator. Non-convergence is reported through the flag and
// residual, never hidden.
SpectralEstimate lambda2(const LaplacianOperator& op,
                         const SolverConfig& cfg = {});
SpectralEstimate lambda2(const Graph& g, LaplacianVariant variant,
                         const SolverConfig& cfg = {});

std::vector<double> fiedler_vector(const LaplacianOperator& op,
                                   const SolverConfig& cfg = {});
std::vector<double> fiedler_vector(const Graph& g,
                                   LaplacianVariant variant,
                                   const SolverConfig& cfg = {});

struct OrderingCheck {
    double lambda2_normalized = 0.0;
    double lambda2_combinatorial = 0.0;
    bool holds = false;
};

// Normalized lambda2 never exceeds combinatorial lambda2 when every vertex
// has an edge; checked up to the solver tolerance.
OrderingCheck check_lambda2_ordering(const Graph& g,
                                     const SolverConfig& cfg = {});

}  // namespace modsep
