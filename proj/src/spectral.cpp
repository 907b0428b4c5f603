#include "modsep/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "modsep/generators.hpp"

namespace modsep {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(double c, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

void scale(std::vector<double>& x, double c) {
    for (double& v : x) v *= c;
}

// x -= (q . x) q for unit q
void project_out(const std::vector<double>& q, std::vector<double>& x) {
    axpy(-dot(q, x), q, x);
}

// flips so the first component above noise is positive; a pure convention
// that makes eigenvector output reproducible
void sign_normalize(std::vector<double>& x) {
    for (double v : x) {
        if (std::abs(v) > 1e-12) {
            if (v < 0.0)
                for (double& w : x) w = -w;
            return;
        }
    }
}

}  // namespace

LaplacianOperator::LaplacianOperator(const Graph& g, LaplacianVariant variant)
    : g_(&g), variant_(variant) {
    if (variant_ == LaplacianVariant::normalized) {
        inv_sqrt_deg_.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) == 0)
                throw std::invalid_argument(
                    "normalized Laplacian undefined: vertex " +
                    std::to_string(v) + " is isolated");
            inv_sqrt_deg_[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
        }
    }
}

void LaplacianOperator::apply(const std::vector<double>& x,
                              std::vector<double>& y) const {
    const int n = g_->vertex_count();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("operator applied to wrong-size vector");
    y.assign(n, 0.0);
    if (variant_ == LaplacianVariant::combinatorial) {
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (int u : g_->neighbors(v)) s += x[u];
            y[v] = static_cast<double>(g_->degree(v)) * x[v] - s;
        }
    } else {
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (int u : g_->neighbors(v)) s += x[u] * inv_sqrt_deg_[u];
            y[v] = x[v] - inv_sqrt_deg_[v] * s;
        }
    }
}

std::vector<double> LaplacianOperator::kernel_direction() const {
    const int n = g_->vertex_count();
    std::vector<double> d(n);
    if (variant_ == LaplacianVariant::combinatorial) {
        const double c = 1.0 / std::sqrt(static_cast<double>(n));
        for (double& v : d) v = c;
    } else {
        const double c = 1.0 / std::sqrt(static_cast<double>(g_->total_degree()));
        for (int v = 0; v < n; ++v)
            d[v] = c * std::sqrt(static_cast<double>(g_->degree(v)));
    }
    return d;
}

double LaplacianOperator::shift_bound() const {
    if (variant_ == LaplacianVariant::normalized) return 2.0;
    return std::max(2.0 * static_cast<double>(g_->max_degree()), 1.0);
}

std::vector<std::vector<double>> LaplacianOperator::dense_matrix() const {
    const int n = g_->vertex_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) {
        if (variant_ == LaplacianVariant::combinatorial) {
            a[v][v] = static_cast<double>(g_->degree(v));
            for (int u : g_->neighbors(v)) a[v][u] = -1.0;
        } else {
            a[v][v] = 1.0;
            for (int u : g_->neighbors(v))
                a[v][u] = -inv_sqrt_deg_[v] * inv_sqrt_deg_[u];
        }
    }
    return a;
}

DenseEigen jacobi_eigen(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("jacobi_eigen needs a square matrix");

    std::vector<std::vector<double>> w = a;
    std::vector<std::vector<double>> vecs(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) vecs[i][i] = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += w[p][q] * w[p][q];
        return std::sqrt(2.0 * s);
    };
    double frob = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) frob += w[p][q] * w[p][q];
    frob = std::sqrt(frob);
    const double stop = std::max(1e-13 * frob, 1e-300);

    const int max_sweeps = 64;
    int sweeps = 0;
    while (sweeps < max_sweeps && off_norm() > stop) {
        ++sweeps;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = w[p][q];
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (w[q][q] - w[p][p]) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {  // A <- A J
                    const double akp = w[k][p], akq = w[k][q];
                    w[k][p] = c * akp - s * akq;
                    w[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {  // A <- J^T A
                    const double apk = w[p][k], aqk = w[q][k];
                    w[p][k] = c * apk - s * aqk;
                    w[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {  // V <- V J
                    const double vkp = vecs[k][p], vkq = vecs[k][q];
                    vecs[k][p] = c * vkp - s * vkq;
                    vecs[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return w[i][i] < w[j][j]; });

    DenseEigen out;
    out.sweeps = sweeps;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        out.values[k] = w[order[k]][order[k]];
        for (int i = 0; i < n; ++i) out.vectors[k][i] = vecs[i][order[k]];
    }
    return out;
}

namespace {

void finish_estimate(const LaplacianOperator& op, SpectralEstimate& est) {
    sign_normalize(est.vec);
    std::vector<double> lx;
    op.apply(est.vec, lx);
    est.rayleigh = dot(est.vec, lx);
    axpy(-est.rayleigh, est.vec, lx);
    est.residual = norm(lx);
}

SpectralEstimate disconnected_estimate(const Graph& g,
                                       const LaplacianOperator& op,
                                       const ComponentScan& scan) {
    std::vector<double> x(g.vertex_count(), 0.0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (scan.comp[v] != 0) continue;
        x[v] = op.variant() == LaplacianVariant::normalized
                   ? std::sqrt(static_cast<double>(g.degree(v)))
                   : 1.0;
    }
    project_out(op.kernel_direction(), x);
    scale(x, 1.0 / norm(x));

    SpectralEstimate est;
    est.vec = std::move(x);
    est.solver = SolverKind::dense;
    est.converged = true;
    finish_estimate(op, est);
    est.lambda2 = 0.0;  // exact for a disconnected graph
    return est;
}

SpectralEstimate dense_estimate(const LaplacianOperator& op) {
    DenseEigen eig = jacobi_eigen(op.dense_matrix());
    SpectralEstimate est;
    est.vec = eig.vectors[1];
    project_out(op.kernel_direction(), est.vec);
    scale(est.vec, 1.0 / norm(est.vec));
    est.iterations = eig.sweeps;
    est.solver = SolverKind::dense;
    finish_estimate(op, est);
    est.lambda2 = est.rayleigh;
    est.converged = true;
    return est;
}

SpectralEstimate lanczos_estimate(const LaplacianOperator& op,
                                  const SolverConfig& cfg) {
    const int n = op.size();
    const double shift = op.shift_bound();
    const std::vector<double> kernel = op.kernel_direction();
    const long long max_iter =
        cfg.max_iterations > 0 ? cfg.max_iterations : 10LL * n + 1000;
    const int cap = std::min(n - 1, 128);

    std::mt19937_64 rng(cfg.seed);
    auto random_start = [&] {
        std::vector<double> x(n);
        for (;;) {
            for (double& v : x) v = uniform_pm1(rng);
            project_out(kernel, x);
            const double nx = norm(x);
            if (nx > 1e-8) {
                scale(x, 1.0 / nx);
                return x;
            }
        }
    };

    std::vector<double> start = random_start();

    SpectralEstimate best;
    best.solver = SolverKind::iterative;
    best.residual = std::numeric_limits<double>::infinity();
    long long total_iter = 0;

    std::vector<double> tmp;
    auto evaluate = [&](const std::vector<std::vector<double>>& q,
                        const std::vector<double>& alpha,
                        const std::vector<double>& beta) {
        const int k = static_cast<int>(alpha.size());
        std::vector<std::vector<double>> t(k, std::vector<double>(k, 0.0));
        for (int i = 0; i < k; ++i) {
            t[i][i] = alpha[i];
            if (i + 1 < k) t[i][i + 1] = t[i + 1][i] = beta[i];
        }
        DenseEigen eig = jacobi_eigen(t);
        const std::vector<double>& y = eig.vectors[k - 1];  // top of shifted op

        std::vector<double> x(n, 0.0);
        for (int i = 0; i < k; ++i) axpy(y[i], q[i], x);
        project_out(kernel, x);
        const double nx = norm(x);
        if (nx < 1e-12) return x;  // degenerate; caller restarts fresh
        scale(x, 1.0 / nx);

        op.apply(x, tmp);
        const double rho = dot(x, tmp);
        axpy(-rho, x, tmp);
        const double resid = norm(tmp);
        if (resid < best.residual) {
            best.vec = x;
            best.lambda2 = rho;
            best.rayleigh = rho;
            best.residual = resid;
        }
        return x;
    };

    while (total_iter < max_iter) {
        std::vector<std::vector<double>> q{start};
        std::vector<double> alpha, beta;
        bool breakdown = false;

        while (total_iter < max_iter) {
            const std::vector<double>& qj = q.back();
            op.apply(qj, tmp);
            std::vector<double> w(n);
            for (int i = 0; i < n; ++i) w[i] = shift * qj[i] - tmp[i];
            if (!beta.empty()) axpy(-beta.back(), q[q.size() - 2], w);
            const double a = dot(qj, w);
            alpha.push_back(a);
            axpy(-a, qj, w);
            for (int pass = 0; pass < 2; ++pass) {
                project_out(kernel, w);
                for (const auto& qi : q) project_out(qi, w);
            }
            const double b = norm(w);
            ++total_iter;

            const int k = static_cast<int>(alpha.size());
            if (b < 1e-13 || k == cap) {
                breakdown = b < 1e-13;
                break;
            }
            beta.push_back(b);
            scale(w, 1.0 / b);
            q.push_back(std::move(w));

            if (k % 32 == 0) {
                evaluate(q, alpha, beta);
                if (best.residual <= cfg.tolerance) {
                    best.iterations = total_iter;
                    best.converged = true;
                    sign_normalize(best.vec);
                    return best;
                }
            }
        }

        std::vector<double> ritz = evaluate(q, alpha, beta);
        if (best.residual <= cfg.tolerance) {
            best.iterations = total_iter;
            best.converged = true;
            sign_normalize(best.vec);
            return best;
        }
        start = (breakdown || norm(ritz) < 0.5) ? random_start()
                                                : std::move(ritz);
    }

    best.iterations = total_iter;
    best.converged = false;
    if (!best.vec.empty()) sign_normalize(best.vec);
    return best;
}

}  // namespace

std::vector<double> laplacian_matvec(const LaplacianOperator& op,
                                     const std::vector<double>& x) {
    std::vector<double> y;
    op.apply(x, y);
    return y;
}

SpectralEstimate lambda2(const LaplacianOperator& op, const SolverConfig& cfg) {
    const int n = op.size();
    if (n < 2)
        throw std::invalid_argument("lambda2 needs at least two vertices");
    if (cfg.dense_cutoff < 2)
        throw std::invalid_argument("dense_cutoff must be at least 2");
    if (!(cfg.tolerance > 0.0))
        throw std::invalid_argument("tolerance must be positive");

    ComponentScan scan = components(op.graph());
    if (scan.count > 1) return disconnected_estimate(op.graph(), op, scan);
    if (n <= cfg.dense_cutoff) return dense_estimate(op);
    return lanczos_estimate(op, cfg);
}

SpectralEstimate lambda2(const Graph& g, LaplacianVariant variant,
                         const SolverConfig& cfg) {
    return lambda2(LaplacianOperator(g, variant), cfg);
}

std::vector<double> fiedler_vector(const LaplacianOperator& op,
                                   const SolverConfig& cfg) {
    return lambda2(op, cfg).vec;
}

std::vector<double> fiedler_vector(const Graph& g, LaplacianVariant variant,
                                   const SolverConfig& cfg) {
    return lambda2(g, variant, cfg).vec;
}

OrderingCheck check_lambda2_ordering(const Graph& g, const SolverConfig& cfg) {
    OrderingCheck out;
    out.lambda2_normalized =
        lambda2(g, LaplacianVariant::normalized, cfg).lambda2;
    out.lambda2_combinatorial =
        lambda2(g, LaplacianVariant::combinatorial, cfg).lambda2;
    out.holds =
        out.lambda2_normalized <= out.lambda2_combinatorial + cfg.tolerance;
    return out;
}

}  // namespace modsep
