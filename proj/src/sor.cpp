#include "evosor/sor.hpp"

#include <cmath>
#include <stdexcept>

#include "evosor/kernels.hpp"
#include "evosor/rng.hpp"

namespace evosor {

std::vector<double> sor_sweep(const LinearSystem& system, std::span<const double> x,
                              double omega) {
    const int n = system.size();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("sor_sweep: vector length does not match system dimension");
    if (!std::isfinite(omega))
        throw std::invalid_argument("sor_sweep: relaxation factor must be finite");

    std::vector<double> y(x.begin(), x.end());
    const Matrix& a = system.a();
    const std::vector<double>& b = system.b();
    for (int i = 0; i < n; ++i) {
        const double* row = a.row(i);
        double acc = b[i];
        for (int j = 0; j < n; ++j) acc -= row[j] * y[j];
        y[i] += (omega / row[i]) * acc;
    }
    return y;
}

IterationOperator build_iteration_matrix(const LinearSystem& system, double omega) {
    const int n = system.size();
    const Matrix& a = system.a();

    // m = I - w D^-1 L is unit lower triangular: m(i,j) = w a_ij / a_ii, j < i.
    // g = (1-w) I + w D^-1 U is upper triangular: g(i,j) = -w a_ij / a_ii, j > i.
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
        g(i, i) = 1.0 - omega;
        for (int j = i + 1; j < n; ++j) g(i, j) = -omega * a(i, j) / a(i, i);
    }

    IterationOperator op;
    op.omega = omega;
    op.h = Matrix(n, n);
    op.v.assign(n, 0.0);

    // Forward substitution, one row at a time: row i of the result only needs
    // rows < i, so h and v are solved in place together.
    for (int i = 0; i < n; ++i) {
        double vi = omega * system.b()[i] / a(i, i);
        for (int c = 0; c < n; ++c) {
            double acc = g(i, c);
            for (int j = 0; j < i; ++j) acc -= omega * a(i, j) / a(i, i) * op.h(j, c);
            op.h(i, c) = acc;
        }
        for (int j = 0; j < i; ++j) vi -= omega * a(i, j) / a(i, i) * op.v[j];
        op.v[i] = vi;
    }
    return op;
}

double residual_norm(const LinearSystem& system, std::span<const double> x, Norm norm) {
    const int n = system.size();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("residual_norm: vector length does not match system dimension");
    std::vector<double> r(n);
    kernels::residual_into(system.a(), system.b(), x, r);
    if (norm == Norm::infinity) return kernels::max_abs(r);
    return std::sqrt(kernels::sum_of_squares(r));
}

std::vector<double> direct_solve(const LinearSystem& system) {
    const int n = system.size();
    Matrix aug(n, n + 1);
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            aug(i, j) = system.a()(i, j);
            scale = std::max(scale, std::fabs(aug(i, j)));
        }
        aug(i, n) = system.b()[i];
    }
    const double pivot_floor = scale * n * 2.220446049250313e-16;

    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double best = std::fabs(aug(k, k));
        for (int i = k + 1; i < n; ++i) {
            double cand = std::fabs(aug(i, k));
            if (cand > best) {
                best = cand;
                pivot_row = i;
            }
        }
        if (!(best > pivot_floor))
            throw SingularSystemError("direct_solve: numerically singular pivot at column " +
                                      std::to_string(k + 1));
        if (pivot_row != k)
            for (int j = k; j <= n; ++j) std::swap(aug(k, j), aug(pivot_row, j));
        kernels::eliminate_below(aug, k);
    }

    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double acc = aug(i, n);
        for (int j = i + 1; j < n; ++j) acc -= aug(i, j) * x[j];
        x[i] = acc / aug(i, i);
    }
    return x;
}

SpectralRadiusEstimate estimate_spectral_radius(const IterationOperator& op, int iterations,
                                                uint64_t seed) {
    if (iterations < 100)
        throw std::invalid_argument("estimate_spectral_radius: need at least 100 iterations");
    const int n = op.h.rows();
    Rng rng(seed, 0x5bec7ca1);

    auto random_unit = [&] {
        std::vector<double> x(n);
        double norm_sq = 0.0;
        do {
            for (double& c : x) c = rng.uniform(-1.0, 1.0);
            norm_sq = kernels::sum_of_squares(x);
        } while (norm_sq == 0.0);
        double inv = 1.0 / std::sqrt(norm_sq);
        for (double& c : x) c *= inv;
        return x;
    };

    SpectralRadiusEstimate est;
    std::vector<double> x = random_unit();
    std::vector<double> y(n);
    std::vector<double> log_ratios;
    log_ratios.reserve(iterations);
    int restarts = 0;

    for (int k = 0; k < iterations; ++k) {
        kernels::matvec(op.h, x, y);
        double norm = std::sqrt(kernels::sum_of_squares(y));
        est.iterations_used = k + 1;
        if (!(norm > 1e-300)) {
            // Start vector (numerically) annihilated. Three independent
            // restarts all mapping to zero means the radius is zero for any
            // practical purpose.
            if (++restarts > 3) {
                est.value = 0.0;
                est.converged = true;
                return est;
            }
            x = random_unit();
            log_ratios.clear();
            continue;
        }
        log_ratios.push_back(std::log(norm));
        double inv = 1.0 / norm;
        for (int i = 0; i < n; ++i) x[i] = y[i] * inv;
    }

    if (log_ratios.empty()) {
        est.value = 0.0;
        est.converged = true;
        return est;
    }

    size_t window = log_ratios.size() / 2;
    if (window == 0) window = log_ratios.size();
    double mean = 0.0, lo = log_ratios.back(), hi = log_ratios.back();
    for (size_t i = log_ratios.size() - window; i < log_ratios.size(); ++i) {
        mean += log_ratios[i];
        lo = std::min(lo, log_ratios[i]);
        hi = std::max(hi, log_ratios[i]);
    }
    mean /= static_cast<double>(window);
    est.value = std::exp(mean);
    est.converged = (hi - lo) < 1e-9;
    return est;
}

}  // namespace evosor
