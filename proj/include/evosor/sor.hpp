#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evosor/linear_system.hpp"
#include "evosor/matrix.hpp"

namespace evosor {

enum class Norm { euclidean, infinity };

/// One forward relaxation sweep: components are updated in index order and
/// each update sees the already-updated components before it,
///   x_i <- x_i + (omega / a_ii) * (b_i - sum_j a_ij x_j)
/// with the sum taken over the current (partially updated) vector.
/// The input vector is copied, never modified.
std::vector<double> sor_sweep(const LinearSystem& system, std::span<const double> x,
                              double omega);

/// The sweep written as an affine operator x -> h x + v. Building it is
/// O(n^3), so it exists for tests and spectral-radius studies, not for the
/// solver path (the sweep itself is the O(n^2) production kernel).
struct IterationOperator {
    Matrix h;
    std::vector<double> v;
    double omega = 0.0;
};

/// Splits A = D - L - U (L and U hold the *negated* strict triangles of A)
/// and forms h = (I - w D^-1 L)^-1 ((1-w) I + w D^-1 U),
///           v = w (I - w D^-1 L)^-1 D^-1 b
/// by forward substitution on the unit lower-triangular factor.
IterationOperator build_iteration_matrix(const LinearSystem& system, double omega);

/// ||A x - b|| in the requested norm.
double residual_norm(const LinearSystem& system, std::span<const double> x,
                     Norm norm = Norm::euclidean);

/// Gaussian elimination with partial pivoting; the reference answer the
/// iterative solvers are checked against.
/// Throws SingularSystemError when a pivot degenerates.
std::vector<double> direct_solve(const LinearSystem& system);

class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectralRadiusEstimate {
    double value = 0.0;
    bool converged = false;  // false when the growth ratios never settled
    int iterations_used = 0;
};

/// Power iteration estimate of the spectral radius of op.h, restarting on a
/// degenerate start vector. The estimate is the exponential of the mean
/// log-growth over the trailing half of the run, which telescopes to
/// (1/W) log(||h^K x|| / ||h^(K-W) x||); that stays accurate even when the
/// dominant eigenvalues are a complex pair and the per-step ratio oscillates.
/// Accuracy target: 1e-4 relative when the dominant eigenvalue gap is >= 0.05.
SpectralRadiusEstimate estimate_spectral_radius(const IterationOperator& op, int iterations,
                                                uint64_t seed);

}  // namespace evosor
