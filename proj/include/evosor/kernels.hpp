#pragma once

#include <span>

#include "evosor/matrix.hpp"

namespace evosor::kernels {

/// Row counts below these cutoffs run single-threaded; the fork/join overhead
/// dwarfs the work on the paper-scale systems (n ~ 100).
inline constexpr int kRowCutoff = 256;

/// y = A x. Parallel over rows; each row is one serial dot product, so the
/// result is bit-identical to serial::matvec for any thread count.
void matvec(const Matrix& a, std::span<const double> x, std::span<double> y);

/// r = A x - b, same parallel layout as matvec.
void residual_into(const Matrix& a, std::span<const double> b, std::span<const double> x,
                   std::span<double> r);

/// One elimination step of Gaussian elimination on an augmented matrix:
/// subtract multiples of pivot row k from all rows below it. Parallel over
/// the updated rows.
void eliminate_below(Matrix& aug, int k);

/// Serial reference implementations. Kept for tests (the parallel kernels
/// must match them exactly) and for the benchmark comparison.
namespace serial {
void matvec(const Matrix& a, std::span<const double> x, std::span<double> y);
void residual_into(const Matrix& a, std::span<const double> b, std::span<const double> x,
                   std::span<double> r);
void eliminate_below(Matrix& aug, int k);
}  // namespace serial

// Reductions are kept serial on purpose: a parallel sum reorders additions
// and the project guarantees thread-count-independent results.
double sum_of_squares(std::span<const double> v);
double max_abs(std::span<const double> v);

}  // namespace evosor::kernels
