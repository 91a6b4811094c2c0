#include "evosor/kernels.hpp"

#include <cmath>

namespace evosor::kernels {

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
    const int n = a.rows();
    const int m = a.cols();
#pragma omp parallel for schedule(static) if (n >= kRowCutoff)
    for (int i = 0; i < n; ++i) {
        const double* row = a.row(i);
        double acc = 0.0;
        for (int j = 0; j < m; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

void residual_into(const Matrix& a, std::span<const double> b, std::span<const double> x,
                   std::span<double> r) {
    const int n = a.rows();
#pragma omp parallel for schedule(static) if (n >= kRowCutoff)
    for (int i = 0; i < n; ++i) {
        const double* row = a.row(i);
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += row[j] * x[j];
        r[i] = acc - b[i];
    }
}

void eliminate_below(Matrix& aug, int k) {
    const int n = aug.rows();
    const int m = aug.cols();
    const double* pivot_row = aug.row(k);
    const double pivot = pivot_row[k];
#pragma omp parallel for schedule(static) if (n - k - 1 >= kRowCutoff)
    for (int i = k + 1; i < n; ++i) {
        double* row = aug.row(i);
        const double factor = row[k] / pivot;
        if (factor == 0.0) continue;
        row[k] = 0.0;
        for (int j = k + 1; j < m; ++j) row[j] -= factor * pivot_row[j];
    }
}

namespace serial {

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
    const int n = a.rows();
    const int m = a.cols();
    for (int i = 0; i < n; ++i) {
        const double* row = a.row(i);
        double acc = 0.0;
        for (int j = 0; j < m; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

void residual_into(const Matrix& a, std::span<const double> b, std::span<const double> x,
                   std::span<double> r) {
    const int n = a.rows();
    for (int i = 0; i < n; ++i) {
        const double* row = a.row(i);
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += row[j] * x[j];
        r[i] = acc - b[i];
    }
}

void eliminate_below(Matrix& aug, int k) {
    const int n = aug.rows();
    const int m = aug.cols();
    const double* pivot_row = aug.row(k);
    const double pivot = pivot_row[k];
    for (int i = k + 1; i < n; ++i) {
        double* row = aug.row(i);
        const double factor = row[k] / pivot;
        if (factor == 0.0) continue;
        row[k] = 0.0;
        for (int j = k + 1; j < m; ++j) row[j] -= factor * pivot_row[j];
    }
}

}  // namespace serial

double sum_of_squares(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc;
}

double max_abs(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) {
        double ax = std::fabs(x);
        if (std::isnan(ax)) return ax;
        if (ax > acc) acc = ax;
    }
    return acc;
}

}  // namespace evosor::kernels
