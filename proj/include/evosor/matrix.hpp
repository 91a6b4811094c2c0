#pragma once

#include <cstddef>
#include <vector>

namespace evosor {

/// Dense row-major matrix of doubles. Deliberately minimal: the solver only
/// needs element access, contiguous rows, and equality for exactness tests.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    double* row(int i) { return data_.data() + static_cast<size_t>(i) * cols_; }
    const double* row(int i) const { return data_.data() + static_cast<size_t>(i) * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

}  // namespace evosor
