#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evosor/matrix.hpp"

namespace evosor {

/// A dense square system A x = b. Immutable once constructed; the constructor
/// enforces that A is square and matches b, and that no diagonal entry is zero
/// (the relaxation sweep divides by a_ii).
class LinearSystem {
public:
    LinearSystem(Matrix a, std::vector<double> b)
        : a_(std::move(a)), b_(std::move(b)) {
        if (a_.rows() < 1 || a_.rows() != a_.cols())
            throw std::invalid_argument("coefficient matrix must be square and non-empty");
        if (static_cast<size_t>(a_.rows()) != b_.size())
            throw std::invalid_argument("right-hand side length does not match matrix dimension");
        for (int i = 0; i < a_.rows(); ++i)
            if (a_(i, i) == 0.0)
                throw std::invalid_argument("zero diagonal at row " + std::to_string(i + 1));
    }

    int size() const { return a_.rows(); }
    const Matrix& a() const { return a_; }
    const std::vector<double>& b() const { return b_; }

    bool operator==(const LinearSystem&) const = default;

private:
    Matrix a_;
    std::vector<double> b_;
};

}  // namespace evosor
