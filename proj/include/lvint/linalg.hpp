#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lvint/rational.hpp"

namespace lvint {

// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void set_column(std::size_t c, const std::vector<Rational>& v);
    std::vector<Rational> column(std::size_t c) const;

    // Horizontal concatenation [this | other]; row counts must match.
    RatMatrix augmented(const RatMatrix& other) const;
    RatMatrix augmented(const std::vector<Rational>& col) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// In-place reduced row echelon form over the rationals. Pivots are chosen as
// the first row with a nonzero entry (deterministic, no heuristics). Returns
// the pivot column indices; the rank is their count.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

// Basis of the nullspace, one vector per free column, normalized so the free
// coordinate equals one.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// Particular solution of m x = rhs with all free variables set to zero, or
// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& rhs);

// Determinant of a square matrix, exact.
Rational det(RatMatrix m);

}  // namespace lvint
