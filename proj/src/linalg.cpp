#include "lvint/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace lvint {

void RatMatrix::set_column(std::size_t c, const std::vector<Rational>& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

std::vector<Rational> RatMatrix::column(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

RatMatrix RatMatrix::augmented(const RatMatrix& other) const {
    if (other.rows_ != rows_) throw std::invalid_argument("augmented: row count mismatch");
    RatMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) m.at(r, cols_ + c) = other.at(r, c);
    }
    return m;
}

RatMatrix RatMatrix::augmented(const std::vector<Rational>& col) const {
    RatMatrix m(rows_, 1);
    m.set_column(0, col);
    return augmented(m);
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(p, c));
        Rational inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    RatMatrix e = m;
    std::vector<std::size_t> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    RatMatrix aug = m.augmented(rhs);
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

Rational det(RatMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    Rational d(1);
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t p = col;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) return Rational(0);
        if (p != col) {
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(col, c), m.at(p, c));
            d = -d;
        }
        d *= m.at(col, col);
        Rational inv = m.at(col, col).inverse();
        for (std::size_t r = col + 1; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col) * inv;
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return d;
}

}  // namespace lvint
