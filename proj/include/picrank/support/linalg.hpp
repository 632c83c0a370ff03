#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace picrank {

// Dense matrices over an exact field ring (rank, determinant, kernel, solve
// via Gaussian elimination). Sizes here are tiny, so no pivoting strategy
// beyond "first nonzero" is needed.
template <class R>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<typename R::V> a;

    Mat() = default;
    Mat(const R& ring, size_t r, size_t c) : rows(r), cols(c), a(r * c, ring.zero()) {}
    typename R::V& at(size_t i, size_t j) { return a[i * cols + j]; }
    const typename R::V& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

namespace detail {
template <class R>
size_t row_echelon(const R& ring, Mat<R>& m, std::vector<size_t>* pivot_cols, int* sign) {
    size_t rank = 0;
    if (sign) *sign = 1;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && ring.is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
            if (sign) *sign = -*sign;
        }
        if (pivot_cols) pivot_cols->push_back(col);
        auto inv = ring.inv(m.at(rank, col));
        for (size_t i = rank + 1; i < m.rows; ++i) {
            if (ring.is_zero(m.at(i, col))) continue;
            auto f = ring.mul(m.at(i, col), inv);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = ring.sub(m.at(i, j), ring.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}
}  // namespace detail

template <class R>
size_t mat_rank(const R& ring, Mat<R> m) {
    return detail::row_echelon(ring, m, nullptr, nullptr);
}

template <class R>
typename R::V mat_det(const R& ring, Mat<R> m) {
    if (m.rows != m.cols) throw std::invalid_argument("mat_det: not square");
    int sign = 1;
    size_t rank = detail::row_echelon(ring, m, nullptr, &sign);
    if (rank < m.rows) return ring.zero();
    auto det = ring.one();
    for (size_t i = 0; i < m.rows; ++i) det = ring.mul(det, m.at(i, i));
    return sign < 0 ? ring.neg(det) : det;
}

// Basis of the right kernel {x : M x = 0}.
template <class R>
std::vector<std::vector<typename R::V>> mat_kernel(const R& ring, Mat<R> m) {
    std::vector<size_t> pivots;
    detail::row_echelon(ring, m, &pivots, nullptr);
    // back-substitute to reduced form
    for (size_t r = pivots.size(); r-- > 0;) {
        size_t pc = pivots[r];
        auto inv = ring.inv(m.at(r, pc));
        for (size_t j = pc; j < m.cols; ++j) m.at(r, j) = ring.mul(m.at(r, j), inv);
        for (size_t i = 0; i < r; ++i) {
            if (ring.is_zero(m.at(i, pc))) continue;
            auto f = m.at(i, pc);
            for (size_t j = pc; j < m.cols; ++j)
                m.at(i, j) = ring.sub(m.at(i, j), ring.mul(f, m.at(r, j)));
        }
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t pc : pivots) is_pivot[pc] = true;
    std::vector<std::vector<typename R::V>> basis;
    for (size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<typename R::V> v(m.cols, ring.zero());
        v[free_col] = ring.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < m.cols) v[pivots[r]] = ring.neg(m.at(r, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of M x = b, if consistent.
template <class R>
std::optional<std::vector<typename R::V>> mat_solve(const R& ring, const Mat<R>& m,
                                                    const std::vector<typename R::V>& b) {
    Mat<R> aug(ring, m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<size_t> pivots;
    detail::row_echelon(ring, aug, &pivots, nullptr);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == m.cols) return std::nullopt;  // inconsistent
    // check rows below rank
    std::vector<typename R::V> x(m.cols, ring.zero());
    for (size_t r = pivots.size(); r-- > 0;) {
        size_t pc = pivots[r];
        auto rhs = aug.at(r, m.cols);
        for (size_t j = pc + 1; j < m.cols; ++j)
            rhs = ring.sub(rhs, ring.mul(aug.at(r, j), x[j]));
        x[pc] = ring.mul(rhs, ring.inv(aug.at(r, pc)));
    }
    return x;
}

}  // namespace picrank
