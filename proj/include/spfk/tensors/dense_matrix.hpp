#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spfk/core/combinatorics.hpp"
#include "spfk/core/ring.hpp"

namespace spfk {

/// Row-major rectangular matrix, no symmetry assumed.
template <Ring R>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), R::zero()) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    R& operator()(int i, int j) { return data_[index(i, j)]; }
    const R& operator()(int i, int j) const { return data_[index(i, j)]; }

    /// Rows `rs` and columns `cs`, in the given order.
    DenseMatrix submatrix(std::span<const int> rs, std::span<const int> cs) const {
        DenseMatrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
        return m;
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        DenseMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                R s = R::zero();
                for (int k = 0; k < a.cols_; ++k) s = s + a(i, k) * b(k, j);
                c(i, j) = s;
            }
        return c;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i * cols_ + j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<R> data_;
};

inline constexpr int kMaxExpansionOrder = 8;

namespace detail {

template <Ring R>
R permutation_expansion(const DenseMatrix<R>& m, bool signed_sum) {
    if (!m.square()) throw std::invalid_argument("determinant/permanent of a non-square matrix");
    if (m.rows() > kMaxExpansionOrder) throw std::out_of_range("permutation expansion capped at order 8");
    R total = R::zero();
    for_each_permutation(m.rows(), [&](std::span<const int> p, int sign) {
        R term = R::one();
        for (int i = 0; i < m.rows(); ++i) term = term * m(i, p[static_cast<std::size_t>(i)]);
        total = (signed_sum && sign < 0) ? total - term : total + term;
    });
    return total;
}

}  // namespace detail

/// Fraction-free (Bareiss) elimination with row pivoting; exact over Q.
inline Rational bareiss_determinant(DenseMatrix<Rational> m) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return Rational::one();
    Rational prev = Rational::one();
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return Rational::zero();
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = Rational::zero();
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

template <Ring R>
R determinant_by_expansion(const DenseMatrix<R>& m) {
    return detail::permutation_expansion(m, true);
}

/// Bareiss for rationals, permutation expansion (order <= 8) for other rings.
template <Ring R>
R determinant(const DenseMatrix<R>& m) {
    if constexpr (std::is_same_v<R, Rational>) {
        return bareiss_determinant(m);
    } else {
        return determinant_by_expansion(m);
    }
}

template <Ring R>
R permanent(const DenseMatrix<R>& m) {
    return detail::permutation_expansion(m, false);
}

}  // namespace spfk
