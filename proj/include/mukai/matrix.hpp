#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gauss_rational.hpp"

namespace mukai {

/// Dense row-major matrix over Q(i).
class matrix {
public:
    matrix() = default;
    matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    matrix(std::initializer_list<std::initializer_list<gauss_rational>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw error("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static matrix identity(std::size_t n)
    {
        matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    gauss_rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const gauss_rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<gauss_rational> apply(std::span<const gauss_rational> x) const
    {
        if (x.size() != cols_) throw error("matrix/vector size mismatch");
        std::vector<gauss_rational> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
        return y;
    }

    friend matrix operator*(const matrix& a, const matrix& b)
    {
        if (a.cols_ != b.rows_) throw error("matrix product size mismatch");
        matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(r, k).is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
            }
        return out;
    }

    friend bool operator==(const matrix&, const matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<gauss_rational> data_;
};

namespace detail {

// Gauss-Jordan on [m | rhs]; rhs is replaced by m^{-1} rhs.
inline void gauss_jordan(matrix m, matrix& rhs)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) throw error("solve_linear: matrix is not square");
    if (rhs.rows() != n) throw error("solve_linear: right-hand side has wrong length");
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != rank) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(rank, c));
            for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(piv, c), rhs(rank, c));
        }
        const gauss_rational inv = m(rank, col).inverse();
        for (std::size_t c = col; c < n; ++c) m(rank, c) *= inv;
        for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(rank, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m(r, col).is_zero()) continue;
            const gauss_rational f = m(r, col);
            for (std::size_t c = col; c < n; ++c)
                if (!m(rank, c).is_zero()) m(r, c) -= f * m(rank, c);
            for (std::size_t c = 0; c < rhs.cols(); ++c)
                if (!rhs(rank, c).is_zero()) rhs(r, c) -= f * rhs(rank, c);
        }
        ++rank;
    }
    if (rank < n) throw singular_matrix(rank, n);
}

} // namespace detail

/// Exact solution of m x = rhs. Throws singular_matrix (with the rank found) when m is not invertible.
inline std::vector<gauss_rational> solve_linear(const matrix& m, std::span<const gauss_rational> rhs)
{
    matrix b(rhs.size(), 1);
    for (std::size_t r = 0; r < rhs.size(); ++r) b(r, 0) = rhs[r];
    detail::gauss_jordan(m, b);
    std::vector<gauss_rational> x(rhs.size());
    for (std::size_t r = 0; r < rhs.size(); ++r) x[r] = b(r, 0);
    return x;
}

inline matrix inverse(const matrix& m)
{
    matrix b = matrix::identity(m.rows());
    detail::gauss_jordan(m, b);
    return b;
}

inline matrix transpose(const matrix& m)
{
    matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

} // namespace mukai
