#pragma once

#include "sextic/exactmath/integer.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sextic::exactmath {

/// Dense row-major matrix of rationals.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RatMatrix transposed() const
    {
        RatMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y)
    {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("matrix product: dimension mismatch");
        RatMatrix p(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x.at(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    p.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return p;
    }

    friend bool operator==(const RatMatrix& x, const RatMatrix& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    static RatMatrix identity(std::size_t n)
    {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Determinant by Gaussian elimination over Q.
inline Rat determinant(RatMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        const Rat p = m.at(col, col);
        det *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0)
                continue;
            const Rat f = m.at(r, col) / p;
            for (std::size_t c = col; c < n; ++c)
                m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

/// Solves m * x = rhs for square nonsingular m; nullopt when singular.
inline std::optional<std::vector<Rat>> solve(RatMatrix m, std::vector<Rat> rhs)
{
    const std::size_t n = m.rows();
    if (m.cols() != n || rhs.size() != n)
        throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m.at(pivot, c), m.at(col, c));
            std::swap(rhs[pivot], rhs[col]);
        }
        const Rat p = m.at(col, col);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m.at(r, col) == 0)
                continue;
            const Rat f = m.at(r, col) / p;
            for (std::size_t c = col; c < n; ++c)
                m.at(r, c) -= f * m.at(col, c);
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        rhs[i] /= m.at(i, i);
    return rhs;
}

} // namespace sextic::exactmath
