#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace plates {

/// Dense row-major matrix over an exact field. T must provide the field
/// operators, is_zero(), and the free functions zero_like / one_like (which
/// carry a cyclotomic order when T is Cyclotomic).
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& prototype) {
        Matrix m(n, n, zero_like(prototype));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(prototype);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] T trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        T sum = zero_like(data_.front());
        for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
        return sum;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix out(a.rows_, b.cols_, zero_like(a.data_.front()));
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

/// Rank by exact Gaussian elimination.
template <typename T>
std::size_t rank(Matrix<T> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        const T pivot_inv = one_like(m(r, c)) / m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            const T f = m(i, c) * pivot_inv;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Gauss-Jordan inverse; nullopt when singular.
template <typename T>
std::optional<Matrix<T>> inverse(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    Matrix<T> inv = Matrix<T>::identity(n, m(0, 0));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(c, j), m(p, j));
            std::swap(inv(c, j), inv(p, j));
        }
        const T pivot_inv = one_like(m(c, c)) / m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= pivot_inv;
            inv(c, j) *= pivot_inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            const T f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace plates
