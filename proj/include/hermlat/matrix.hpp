#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hermlat {

// Dense row-major matrix over an exact scalar type (Rat, Int, FieldElem).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

}  // namespace hermlat
