#ifndef HOPFDUAL_MATRIX_HPP
#define HOPFDUAL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hopfdual/scalar.hpp"

namespace hopfdual {

using Vector = std::vector<Scalar>;

/// Zero vector of length n over ring.
Vector zero_vector(Ring ring, std::size_t n);
/// Standard basis vector e_i of length n.
Vector unit_vector(Ring ring, std::size_t n, std::size_t i);
bool is_zero_vector(std::span<const Scalar> v);

/*
 * Dense row-major matrix of exact scalars over one base ring.
 *
 * A Matrix with rows() == m and cols() == n represents a linear map R^n -> R^m
 * acting on column vectors. Products skip zero entries, so the (very common)
 * permutation-sparse matrices stay cheap.
 */
class Matrix {
public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols);
    /// Integer literal entries, mostly for tests: Matrix(Q, {{1, 2}, {3, 4}}).
    Matrix(Ring ring, std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(Ring ring, std::size_t n);
    static Matrix column(const Vector& v);
    static Matrix row(const Vector& v);
    /// Columns of the result are the given vectors; all must have length `height`.
    static Matrix from_columns(Ring ring, std::size_t height, const std::vector<Vector>& columns);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Bounds-checked access.
    const Scalar& at(std::size_t r, std::size_t c) const;

    std::span<const Scalar> row_span(std::size_t r) const
    {
        return {data_.data() + r * cols_, cols_};
    }
    Vector row_vector(std::size_t r) const;
    Vector column_vector(std::size_t c) const;
    std::vector<Vector> columns() const;

    Matrix transpose() const;
    /// Submatrix of the given columns, in order.
    Matrix select_columns(std::span<const std::size_t> indices) const;
    Matrix hconcat(const Matrix& right) const;
    Matrix vconcat(const Matrix& below) const;

    Vector apply(std::span<const Scalar> v) const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }

    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace hopfdual

#endif
