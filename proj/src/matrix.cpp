#include "hopfdual/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfdual {

Vector zero_vector(Ring ring, std::size_t n) { return Vector(n, Scalar::zero(ring)); }

Vector unit_vector(Ring ring, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(ring, n);
    v.at(i) = Scalar::one(ring);
    return v;
}

bool is_zero_vector(std::span<const Scalar> v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring))
{
}

Matrix::Matrix(Ring ring, std::initializer_list<std::initializer_list<long>> rows)
    : ring_(ring), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(ring, x);
    }
}

Matrix Matrix::identity(Ring ring, std::size_t n)
{
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(ring);
    return m;
}

Matrix Matrix::column(const Vector& v)
{
    if (v.empty())
        throw std::invalid_argument("cannot infer ring of an empty column");
    Matrix m(v.front().ring(), v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

Matrix Matrix::row(const Vector& v)
{
    if (v.empty())
        throw std::invalid_argument("cannot infer ring of an empty row");
    Matrix m(v.front().ring(), 1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        m(0, i) = v[i];
    return m;
}

Matrix Matrix::from_columns(Ring ring, std::size_t height, const std::vector<Vector>& columns)
{
    Matrix m(ring, height, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != height)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < height; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return (*this)(r, c);
}

Vector Matrix::row_vector(std::size_t r) const
{
    auto s = row_span(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column_vector(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

std::vector<Vector> Matrix::columns() const
{
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(column_vector(c));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const
{
    Matrix m(ring_, rows_, indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k)
        for (std::size_t r = 0; r < rows_; ++r)
            m(r, k) = at(r, indices[k]);
    return m;
}

Matrix Matrix::hconcat(const Matrix& right) const
{
    if (rows_ != right.rows_ || !(ring_ == right.ring_))
        throw std::invalid_argument("hconcat shape or ring mismatch");
    Matrix m(ring_, rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c)
            m(r, cols_ + c) = right(r, c);
    }
    return m;
}

Matrix Matrix::vconcat(const Matrix& below) const
{
    if (cols_ != below.cols_ || !(ring_ == below.ring_))
        throw std::invalid_argument("vconcat shape or ring mismatch");
    Matrix m(ring_, rows_ + below.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
    for (std::size_t r = 0; r < below.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(rows_ + r, c) = below(r, c);
    return m;
}

Vector Matrix::apply(std::span<const Scalar> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out = zero_vector(ring_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero())
                out[r] += a * v[c];
        }
    }
    return out;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? Scalar::one(ring_) : Scalar::zero(ring_)))
                return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows_) +
                                    "x" + std::to_string(a.cols_) + " * " +
                                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    if (!(a.ring_ == b.ring_))
        throw std::domain_error("matrix product over different rings");
    Matrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero())
                    c(i, j) += x * y;
            }
        }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            os << ", ";
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                os << ", ";
            os << (*this)(r, c);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

} // namespace hopfdual
