#include "hopfdual/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hopfdual {

namespace {

void require_field(const Matrix& m, const char* op)
{
    if (!m.ring().is_field())
        throw std::domain_error(std::string(op) + ": base ring Z is not a field");
}

using Row = std::vector<Scalar>;

// Scales a row of rationals to a primitive integer row with the same span.
void make_primitive(Row& row)
{
    mpz_class lcm_den = 1;
    for (const auto& x : row)
        if (!x.is_zero())
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
    mpz_class content = 0;
    for (const auto& x : row) {
        if (x.is_zero())
            continue;
        mpz_class n = x.numerator() * (lcm_den / x.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    if (content == 0)
        return;
    const Ring ring = row.front().ring();
    for (auto& x : row) {
        if (x.is_zero())
            continue;
        mpz_class n = x.numerator() * (lcm_den / x.denominator());
        x = Scalar(ring, mpz_class(n / content));
    }
}

bool is_permutation_matrix(const Matrix& m)
{
    if (m.rows() != m.cols())
        return false;
    std::vector<bool> col_used(m.cols(), false);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t ones = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Scalar& x = m(r, c);
            if (x.is_zero())
                continue;
            if (!x.is_one() || col_used[c])
                return false;
            col_used[c] = true;
            ++ones;
        }
        if (ones != 1)
            return false;
    }
    return true;
}

mpz_class abs_size(const Scalar& x)
{
    // ordering key for pivot choice over Q: |num| * den
    return abs(x.numerator()) * x.denominator();
}

} // namespace

EchelonForm row_reduce(const Matrix& m)
{
    require_field(m, "row_reduce");
    const Ring ring = m.ring();
    const bool rational = ring.kind() == Ring::Kind::Rational;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    std::vector<Row> a;
    a.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        a.push_back(m.row_vector(r));
        if (rational)
            make_primitive(a.back());
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero())
                continue;
            if (best == rows || (rational && abs_size(a[i][c]) < abs_size(a[best][c])))
                best = i;
            if (!rational)
                break;
        }
        if (best == rows)
            continue;
        std::swap(a[r], a[best]);
        const Scalar p = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero())
                continue;
            const Scalar f = a[i][c];
            if (rational) {
                // fraction-free combination p*row_i - f*row_r
                for (std::size_t j = c; j < cols; ++j) {
                    Scalar v = p * a[i][j];
                    if (!a[r][j].is_zero())
                        v -= f * a[r][j];
                    a[i][j] = std::move(v);
                }
                make_primitive(a[i]);
            } else {
                const Scalar q = f / p;
                for (std::size_t j = c; j < cols; ++j)
                    if (!a[r][j].is_zero())
                        a[i][j] -= q * a[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }

    // back phase: normalize pivots and clear above them
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        const Scalar inv = a[k][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!a[k][j].is_zero())
                a[k][j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (a[i][c].is_zero())
                continue;
            const Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!a[k][j].is_zero())
                    a[i][j] -= f * a[k][j];
        }
    }

    Matrix out(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = a[i][j];
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    require_field(m, "rank");
    return row_reduce(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m)
{
    require_field(m, "kernel_basis");
    const Ring ring = m.ring();
    const auto [e, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector x = zero_vector(ring, m.cols());
        x[free] = Scalar::one(ring);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = -e(k, free);
        basis.push_back(std::move(x));
    }
    return Matrix::from_columns(ring, m.cols(), basis);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    require_field(m, "solve");
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has length " +
                                    std::to_string(b.size()) + ", expected " +
                                    std::to_string(m.rows()));
    const Ring ring = m.ring();
    Matrix aug = m.hconcat(m.rows() ? Matrix::column(b) : Matrix(ring, 0, 1));
    const auto [e, pivots] = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    Vector x = zero_vector(ring, m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = e(k, m.cols());
    return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b)
{
    if (b.rows() != m.rows())
        throw std::invalid_argument("solve: row count mismatch");
    std::vector<Vector> cols;
    cols.reserve(b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        auto x = solve(m, b.column_vector(c));
        if (!x)
            return std::nullopt;
        cols.push_back(std::move(*x));
    }
    return Matrix::from_columns(m.ring(), m.cols(), cols);
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.ring().kind() == Ring::Kind::Integer) {
        // invert over Q, then demand an integral result
        auto q = inverse(change_ring(m, Ring::rationals()));
        if (!q)
            return std::nullopt;
        for (std::size_t r = 0; r < q->rows(); ++r)
            for (std::size_t c = 0; c < q->cols(); ++c)
                if ((*q)(r, c).denominator() != 1)
                    return std::nullopt;
        return change_ring(*q, Ring::integers());
    }
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    if (is_permutation_matrix(m))
        return m.transpose();
    const std::size_t n = m.rows();
    const auto [e, pivots] = row_reduce(m.hconcat(Matrix::identity(m.ring(), n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n))
        return std::nullopt;
    Matrix inv(m.ring(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e(i, n + j);
    return inv;
}

Matrix change_ring(const Matrix& m, Ring target)
{
    Matrix out(target, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = Scalar(target, m(r, c).value());
    return out;
}

std::vector<std::size_t> independent_columns(const Matrix& m)
{
    return row_reduce(m).pivots;
}

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const Ring ring = m.ring();
    const std::size_t n = m.rows();
    if (n == 0)
        return Scalar::one(ring);

    std::vector<Row> a;
    for (std::size_t r = 0; r < n; ++r)
        a.push_back(m.row_vector(r));
    bool negate = false;
    Scalar prev = Scalar::one(ring);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero())
                ++swap_row;
            if (swap_row == n)
                return Scalar::zero(ring);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = Scalar::zero(ring);
        }
        prev = a[k][k];
    }
    Scalar d = a[n - 1][n - 1];
    return negate ? -d : d;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix to_int(const Matrix& m)
{
    if (m.ring().kind() != Ring::Kind::Integer)
        throw std::domain_error("Smith normal form requires base ring Z");
    IntMatrix a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m(r, c).numerator();
    return a;
}

Matrix from_int(const IntMatrix& a, std::size_t rows, std::size_t cols)
{
    const Ring z = Ring::integers();
    Matrix m(z, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Scalar(z, a[r][c]);
    return m;
}

IntMatrix int_identity(std::size_t n)
{
    IntMatrix a(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = 1;
    return a;
}

/*
 * Smith form by elementary operations on the working matrix A, keeping
 * M = U * A * V throughout:
 *   row op  A <- E A  is mirrored by  U <- U E^-1  (a column op on U),
 *   col op  A <- A F  is mirrored by  V <- F^-1 V  (a row op on V).
 */
class SmithReducer {
public:
    SmithReducer(IntMatrix a, std::size_t rows, std::size_t cols, bool track)
        : a_(std::move(a)), rows_(rows), cols_(cols), track_(track)
    {
        if (track_) {
            u_ = int_identity(rows_);
            v_ = int_identity(cols_);
        }
    }

    void run()
    {
        const std::size_t steps = std::min(rows_, cols_);
        for (std::size_t t = 0; t < steps; ++t) {
            if (!reduce_block(t))
                break;
        }
    }

    const IntMatrix& a() const { return a_; }
    const IntMatrix& u() const { return u_; }
    const IntMatrix& v() const { return v_; }

private:
    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        std::swap(a_[i], a_[j]);
        if (track_)
            for (auto& row : u_)
                std::swap(row[i], row[j]);
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (auto& row : a_)
            std::swap(row[i], row[j]);
        if (track_)
            std::swap(v_[i], v_[j]);
    }

    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const mpz_class& q)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            if (a_[j][c] != 0)
                a_[i][c] += q * a_[j][c];
        if (track_)
            for (auto& row : u_)
                row[j] -= q * row[i];
    }

    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const mpz_class& q)
    {
        for (auto& row : a_)
            if (row[j] != 0)
                row[i] += q * row[j];
        if (track_)
            for (std::size_t c = 0; c < cols_; ++c)
                if (v_[i][c] != 0)
                    v_[j][c] -= q * v_[i][c];
    }

    void negate_row(std::size_t i)
    {
        for (auto& x : a_[i])
            x = -x;
        if (track_)
            for (auto& row : u_)
                row[i] = -row[i];
    }

    // Returns false when the remaining block is zero.
    bool reduce_block(std::size_t t)
    {
        for (;;) {
            std::size_t pr = rows_, pc = cols_;
            for (std::size_t i = t; i < rows_; ++i)
                for (std::size_t j = t; j < cols_; ++j)
                    if (a_[i][j] != 0 && (pr == rows_ || abs(a_[i][j]) < abs(a_[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows_)
                return false;
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows_; ++i) {
                if (a_[i][t] == 0)
                    continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
                add_row(i, t, -q);
                if (a_[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols_; ++j) {
                if (a_[t][j] == 0)
                    continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
                add_col(j, t, -q);
                if (a_[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // divisibility chain: pivot must divide the whole remaining block
            std::size_t bad = rows_;
            for (std::size_t i = t + 1; i < rows_ && bad == rows_; ++i)
                for (std::size_t j = t + 1; j < cols_; ++j)
                    if (!mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad != rows_) {
                add_row(t, bad, 1);
                continue;
            }
            if (a_[t][t] < 0)
                negate_row(t);
            return true;
        }
    }

    IntMatrix a_;
    IntMatrix u_;
    IntMatrix v_;
    std::size_t rows_;
    std::size_t cols_;
    bool track_;
};

} // namespace

SmithForm smith_normal_form(const Matrix& m)
{
    SmithReducer reducer(to_int(m), m.rows(), m.cols(), true);
    reducer.run();
    return {from_int(reducer.u(), m.rows(), m.rows()), from_int(reducer.a(), m.rows(), m.cols()),
            from_int(reducer.v(), m.cols(), m.cols())};
}

std::vector<mpz_class> invariant_factors(const Matrix& m)
{
    SmithReducer reducer(to_int(m), m.rows(), m.cols(), false);
    reducer.run();
    std::vector<mpz_class> d;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        d.push_back(reducer.a()[i][i]);
    return d;
}

bool has_full_column_rank(const Matrix& m)
{
    if (m.cols() > m.rows())
        return false;
    if (m.ring().is_field())
        return rank(m) == m.cols();
    for (const auto& d : invariant_factors(m))
        if (d == 0)
            return false;
    return true;
}

Matrix kronecker(const Matrix& a, const Matrix& b)
{
    if (!(a.ring() == b.ring()))
        throw std::domain_error("kronecker product over different rings");
    Matrix k(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a(i, j);
            if (x.is_zero())
                continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    const Scalar& y = b(p, q);
                    if (!y.is_zero())
                        k(i * b.rows() + p, j * b.cols() + q) = x * y;
                }
        }
    return k;
}

} // namespace hopfdual
