#include "hopfdual/structures.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hopfdual {

namespace {

SparseTensor prune(SparseTensor t, const Ring& ring, std::size_t n)
{
    for (auto it = t.begin(); it != t.end();) {
        const auto& [idx, value] = *it;
        if (idx[0] >= n || idx[1] >= n || idx[2] >= n)
            throw std::invalid_argument("structure constant index out of range");
        if (!(value.ring() == ring))
            throw std::domain_error("structure constant over a different ring");
        if (value.is_zero())
            it = t.erase(it);
        else
            ++it;
    }
    return t;
}

void check_vector(const Vector& v, const Ring& ring, std::size_t n, const char* what)
{
    if (v.size() != n)
        throw std::invalid_argument(std::string(what) + " has length " + std::to_string(v.size()) +
                                    ", expected " + std::to_string(n));
    for (const auto& x : v)
        if (!(x.ring() == ring))
            throw std::domain_error(std::string(what) + " entry over a different ring");
}

void add_terms(Vector& out, const SparseTerms& terms, const Scalar& scale)
{
    for (const auto& [k, c] : terms)
        out[k] += scale * c;
}

} // namespace

AlgebraPresentation::AlgebraPresentation(FreeModule carrier, SparseTensor mul, Vector unit)
    : carrier_(std::move(carrier)), unit_(std::move(unit))
{
    const std::size_t n = carrier_.rank();
    mul_ = prune(std::move(mul), carrier_.ring(), n);
    check_vector(unit_, carrier_.ring(), n, "unit");
    products_.resize(n * n);
    for (const auto& [idx, value] : mul_)
        products_[idx[0] * n + idx[1]].emplace_back(idx[2], value);
}

Scalar AlgebraPresentation::constant(std::size_t i, std::size_t j, std::size_t k) const
{
    auto it = mul_.find({i, j, k});
    return it == mul_.end() ? Scalar::zero(ring()) : it->second;
}

Vector AlgebraPresentation::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const
{
    const std::size_t n = rank();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("multiply: vector length mismatch");
    Vector out = zero_vector(ring(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero())
                continue;
            add_terms(out, basis_product(i, j), x[i] * y[j]);
        }
    }
    return out;
}

Matrix AlgebraPresentation::multiplication_matrix() const
{
    const std::size_t n = rank();
    Matrix m(ring(), n, n * n);
    for (const auto& [idx, value] : mul_)
        m(idx[2], idx[0] * n + idx[1]) = value;
    return m;
}

Matrix AlgebraPresentation::unit_matrix() const
{
    Matrix m(ring(), rank(), 1);
    for (std::size_t i = 0; i < rank(); ++i)
        m(i, 0) = unit_[i];
    return m;
}

CoalgebraPresentation::CoalgebraPresentation(FreeModule carrier, SparseTensor comul, Vector counit)
    : carrier_(std::move(carrier)), counit_(std::move(counit))
{
    const std::size_t n = carrier_.rank();
    comul_ = prune(std::move(comul), carrier_.ring(), n);
    check_vector(counit_, carrier_.ring(), n, "counit");
    coproducts_.resize(n);
    for (const auto& [idx, value] : comul_)
        coproducts_[idx[0]].emplace_back(idx[1] * n + idx[2], value);
}

Scalar CoalgebraPresentation::constant(std::size_t k, std::size_t i, std::size_t j) const
{
    auto it = comul_.find({k, i, j});
    return it == comul_.end() ? Scalar::zero(ring()) : it->second;
}

Vector CoalgebraPresentation::comultiply(std::span<const Scalar> x) const
{
    const std::size_t n = rank();
    if (x.size() != n)
        throw std::invalid_argument("comultiply: vector length mismatch");
    Vector out = zero_vector(ring(), n * n);
    for (std::size_t k = 0; k < n; ++k)
        if (!x[k].is_zero())
            add_terms(out, coproduct(k), x[k]);
    return out;
}

Matrix CoalgebraPresentation::comultiplication_matrix() const
{
    const std::size_t n = rank();
    Matrix m(ring(), n * n, n);
    for (const auto& [idx, value] : comul_)
        m(idx[1] * n + idx[2], idx[0]) = value;
    return m;
}

Matrix CoalgebraPresentation::counit_matrix() const
{
    Matrix m(ring(), 1, rank());
    for (std::size_t i = 0; i < rank(); ++i)
        m(0, i) = counit_[i];
    return m;
}

void AxiomReport::fail(std::string law, std::vector<std::size_t> indices, Scalar left, Scalar right)
{
    passed = false;
    if (witnesses.size() < limit)
        witnesses.push_back({std::move(law), std::move(indices), std::move(left), std::move(right)});
}

void AxiomReport::merge(const AxiomReport& other)
{
    if (other.passed)
        return;
    passed = false;
    for (const auto& w : other.witnesses)
        if (witnesses.size() < limit)
            witnesses.push_back(w);
}

std::string AxiomReport::to_string() const
{
    std::ostringstream os;
    os << (passed ? "PASS" : "FAIL");
    for (const auto& w : witnesses) {
        os << "\n  " << w.law << " at (";
        for (std::size_t i = 0; i < w.indices.size(); ++i)
            os << (i ? "," : "") << w.indices[i];
        os << "): left " << w.left << ", right " << w.right;
    }
    return os.str();
}

namespace {

// First coordinate where two dense vectors differ; records a witness.
bool compare_vectors(AxiomReport& report, const char* law, std::vector<std::size_t> indices,
                     const Vector& left, const Vector& right)
{
    for (std::size_t m = 0; m < left.size(); ++m)
        if (left[m] != right[m]) {
            indices.push_back(m);
            report.fail(law, std::move(indices), left[m], right[m]);
            return false;
        }
    return true;
}

Vector basis_times(const AlgebraPresentation& a, const SparseTerms& left, std::size_t k)
{
    // (sum_l c_l e_l) * e_k
    Vector out = zero_vector(a.ring(), a.rank());
    for (const auto& [l, c] : left)
        add_terms(out, a.basis_product(l, k), c);
    return out;
}

Vector times_basis_terms(const AlgebraPresentation& a, std::size_t i, const SparseTerms& right)
{
    // e_i * (sum_l c_l e_l)
    Vector out = zero_vector(a.ring(), a.rank());
    for (const auto& [l, c] : right)
        add_terms(out, a.basis_product(i, l), c);
    return out;
}

} // namespace

AxiomReport check_algebra_axioms(const AlgebraPresentation& a, std::size_t witness_limit)
{
    AxiomReport report(witness_limit);
    const std::size_t n = a.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector left = basis_times(a, a.basis_product(i, j), k);
                Vector right = times_basis_terms(a, i, a.basis_product(j, k));
                compare_vectors(report, "associativity", {i, j, k}, left, right);
            }
    for (std::size_t i = 0; i < n; ++i) {
        Vector e = unit_vector(a.ring(), n, i);
        compare_vectors(report, "left unit", {i}, a.multiply(a.unit(), e), e);
        compare_vectors(report, "right unit", {i}, a.multiply(e, a.unit()), e);
    }
    return report;
}

AxiomReport check_coalgebra_axioms(const CoalgebraPresentation& c, std::size_t witness_limit)
{
    AxiomReport report(witness_limit);
    const std::size_t n = c.rank();
    const Ring ring = c.ring();
    for (std::size_t k = 0; k < n; ++k) {
        // (Delta (x) id) Delta e_k and (id (x) Delta) Delta e_k in C^(x)3
        Vector left = zero_vector(ring, n * n * n);
        Vector right = zero_vector(ring, n * n * n);
        for (const auto& [ij, coeff] : c.coproduct(k)) {
            const std::size_t i = ij / n, j = ij % n;
            for (const auto& [pq, d] : c.coproduct(i))
                left[pq * n + j] += coeff * d;
            for (const auto& [pq, d] : c.coproduct(j))
                right[i * n * n + pq] += coeff * d;
        }
        compare_vectors(report, "coassociativity", {k}, left, right);

        Vector left_counit = zero_vector(ring, n);
        Vector right_counit = zero_vector(ring, n);
        for (const auto& [ij, coeff] : c.coproduct(k)) {
            const std::size_t i = ij / n, j = ij % n;
            left_counit[j] += c.counit()[i] * coeff;
            right_counit[i] += coeff * c.counit()[j];
        }
        const Vector e = unit_vector(ring, n, k);
        compare_vectors(report, "left counit", {k}, left_counit, e);
        compare_vectors(report, "right counit", {k}, right_counit, e);
    }
    return report;
}

AlgebraPresentation opposite_algebra(const AlgebraPresentation& a)
{
    SparseTensor mul;
    for (const auto& [idx, value] : a.mul())
        mul.emplace(std::array<std::size_t, 3>{idx[1], idx[0], idx[2]}, value);
    return AlgebraPresentation(a.carrier(), std::move(mul), a.unit());
}

AlgebraPresentation tensor_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b)
{
    const std::size_t nb = b.rank();
    SparseTensor mul;
    for (const auto& [x, cx] : a.mul())
        for (const auto& [y, cy] : b.mul())
            mul.emplace(std::array<std::size_t, 3>{x[0] * nb + y[0], x[1] * nb + y[1],
                                                   x[2] * nb + y[2]},
                        cx * cy);
    Vector unit = kronecker(a.unit_matrix(), b.unit_matrix()).column_vector(0);
    return AlgebraPresentation(a.carrier().tensor(b.carrier()), std::move(mul), std::move(unit));
}

CoalgebraPresentation tensor_coalgebra(const CoalgebraPresentation& c,
                                       const CoalgebraPresentation& d)
{
    const std::size_t nd = d.rank();
    SparseTensor comul;
    for (const auto& [x, cx] : c.comul())
        for (const auto& [y, cy] : d.comul())
            comul.emplace(std::array<std::size_t, 3>{x[0] * nd + y[0], x[1] * nd + y[1],
                                                     x[2] * nd + y[2]},
                          cx * cy);
    Vector counit = kronecker(c.counit_matrix(), d.counit_matrix()).row_vector(0);
    return CoalgebraPresentation(c.carrier().tensor(d.carrier()), std::move(comul),
                                 std::move(counit));
}

AxiomReport algebra_morphism_report(const LinearMap& f, const AlgebraPresentation& a,
                                    const AlgebraPresentation& b, std::size_t witness_limit)
{
    if (f.domain().rank() != a.rank() || f.codomain().rank() != b.rank())
        throw std::invalid_argument("algebra morphism dimensions do not match");
    AxiomReport report(witness_limit);
    const std::size_t n = a.rank();
    std::vector<Vector> images;
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(f.matrix().column_vector(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector prod = zero_vector(a.ring(), n);
            add_terms(prod, a.basis_product(i, j), Scalar::one(a.ring()));
            compare_vectors(report, "multiplicative", {i, j}, f(prod),
                            b.multiply(images[i], images[j]));
        }
    compare_vectors(report, "unital", {}, f(a.unit()), b.unit());
    return report;
}

bool is_algebra_morphism(const LinearMap& f, const AlgebraPresentation& a,
                         const AlgebraPresentation& b)
{
    return algebra_morphism_report(f, a, b, 0).passed;
}

AxiomReport coalgebra_morphism_report(const LinearMap& f, const CoalgebraPresentation& c,
                                      const CoalgebraPresentation& d, std::size_t witness_limit)
{
    if (f.domain().rank() != c.rank() || f.codomain().rank() != d.rank())
        throw std::invalid_argument("coalgebra morphism dimensions do not match");
    AxiomReport report(witness_limit);
    const std::size_t nc = c.rank(), nd = d.rank();
    const Ring ring = c.ring();
    for (std::size_t k = 0; k < nc; ++k) {
        // (f (x) f) Delta_C e_k
        Vector left = zero_vector(ring, nd * nd);
        for (const auto& [ij, coeff] : c.coproduct(k)) {
            const std::size_t i = ij / nc, j = ij % nc;
            for (std::size_t p = 0; p < nd; ++p) {
                const Scalar& fpi = f.matrix()(p, i);
                if (fpi.is_zero())
                    continue;
                for (std::size_t q = 0; q < nd; ++q) {
                    const Scalar& fqj = f.matrix()(q, j);
                    if (!fqj.is_zero())
                        left[p * nd + q] += coeff * fpi * fqj;
                }
            }
        }
        Vector right = d.comultiply(f.matrix().column_vector(k));
        compare_vectors(report, "comultiplicative", {k}, left, right);
    }
    Matrix eps = d.counit_matrix() * f.matrix();
    compare_vectors(report, "counital", {}, eps.row_vector(0), c.counit());
    return report;
}

bool is_coalgebra_morphism(const LinearMap& f, const CoalgebraPresentation& c,
                           const CoalgebraPresentation& d)
{
    return coalgebra_morphism_report(f, c, d, 0).passed;
}

CoalgebraPresentation perturbed_comultiplication(const CoalgebraPresentation& c,
                                                 std::array<std::size_t, 3> key,
                                                 const Scalar& delta)
{
    SparseTensor comul = c.comul();
    auto [it, fresh] = comul.emplace(key, delta);
    if (!fresh)
        it->second += delta;
    return CoalgebraPresentation(c.carrier(), std::move(comul), c.counit());
}

LinearMap convolution(const LinearMap& f, const LinearMap& g, const CoalgebraPresentation& c,
                      const AlgebraPresentation& a)
{
    if (f.domain().rank() != c.rank() || g.domain().rank() != c.rank() ||
        f.codomain().rank() != a.rank() || g.codomain().rank() != a.rank())
        throw std::invalid_argument("convolution operands must map the coalgebra into the algebra");
    const std::size_t n = c.rank();
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < n; ++k) {
        Vector col = zero_vector(a.ring(), a.rank());
        for (const auto& [ij, coeff] : c.coproduct(k)) {
            Vector p = a.multiply(f.matrix().column_vector(ij / n), g.matrix().column_vector(ij % n));
            for (std::size_t r = 0; r < p.size(); ++r)
                if (!p[r].is_zero())
                    col[r] += coeff * p[r];
        }
        cols.push_back(std::move(col));
    }
    return LinearMap(c.carrier(), a.carrier(), Matrix::from_columns(a.ring(), a.rank(), cols));
}

LinearMap convolution_unit(const CoalgebraPresentation& c, const AlgebraPresentation& a)
{
    return LinearMap(c.carrier(), a.carrier(), a.unit_matrix() * c.counit_matrix());
}

std::size_t table_identity(const MultiplicationTable& table)
{
    const std::size_t n = table.size();
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = table[e][i] == i && table[i][e] == i;
        if (ok)
            return e;
    }
    throw std::invalid_argument("multiplication table has no identity element");
}

void validate_monoid_table(const MultiplicationTable& table)
{
    const std::size_t n = table.size();
    if (n == 0)
        throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table) {
        if (row.size() != n)
            throw std::invalid_argument("multiplication table is not square");
        for (auto x : row)
            if (x >= n)
                throw std::invalid_argument("multiplication table entry out of range");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw std::invalid_argument("multiplication table is not associative at (" +
                                                std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
    table_identity(table);
}

AlgebraPresentation monoid_algebra(const MultiplicationTable& table, Ring ring,
                                   std::vector<std::string> labels)
{
    validate_monoid_table(table);
    const std::size_t n = table.size();
    SparseTensor mul;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul.emplace(std::array<std::size_t, 3>{i, j, table[i][j]}, Scalar::one(ring));
    return AlgebraPresentation(FreeModule(ring, n, std::move(labels)), std::move(mul),
                               unit_vector(ring, n, table_identity(table)));
}

} // namespace hopfdual
