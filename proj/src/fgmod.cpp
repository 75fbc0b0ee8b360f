#include "hopfdual/fgmod.hpp"

#include <stdexcept>

namespace hopfdual {

FreeModule::FreeModule(Ring ring, std::size_t rank, std::vector<std::string> labels)
    : ring_(ring), rank_(rank), labels_(std::move(labels))
{
    if (!labels_.empty() && labels_.size() != rank_)
        throw std::invalid_argument("label count does not match rank");
}

std::string FreeModule::label(std::size_t i) const
{
    if (i >= rank_)
        throw std::out_of_range("basis index out of range");
    return labels_.empty() ? "e" + std::to_string(i) : labels_[i];
}

FreeModule FreeModule::dual() const
{
    std::vector<std::string> names;
    if (!labels_.empty())
        for (const auto& l : labels_)
            names.push_back(l + "*");
    return FreeModule(ring_, rank_, std::move(names));
}

FreeModule FreeModule::tensor(const FreeModule& other) const
{
    if (!(ring_ == other.ring_))
        throw std::domain_error("tensor product of modules over different rings");
    std::vector<std::string> names;
    if (!labels_.empty() || !other.labels_.empty())
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < other.rank_; ++j)
                names.push_back(label(i) + "(x)" + other.label(j));
    return FreeModule(ring_, rank_ * other.rank_, std::move(names));
}

LinearMap::LinearMap(FreeModule domain, FreeModule codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != codomain_.rank() || matrix_.cols() != domain_.rank())
        throw std::invalid_argument("linear map matrix is " + std::to_string(matrix_.rows()) +
                                    "x" + std::to_string(matrix_.cols()) + ", expected " +
                                    std::to_string(codomain_.rank()) + "x" +
                                    std::to_string(domain_.rank()));
    if (!(matrix_.ring() == domain_.ring()) || !(matrix_.ring() == codomain_.ring()))
        throw std::domain_error("linear map base rings disagree");
}

LinearMap LinearMap::identity(const FreeModule& m)
{
    return LinearMap(m, m, Matrix::identity(m.ring(), m.rank()));
}

LinearMap LinearMap::after(const LinearMap& inner) const
{
    if (!(inner.codomain_ == domain_))
        throw std::invalid_argument("composition of incompatible maps");
    return LinearMap(inner.domain_, codomain_, matrix_ * inner.matrix_);
}

LinearMap LinearMap::tensor(const LinearMap& other) const
{
    return LinearMap(domain_.tensor(other.domain_), codomain_.tensor(other.codomain_),
                     kronecker(matrix_, other.matrix_));
}

Submodule::Submodule(FreeModule ambient_, Matrix generators_)
    : ambient(std::move(ambient_)), generators(std::move(generators_))
{
    if (generators.rows() != ambient.rank())
        throw std::invalid_argument("submodule generators do not live in the ambient module");
    if (!(generators.ring() == ambient.ring()))
        throw std::domain_error("submodule generators over a different ring");
}

LinearMap dual_map(const LinearMap& f)
{
    return LinearMap(f.codomain().dual(), f.domain().dual(), f.matrix().transpose());
}

namespace {

// <e_i^*, e_j> in the chosen bases
Scalar pairing(const Ring& ring, std::size_t functional, std::size_t vector)
{
    return functional == vector ? Scalar::one(ring) : Scalar::zero(ring);
}

} // namespace

LinearMap evaluation(const FreeModule& m)
{
    // ev(e_j) is the functional phi |-> phi(e_j) on M*; its coordinate on the
    // double-dual basis element e_i^** is ev(e_j)(e_i^*) = e_i^*(e_j).
    const Ring ring = m.ring();
    Matrix e(ring, m.rank(), m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j)
            e(i, j) = pairing(ring, i, j);
    return LinearMap(m, m.dual().dual(), std::move(e));
}

LinearMap lambda_map(const FreeModule& a, const FreeModule& b)
{
    // column (i, j) is Lambda(e_i^* (x) f_j^*); row (k, l) evaluates it at e_k (x) f_l
    const Ring ring = a.ring();
    const std::size_t na = a.rank(), nb = b.rank();
    Matrix m(ring, na * nb, na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    m(k * nb + l, i * nb + j) = pairing(ring, i, k) * pairing(ring, j, l);
    return LinearMap(a.dual().tensor(b.dual()), a.tensor(b).dual(), std::move(m));
}

LinearMap lambda3_map(const FreeModule& a, const FreeModule& b, const FreeModule& c)
{
    const Ring ring = a.ring();
    const std::size_t na = a.rank(), nb = b.rank(), nc = c.rank();
    const std::size_t n = na * nb * nc;
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nc; ++k)
                for (std::size_t p = 0; p < na; ++p)
                    for (std::size_t q = 0; q < nb; ++q)
                        for (std::size_t r = 0; r < nc; ++r)
                            m((p * nb + q) * nc + r, (i * nb + j) * nc + k) =
                                pairing(ring, i, p) * pairing(ring, j, q) * pairing(ring, k, r);
    return LinearMap(a.dual().tensor(b.dual()).tensor(c.dual()),
                     a.tensor(b).tensor(c).dual(), std::move(m));
}

LinearMap swap(const FreeModule& m, const FreeModule& n)
{
    const std::size_t nm = m.rank(), nn = n.rank();
    Matrix s(m.ring(), nm * nn, nm * nn);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            s(j * nm + i, i * nn + j) = Scalar::one(m.ring());
    return LinearMap(m.tensor(n), n.tensor(m), std::move(s));
}

Matrix basis_probes(const FreeModule& m) { return Matrix::identity(m.ring(), m.rank()); }

Matrix pi_map(const Matrix& probes_m, const Matrix& probes_n)
{
    // the entry at ((p, q), (i, j)) is e_i^*(p) * e_j^*(q)
    return kronecker(probes_m, probes_n);
}

Matrix pi_map(const FreeModule& m, const FreeModule& n)
{
    return pi_map(basis_probes(m), basis_probes(n));
}

Matrix pi3_map(const Matrix& probes_l, const Matrix& probes_m, const Matrix& probes_n)
{
    return kronecker(kronecker(probes_l, probes_m), probes_n);
}

bool is_pure_submodule(const Submodule& s)
{
    if (s.ambient.ring().kind() != Ring::Kind::Integer)
        throw std::domain_error("purity is only meaningful over Z here");
    for (const auto& d : invariant_factors(s.generators))
        if (d != 0 && d != 1)
            return false;
    return true;
}

Matrix submodule_basis(const Submodule& s)
{
    // G = U D V with V unimodular, so im G = im(U D): the columns U_i * d_i, d_i != 0
    const auto [u, d, v] = smith_normal_form(s.generators);
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
        if (d(i, i).is_zero())
            continue;
        Vector c = u.column_vector(i);
        for (auto& x : c)
            x *= d(i, i);
        cols.push_back(std::move(c));
    }
    return Matrix::from_columns(s.ambient.ring(), s.ambient.rank(), cols);
}

} // namespace hopfdual
