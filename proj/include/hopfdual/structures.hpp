#ifndef HOPFDUAL_STRUCTURES_HPP
#define HOPFDUAL_STRUCTURES_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/fgmod.hpp"

namespace hopfdual {

/// Sparse 3-index tensor: index triple -> nonzero scalar.
using SparseTensor = std::map<std::array<std::size_t, 3>, Scalar>;
/// Sparse vector entries (index, nonzero coefficient), increasing index.
using SparseTerms = std::vector<std::pair<std::size_t, Scalar>>;

/*
 * Algebra by structure constants on a free module with basis e_0..e_{n-1}:
 *   e_i * e_j = sum_k mul[{i, j, k}] e_k,   1 = sum_i unit[i] e_i.
 * Zero constants are dropped on construction.
 */
class AlgebraPresentation {
public:
    AlgebraPresentation(FreeModule carrier, SparseTensor mul, Vector unit);

    const FreeModule& carrier() const { return carrier_; }
    const Ring& ring() const { return carrier_.ring(); }
    std::size_t rank() const { return carrier_.rank(); }
    const SparseTensor& mul() const { return mul_; }
    const Vector& unit() const { return unit_; }

    /// Coefficient of e_k in e_i * e_j.
    Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
    /// e_i * e_j as sparse terms.
    const SparseTerms& basis_product(std::size_t i, std::size_t j) const
    {
        return products_[i * rank() + j];
    }
    Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;

    /// m : A (x) A -> A as an n x n^2 matrix.
    Matrix multiplication_matrix() const;
    Matrix unit_matrix() const;

    friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b)
    {
        return a.carrier_ == b.carrier_ && a.mul_ == b.mul_ && a.unit_ == b.unit_;
    }

private:
    FreeModule carrier_;
    SparseTensor mul_;
    Vector unit_;
    std::vector<SparseTerms> products_;
};

/*
 * Coalgebra by structure constants:
 *   Delta e_k = sum_{i,j} comul[{k, i, j}] e_i (x) e_j,   eps(e_k) = counit[k].
 */
class CoalgebraPresentation {
public:
    CoalgebraPresentation(FreeModule carrier, SparseTensor comul, Vector counit);

    const FreeModule& carrier() const { return carrier_; }
    const Ring& ring() const { return carrier_.ring(); }
    std::size_t rank() const { return carrier_.rank(); }
    const SparseTensor& comul() const { return comul_; }
    const Vector& counit() const { return counit_; }

    Scalar constant(std::size_t k, std::size_t i, std::size_t j) const;
    /// Delta e_k as sparse terms over the tensor-square index i * n + j.
    const SparseTerms& coproduct(std::size_t k) const { return coproducts_[k]; }
    /// Delta applied to an arbitrary vector (dense, length n^2).
    Vector comultiply(std::span<const Scalar> x) const;

    /// Delta : C -> C (x) C as an n^2 x n matrix.
    Matrix comultiplication_matrix() const;
    Matrix counit_matrix() const;

    friend bool operator==(const CoalgebraPresentation& a, const CoalgebraPresentation& b)
    {
        return a.carrier_ == b.carrier_ && a.comul_ == b.comul_ && a.counit_ == b.counit_;
    }

private:
    FreeModule carrier_;
    SparseTensor comul_;
    Vector counit_;
    std::vector<SparseTerms> coproducts_;
};

struct Witness {
    std::string law;
    std::vector<std::size_t> indices;
    Scalar left;
    Scalar right;
};

/// passed <=> witnesses is empty. At most `limit` witnesses are kept.
struct AxiomReport {
    bool passed = true;
    std::vector<Witness> witnesses;
    std::size_t limit = 5;

    explicit AxiomReport(std::size_t witness_limit = 5) : limit(witness_limit) {}

    void fail(std::string law, std::vector<std::size_t> indices, Scalar left, Scalar right);
    /// Appends the other report's witnesses (respecting this report's limit).
    void merge(const AxiomReport& other);
    std::string to_string() const;
};

inline constexpr std::size_t kDefaultWitnessLimit = 5;

/// Associativity and both unit laws, exhaustively on basis triples.
AxiomReport check_algebra_axioms(const AlgebraPresentation& a,
                                 std::size_t witness_limit = kDefaultWitnessLimit);
/// Coassociativity and both counit laws.
AxiomReport check_coalgebra_axioms(const CoalgebraPresentation& c,
                                   std::size_t witness_limit = kDefaultWitnessLimit);

AlgebraPresentation opposite_algebra(const AlgebraPresentation& a);
/// Componentwise structure on A (x) B, basis index i * rank(B) + j.
AlgebraPresentation tensor_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b);
CoalgebraPresentation tensor_coalgebra(const CoalgebraPresentation& c,
                                       const CoalgebraPresentation& d);

/// f o m_A = m_B o (f (x) f) on basis pairs and f(1_A) = 1_B.
AxiomReport algebra_morphism_report(const LinearMap& f, const AlgebraPresentation& a,
                                    const AlgebraPresentation& b,
                                    std::size_t witness_limit = kDefaultWitnessLimit);
bool is_algebra_morphism(const LinearMap& f, const AlgebraPresentation& a,
                         const AlgebraPresentation& b);

/// (f (x) f) o Delta_C = Delta_D o f and eps_D o f = eps_C.
AxiomReport coalgebra_morphism_report(const LinearMap& f, const CoalgebraPresentation& c,
                                      const CoalgebraPresentation& d,
                                      std::size_t witness_limit = kDefaultWitnessLimit);
bool is_coalgebra_morphism(const LinearMap& f, const CoalgebraPresentation& c,
                           const CoalgebraPresentation& d);

/// Copy of c with delta added to the constant comul[key].
CoalgebraPresentation perturbed_comultiplication(const CoalgebraPresentation& c,
                                                 std::array<std::size_t, 3> key,
                                                 const Scalar& delta);

/// m_A o (f (x) g) o Delta_C for f, g : C -> A.
LinearMap convolution(const LinearMap& f, const LinearMap& g, const CoalgebraPresentation& c,
                      const AlgebraPresentation& a);
/// e_A o eps_C, the unit of the convolution monoid.
LinearMap convolution_unit(const CoalgebraPresentation& c, const AlgebraPresentation& a);

/// table[i][j] = index of the product of elements i and j.
using MultiplicationTable = std::vector<std::vector<std::size_t>>;

/// Two-sided identity of a table, or throws std::invalid_argument.
std::size_t table_identity(const MultiplicationTable& table);
/// Throws std::invalid_argument unless the table is square, closed,
/// associative and has an identity.
void validate_monoid_table(const MultiplicationTable& table);

/// Monoid algebra R[M]: e_i * e_j = e_{table[i][j]}, unit = identity element.
AlgebraPresentation monoid_algebra(const MultiplicationTable& table, Ring ring,
                                   std::vector<std::string> labels = {});

} // namespace hopfdual

#endif
