#ifndef HOPFDUAL_FGMOD_HPP
#define HOPFDUAL_FGMOD_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hopfdual/linalg.hpp"
#include "hopfdual/matrix.hpp"

namespace hopfdual {

/// Free module R^rank with optional basis names.
class FreeModule {
public:
    FreeModule(Ring ring, std::size_t rank, std::vector<std::string> labels = {});

    const Ring& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of basis element i ("e<i>" when unnamed).
    std::string label(std::size_t i) const;

    /// The dual module, with the dual basis e_i^*.
    FreeModule dual() const;
    /// M (x) N with basis e_i (x) f_j at index i * rank(N) + j.
    FreeModule tensor(const FreeModule& other) const;

    friend bool operator==(const FreeModule& a, const FreeModule& b)
    {
        return a.ring_ == b.ring_ && a.rank_ == b.rank_;
    }

private:
    Ring ring_;
    std::size_t rank_;
    std::vector<std::string> labels_;
};

/// A morphism of free modules; matrix() is codomain-rank x domain-rank.
class LinearMap {
public:
    LinearMap(FreeModule domain, FreeModule codomain, Matrix matrix);

    static LinearMap identity(const FreeModule& m);

    const FreeModule& domain() const { return domain_; }
    const FreeModule& codomain() const { return codomain_; }
    const Matrix& matrix() const { return matrix_; }

    Vector operator()(std::span<const Scalar> x) const { return matrix_.apply(x); }

    /// (this o inner): first inner, then this.
    LinearMap after(const LinearMap& inner) const;
    /// this (x) other on M (x) N.
    LinearMap tensor(const LinearMap& other) const;

    friend bool operator==(const LinearMap& a, const LinearMap& b)
    {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.matrix_ == b.matrix_;
    }

private:
    FreeModule domain_;
    FreeModule codomain_;
    Matrix matrix_;
};

/// Submodule of a free module spanned by the columns of `generators`.
struct Submodule {
    FreeModule ambient;
    Matrix generators;

    Submodule(FreeModule ambient, Matrix generators);
};

/// f* : N* -> M* for f : M -> N. In dual bases this is the transpose.
LinearMap dual_map(const LinearMap& f);

/// The canonical map M -> M**, x |-> (phi |-> phi(x)).
LinearMap evaluation(const FreeModule& m);

/// Lambda : A* (x) B* -> (A (x) B)*, Lambda(f (x) g)(a (x) b) = f(a) g(b).
LinearMap lambda_map(const FreeModule& a, const FreeModule& b);
/// Three-fold analogue A* (x) B* (x) C* -> (A (x) B (x) C)*.
LinearMap lambda3_map(const FreeModule& a, const FreeModule& b, const FreeModule& c);

/// sigma : M (x) N -> N (x) M.
LinearMap swap(const FreeModule& m, const FreeModule& n);

/*
 * Probe grids.
 *
 * R^M (all functions on the set M) is replaced by functions on a finite set
 * of probe vectors. A probe matrix has one row per probe vector p, holding p's
 * coordinates, so row p applied to the dual-basis column e_i^* gives e_i^*(p).
 */
Matrix basis_probes(const FreeModule& m);

/// Pi_{M,N} : M* (x) N* -> R^{P x Q}, (f (x) g) |-> ((p, q) |-> f(p) g(q)) on
/// the probe grid P x Q. Rows are indexed by (p, q) as p * |Q| + q.
Matrix pi_map(const Matrix& probes_m, const Matrix& probes_n);
/// Pi_{M,N} on the basis grid.
Matrix pi_map(const FreeModule& m, const FreeModule& n);
/// Pi_{L,M,N} on a three-fold probe grid.
Matrix pi3_map(const Matrix& probes_l, const Matrix& probes_m, const Matrix& probes_n);

/// Over Z: true iff ambient / S is torsion-free, i.e. every nonzero
/// invariant factor of the generator matrix is 1. Fields are rejected.
bool is_pure_submodule(const Submodule& s);

/// A Z-basis of the submodule (columns), read off the Smith form.
Matrix submodule_basis(const Submodule& s);

} // namespace hopfdual

#endif
