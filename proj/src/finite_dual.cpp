#include "hopfdual/finite_dual.hpp"

#include <algorithm>

#include "hopfdual/duality.hpp"
#include "hopfdual/linalg.hpp"

namespace hopfdual {

FiniteDualCoalgebra::FiniteDualCoalgebra(AlgebraPresentation ambient,
                                         CoalgebraPresentation coalgebra, Matrix kappa)
    : ambient_(std::move(ambient)), coalgebra_(std::move(coalgebra)), kappa_(std::move(kappa))
{
    const auto& a = std::get<AlgebraPresentation>(ambient_);
    if (!(a.ring() == coalgebra_.ring()) || !(kappa_.ring() == a.ring()))
        throw std::domain_error("finite dual: ambient, coalgebra and kappa over different rings");
    if (kappa_.rows() != a.rank() || kappa_.cols() != coalgebra_.rank())
        throw std::invalid_argument("finite dual: kappa must be rank(A) x rank(C)");
}

FiniteDualCoalgebra::FiniteDualCoalgebra(PolynomialAlgebra ambient,
                                         CoalgebraPresentation coalgebra,
                                         std::vector<RecurrentSequence> functionals)
    : ambient_(ambient), coalgebra_(std::move(coalgebra)), kappa_(ambient.ring, 0, 0),
      functionals_(std::move(functionals))
{
    if (!(ambient.ring == coalgebra_.ring()))
        throw std::domain_error("finite dual: ambient and coalgebra over different rings");
    if (functionals_.size() != coalgebra_.rank())
        throw std::invalid_argument("finite dual: one functional per basis element required");
    for (const auto& g : functionals_)
        if (!(g.ring() == ambient.ring))
            throw std::domain_error("finite dual: functional over a different ring");
}

const AlgebraPresentation& FiniteDualCoalgebra::algebra() const
{
    if (polynomial())
        throw std::logic_error("finite dual of R[x] has no finite-rank ambient");
    return std::get<AlgebraPresentation>(ambient_);
}

const Matrix& FiniteDualCoalgebra::kappa() const
{
    if (polynomial())
        throw std::logic_error("finite dual of R[x] has no kappa matrix; use kappa_probe");
    return kappa_;
}

Scalar FiniteDualCoalgebra::value(std::size_t k, std::size_t m) const
{
    if (polynomial())
        return functionals_.at(k).at(m);
    return kappa_.at(m, k);
}

FiniteDualCoalgebra FiniteDualCoalgebra::with_coalgebra(CoalgebraPresentation coalgebra) const
{
    if (!(coalgebra.carrier() == coalgebra_.carrier()))
        throw std::invalid_argument("with_coalgebra: carrier differs");
    if (polynomial())
        return FiniteDualCoalgebra(std::get<PolynomialAlgebra>(ambient_), std::move(coalgebra),
                                   functionals_);
    return FiniteDualCoalgebra(algebra(), std::move(coalgebra), kappa_);
}

FiniteDualCoalgebra finite_dual_findim(const AlgebraPresentation& a)
{
    return FiniteDualCoalgebra(a, dual_coalgebra_fgp(a), Matrix::identity(a.ring(), a.rank()));
}

OrbitReport orbit_module(const AlgebraPresentation& a, const Vector& f)
{
    const std::size_t n = a.rank();
    if (f.size() != n)
        throw std::invalid_argument("orbit_module: functional has the wrong length");
    const Ring ring = a.ring();
    // column i: (e_i . f)(e_j) = f(e_j e_i)
    Matrix gens(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar v = Scalar::zero(ring);
            for (const auto& [k, c] : a.basis_product(j, i))
                v += c * f[k];
            gens(j, i) = std::move(v);
        }
    const auto cols = independent_columns(gens);
    return OrbitReport{true, gens.select_columns(cols), n};
}

MembershipReport polyalg_membership(const RecurrentSequence& f)
{
    MembershipReport rep;
    const Ring ring = f.ring();
    const std::size_t d = f.order();
    const Vector& init = f.initial();
    const Vector& rec = f.recurrence();

    for (std::size_t n = d; n < init.size(); ++n) {
        Scalar expected = Scalar::zero(ring);
        for (std::size_t i = 1; i <= d; ++i)
            expected += rec[i - 1] * init[n - i];
        if (expected != init[n]) {
            rep.diagnostic = "stored term a_" + std::to_string(n) + " = " + init[n].to_string() +
                             " but the recurrence gives " + expected.to_string();
            return rep;
        }
    }

    const std::size_t bound = std::max<std::size_t>(d, 1);
    const Vector terms = f.prefix(2 * bound + 6);
    const auto minimal = minimal_recurrence(ring, terms, bound);
    if (!minimal) {
        rep.diagnostic = "no recurrence of order <= " + std::to_string(bound) +
                         " fits the first " + std::to_string(terms.size()) + " terms";
        return rep;
    }
    const std::size_t m = minimal->size();
    if (m > 0)
        rep.hankel_ranks.push_back(rank(hankel_matrix(terms, m, m)));
    for (std::size_t s = m + 1; s <= m + 2; ++s)
        for (std::size_t offset = 0; offset <= 2; ++offset) {
            const std::size_t r = rank(hankel_matrix(terms, s, s, offset));
            rep.hankel_ranks.push_back(r);
            if (r > m) {
                rep.diagnostic = "Hankel rank " + std::to_string(r) + " at size " +
                                 std::to_string(s) + " exceeds the recurrence order " +
                                 std::to_string(m);
                return rep;
            }
        }
    if (m > 0 && rep.hankel_ranks.front() != m) {
        rep.diagnostic = "leading Hankel block is singular at the minimal order";
        return rep;
    }
    rep.member = true;
    rep.minimal_order = m;
    rep.minimal_recurrence = *minimal;
    return rep;
}

bool is_in_finite_dual_polyalg(const RecurrentSequence& f)
{
    return polyalg_membership(f).member;
}

FiniteDualCoalgebra orbit_coalgebra_polyalg(const RecurrentSequence& f)
{
    const MembershipReport rep = polyalg_membership(f);
    if (!rep.member)
        throw MembershipError("functional is not in the finite dual: " + rep.diagnostic);
    const Ring ring = f.ring();
    const std::size_t d = rep.minimal_order;

    std::vector<std::string> labels;
    for (std::size_t k = 0; k < d; ++k)
        labels.push_back(k == 0 ? "f" : "x^" + std::to_string(k) + ".f");
    const FreeModule carrier(ring, d, labels);

    const RecurrentSequence base(ring, f.prefix(d), rep.minimal_recurrence);
    std::vector<RecurrentSequence> g;
    for (std::size_t k = 0; k < d; ++k)
        g.push_back(base.shift(k));

    const std::size_t grid = std::max<std::size_t>(d, 3);
    const Vector a = f.prefix(4 * grid + d);

    // H[m][i] = g_i(x^m) = a_{m+i}; solve kron(H, H) vec(D_k) = (a_{k+m+n})_{m,n}
    Matrix h(ring, grid, d);
    for (std::size_t m = 0; m < grid; ++m)
        for (std::size_t i = 0; i < d; ++i)
            h(m, i) = a[m + i];
    const Matrix system = kronecker(h, h);
    Matrix rhs(ring, grid * grid, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < grid; ++m)
            for (std::size_t n = 0; n < grid; ++n)
                rhs(m * grid + n, k) = a[k + m + n];
    const auto solution = solve(system, rhs);
    if (!solution)
        throw MembershipError("inconsistent probe system for the orbit comultiplication");

    SparseTensor comul;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t ij = 0; ij < d * d; ++ij)
            if (!(*solution)(ij, k).is_zero())
                comul.emplace(std::array<std::size_t, 3>{k, ij / d, ij % d}, (*solution)(ij, k));

    const std::size_t wide = 2 * grid;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < wide; ++m)
            for (std::size_t n = 0; n < wide; ++n) {
                Scalar v = Scalar::zero(ring);
                for (const auto& [key, c] : comul)
                    if (key[0] == k)
                        v += c * a[m + key[1]] * a[n + key[2]];
                if (v != a[k + m + n])
                    throw MembershipError("orbit comultiplication fails on the re-check grid at (" +
                                          std::to_string(m) + ", " + std::to_string(n) + ")");
            }

    Vector counit(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(d));
    return FiniteDualCoalgebra(PolynomialAlgebra{ring},
                               CoalgebraPresentation(carrier, std::move(comul), std::move(counit)),
                               std::move(g));
}

Matrix kappa_probe(const FiniteDualCoalgebra& fd, std::size_t probe_degree)
{
    if (!fd.polynomial())
        return fd.kappa();
    const std::size_t r = fd.rank();
    Matrix m(fd.ring(), probe_degree + 1, r);
    for (std::size_t k = 0; k < r; ++k) {
        const Vector vals = fd.functionals()[k].prefix(probe_degree + 1);
        for (std::size_t p = 0; p <= probe_degree; ++p)
            m(p, k) = vals[p];
    }
    return m;
}

LinearMap phi_map(const FiniteDualCoalgebra& fa, const FiniteDualCoalgebra& fb)
{
    const AlgebraPresentation& a = fa.algebra();
    const AlgebraPresentation& b = fb.algebra();
    const FiniteDualCoalgebra fab = finite_dual_findim(tensor_algebra(a, b));
    const Matrix rhs =
        lambda_map(a.carrier(), b.carrier()).matrix() * kronecker(fa.kappa(), fb.kappa());
    const auto phi = solve(fab.kappa(), rhs);
    if (!phi)
        throw std::runtime_error("phi_map: image of A° (x) B° is not inside (A (x) B)°");
    return LinearMap(fa.coalgebra().carrier().tensor(fb.coalgebra().carrier()),
                     fab.coalgebra().carrier(), *phi);
}

namespace {

void check_kappa_injective(const Matrix& probes, std::size_t r, AxiomReport& report)
{
    if (has_full_column_rank(probes))
        return;
    const Ring ring = probes.ring();
    const std::size_t found = probes.ring().is_field() ? rank(probes) : 0;
    report.fail("kappa injective", {}, Scalar(ring, static_cast<long>(found)),
                Scalar(ring, static_cast<long>(r)));
}

} // namespace

AxiomReport check_induced_quotient(const FiniteDualCoalgebra& fd, std::size_t probe_degree,
                                   std::size_t witness_limit)
{
    AxiomReport report(witness_limit);
    const Ring ring = fd.ring();
    const CoalgebraPresentation& c = fd.coalgebra();
    const std::size_t r = c.rank();

    if (!fd.polynomial()) {
        const AlgebraPresentation& a = fd.algebra();
        const std::size_t n = a.rank();
        const Matrix& kappa = fd.kappa();
        const Matrix lhs = lambda_map(a.carrier(), a.carrier()).matrix() *
                           (kronecker(kappa, kappa) * c.comultiplication_matrix());
        const Matrix rhs = a.multiplication_matrix().transpose() * kappa;
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t p = 0; p < n * n; ++p)
                if (lhs(p, k) != rhs(p, k))
                    report.fail("induced comultiplication", {k, p / n, p % n}, lhs(p, k), rhs(p, k));
        for (std::size_t k = 0; k < r; ++k) {
            Scalar at_one = Scalar::zero(ring);
            for (std::size_t i = 0; i < n; ++i)
                at_one += a.unit()[i] * kappa(i, k);
            if (c.counit()[k] != at_one)
                report.fail("induced counit", {k}, c.counit()[k], at_one);
        }
        check_kappa_injective(kappa, r, report);
        return report;
    }

    const std::size_t top = probe_degree;
    std::vector<Vector> vals;
    for (const auto& g : fd.functionals())
        vals.push_back(g.prefix(2 * top + 1));
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t m = 0; m <= top; ++m)
            for (std::size_t n = 0; n <= top; ++n) {
                Scalar lhs = Scalar::zero(ring);
                for (const auto& [ij, coeff] : c.coproduct(k))
                    lhs += coeff * vals[ij / r][m] * vals[ij % r][n];
                if (lhs != vals[k][m + n])
                    report.fail("induced comultiplication", {k, m, n}, lhs, vals[k][m + n]);
            }
        if (c.counit()[k] != vals[k][0])
            report.fail("induced counit", {k}, c.counit()[k], vals[k][0]);
    }
    if (r > 0)
        check_kappa_injective(kappa_probe(fd, std::max(top, 2 * r)), r, report);
    return report;
}

bool check_minimality(const AlgebraPresentation& a, const CoalgebraPresentation& c,
                      const LinearMap& iota)
{
    if (iota.domain().rank() != c.rank() || iota.codomain().rank() != a.rank())
        throw std::invalid_argument("check_minimality: iota must map C into A*");
    if (!has_full_column_rank(iota.matrix()))
        throw std::invalid_argument("check_minimality: iota is not injective");
    const FiniteDualCoalgebra sub(a, c, iota.matrix());
    if (!check_induced_quotient(sub).passed)
        return false;

    const FiniteDualCoalgebra ao = finite_dual_findim(a);
    for (std::size_t k = 0; k < c.rank(); ++k) {
        const OrbitReport orbit = orbit_module(a, iota.matrix().column_vector(k));
        if (!orbit.finitely_generated || !solve(ao.kappa(), orbit.basis))
            return false;
    }
    const auto factored = solve(ao.kappa(), iota.matrix());
    if (!factored)
        return false;
    return is_coalgebra_morphism(LinearMap(c.carrier(), ao.coalgebra().carrier(), *factored), c,
                                 ao.coalgebra());
}

} // namespace hopfdual
