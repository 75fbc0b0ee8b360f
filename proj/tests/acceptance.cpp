// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Every check is an exact equality; each criterion must finish within 5 s.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hopfdual/duality.hpp"
#include "hopfdual/families.hpp"
#include "hopfdual/finite_dual.hpp"
#include "hopfdual/hopf.hpp"
#include "hopfdual/recurrence.hpp"
#include "hopfdual/verify.hpp"

using namespace hopfdual;

namespace {

const Ring Q = Ring::rationals();
const Ring Z = Ring::integers();
constexpr double kBudgetSeconds = 5.0;

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

// 1

Outcome fgp_duality()
{
    Outcome o;
    for (Ring ring : {Q, Ring::prime_field(5)})
        for (const auto& na : algebra_corpus(ring)) {
            const AlgebraPresentation& a = na.algebra;
            if (a.rank() > 6)
                continue;
            const AlgebraPresentation dd = dual_algebra(dual_coalgebra_fgp(a));
            const std::size_t n = a.rank();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        o.require(dd.constant(i, j, k) == a.constant(i, j, k), na.name + " constant");
            o.require(dd.unit() == a.unit(), na.name + " unit");
            const LinearMap ev = evaluation(a.carrier());
            o.require(is_algebra_morphism(LinearMap(a.carrier(), dd.carrier(), ev.matrix()), a, dd),
                      na.name + " evaluation not multiplicative");
            o.require(inverse(ev.matrix()).has_value(), na.name + " evaluation not invertible");
            o.require(verify_fgp_duality(a).passed, na.name + " verify_fgp_duality");
        }
    return o;
}

// 2

Outcome dual_algebra_functor()
{
    Outcome o;
    for (std::size_t n : {2, 3}) {
        const AlgebraPresentation a = dual_algebra(comatrix_coalgebra(n, Q));
        for (std::size_t i = 0; i < n * n; ++i)
            for (std::size_t j = 0; j < n * n; ++j)
                for (std::size_t k = 0; k < n * n; ++k) {
                    // E_ab E_cd = [b = c] E_ad
                    const std::size_t ra = i / n, rb = i % n, rc = j / n, rd = j % n;
                    const long expected = rb == rc && k == ra * n + rd ? 1 : 0;
                    o.require(a.constant(i, j, k) == Scalar(Q, expected), "comatrix " + std::to_string(n));
                }
        for (std::size_t i = 0; i < n * n; ++i)
            o.require(a.unit()[i] == Scalar(Q, i / n == i % n ? 1L : 0L), "unit");
    }
    return o;
}

// 3

std::vector<mpz_class> fibonacci_oracle(std::size_t count)
{
    std::vector<mpz_class> f{0, 1};
    while (f.size() < count)
        f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
}

Outcome polynomial_finite_dual()
{
    Outcome o;
    for (long c : {2L, -3L, 1L}) {
        const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(RecurrentSequence::geometric(Q, Scalar(Q, c)));
        o.require(fd.rank() == 1 && fd.coalgebra().constant(0, 0, 0).is_one() &&
                      fd.coalgebra().comul().size() == 1 && fd.coalgebra().counit()[0].is_one(),
                  "geometric " + std::to_string(c) + " not grouplike");
    }
    {
        // g0 = delta_1, g1 = delta_0
        const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(RecurrentSequence::delta(Q, 1));
        const CoalgebraPresentation& c = fd.coalgebra();
        o.require(fd.rank() == 2, "delta_1 orbit rank");
        if (fd.rank() == 2) {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    o.require(c.constant(0, i, j) == Scalar(Q, i + j == 1 ? 1L : 0L), "delta_1 not primitive");
                    o.require(c.constant(1, i, j) == Scalar(Q, i + j == 2 ? 1L : 0L), "delta_0 not grouplike");
                }
            o.require(c.counit()[0].is_zero() && c.counit()[1].is_one(), "delta counit");
            for (std::size_t m = 0; m < 6; ++m) {
                o.require(fd.value(0, m) == Scalar(Q, m == 1 ? 1L : 0L), "g0 values");
                o.require(fd.value(1, m) == Scalar(Q, m == 0 ? 1L : 0L), "g1 values");
            }
        }
    }
    {
        const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(RecurrentSequence::fibonacci(Q));
        const auto fib = fibonacci_oracle(32);
        o.require(fd.rank() == 2, "Fibonacci orbit rank");
        for (std::size_t m = 0; m <= 10; ++m)
            for (std::size_t n = 0; n <= 10; ++n) {
                // f(x^{m+n}) = sum D[0][i][j] g_i(x^m) g_j(x^n) with g_i(x^m) = F_{m+i}
                Scalar s = Scalar::zero(Q);
                for (const auto& [key, coeff] : fd.coalgebra().comul())
                    if (key[0] == 0)
                        s += coeff * Scalar(Q, fib[m + key[1]]) * Scalar(Q, fib[n + key[2]]);
                o.require(s == Scalar(Q, fib[m + n]), "Fibonacci at m=" + std::to_string(m) +
                                                          " n=" + std::to_string(n));
            }
    }
    {
        Vector terms;
        for (long n = 0; n < 10; ++n)
            terms.push_back(Scalar(Q, 1, n + 1));
        o.require(!minimal_recurrence(terms, 4).has_value(), "1/(n+1) accepted at max_order 4");
        // 5 x 5 Hilbert determinant 1/266716800000 is nonzero, so no order-4 recurrence
        o.require(determinant(hankel_matrix(terms, 5, 5)) == Scalar(Q, 1, mpz_class("266716800000")),
                  "Hilbert determinant");
    }
    return o;
}

// 4

Outcome induced_quotient_uniqueness()
{
    Outcome o;
    std::vector<std::pair<std::string, FiniteDualCoalgebra>> corpus;
    for (const auto& na : algebra_corpus(Q))
        corpus.emplace_back(na.name, finite_dual_findim(na.algebra));
    for (const auto& ns : recurrent_corpus())
        corpus.emplace_back(ns.name, orbit_coalgebra_polyalg(ns.sequence));
    for (const auto& [name, fd] : corpus) {
        o.require(check_induced_quotient(fd).passed, name + " unperturbed fails");
        const std::size_t r = fd.rank();
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    const auto bad = fd.with_coalgebra(
                        perturbed_comultiplication(fd.coalgebra(), {k, i, j}, Scalar::one(Q)));
                    o.require(!check_induced_quotient(bad, kDefaultProbeDegree, 1).passed,
                              name + " perturbation survives");
                }
    }
    return o;
}

// 5

// sum S(a_(1)) a_(2) and sum a_(1) S(a_(2)) against eps(a) 1, straight from the constants
bool antipode_oracle(const HopfPresentation& h)
{
    const std::size_t n = h.rank();
    const Matrix& s = h.antipode.matrix();
    for (std::size_t k = 0; k < n; ++k) {
        Vector left = zero_vector(h.ring(), n), right = zero_vector(h.ring(), n);
        for (const auto& [key, c] : h.coalgebra().comul()) {
            if (key[0] != k)
                continue;
            for (std::size_t p = 0; p < n; ++p) {
                const Scalar sp_i = s(p, key[1]), sp_j = s(p, key[2]);
                for (std::size_t q = 0; q < n; ++q) {
                    left[q] += c * sp_i * h.algebra().constant(p, key[2], q);
                    right[q] += c * sp_j * h.algebra().constant(key[1], p, q);
                }
            }
        }
        for (std::size_t q = 0; q < n; ++q) {
            const Scalar expected = h.coalgebra().counit()[k] * h.algebra().unit()[q];
            if (left[q] != expected || right[q] != expected)
                return false;
        }
    }
    return true;
}

Outcome antipode_transfer()
{
    Outcome o;
    std::vector<std::pair<std::string, HopfPresentation>> cases;
    for (std::size_t n = 1; n <= 6; ++n)
        cases.emplace_back("Q[Z/" + std::to_string(n) + "]", group_algebra_hopf(cyclic_group_table(n), Q));
    cases.emplace_back("Q[S3]", group_algebra_hopf(symmetric_group_table(3), Q));
    cases.emplace_back("H4", sweedler_h4(Q));
    for (const auto& [name, h] : cases) {
        const HopfPresentation d = dual_hopf_findim(h);
        o.require(check_antipode(d).passed, name + " dual antipode");
        o.require(antipode_oracle(d), name + " dual antipode oracle");
    }
    const Matrix s = dual_hopf_findim(sweedler_h4(Q)).antipode.matrix();
    o.require(!(s * s).is_identity(), "H4 dual S^2 = id");
    o.require((s * s * s * s).is_identity(), "H4 dual S^4 != id");
    return o;
}

// 6

Scalar cofactor_det(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n == 1)
        return m(0, 0);
    Scalar total = Scalar::zero(m.ring());
    for (std::size_t c = 0; c < n; ++c) {
        Matrix minor(m.ring(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t cc = 0, k = 0; cc < n; ++cc)
                if (cc != c)
                    minor(r - 1, k++) = m(r, cc);
        const Scalar term = m(0, c) * cofactor_det(minor);
        total += c % 2 ? -term : term;
    }
    return total;
}

// torsion-free quotient iff the gcd of the top-rank minors is 1
bool pure_by_minors(const Matrix& g)
{
    const std::size_t r = rank(change_ring(g, Q));
    if (r == 0)
        return true;
    mpz_class d = 0;
    std::vector<bool> rs(g.rows()), cs(g.cols());
    std::fill(rs.end() - static_cast<std::ptrdiff_t>(r), rs.end(), true);
    do {
        std::fill(cs.begin(), cs.end(), false);
        std::fill(cs.end() - static_cast<std::ptrdiff_t>(r), cs.end(), true);
        do {
            Matrix minor(Z, r, r);
            for (std::size_t i = 0, a = 0; i < g.rows(); ++i) {
                if (!rs[i])
                    continue;
                for (std::size_t j = 0, b = 0; j < g.cols(); ++j)
                    if (cs[j])
                        minor(a, b++) = g(i, j);
                ++a;
            }
            const mpz_class v = cofactor_det(minor).numerator();
            mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t());
        } while (std::next_permutation(cs.begin(), cs.end()));
    } while (std::next_permutation(rs.begin(), rs.end()));
    return d == 1;
}

bool snf_injective(const Matrix& m)
{
    const SmithForm s = smith_normal_form(m);
    if (!(s.U * s.D * s.V == m))
        return false;
    const auto f = invariant_factors(m);
    if (f.size() != m.cols())
        return false;
    for (const auto& d : f)
        if (d == 0)
            return false;
    return true;
}

Outcome noetherian_hypotheses()
{
    Outcome o;
    for (std::size_t a = 1; a <= 4; ++a) {
        const FreeModule m(Z, a);
        o.require(snf_injective(pi_map(m, m)), "Pi on Z^" + std::to_string(a));
        const Matrix p = basis_probes(m);
        o.require(snf_injective(pi3_map(p, p, p)), "Pi3 on Z^" + std::to_string(a));
    }
    std::size_t misclassified = 0;
    for (const auto& pc : purity_corpus()) {
        const bool verdict = is_pure_submodule(pc.submodule);
        misclassified += verdict != pc.pure;
        o.require(pure_by_minors(pc.submodule.generators) == pc.pure, pc.name + " label disagrees with minors");
    }
    o.require(misclassified == 0, std::to_string(misclassified) + " purity misclassifications");
    return o;
}

// 7

Outcome adjunction_triangles()
{
    Outcome o;
    const std::vector<NamedAlgebra> algebras = {
        {"Q[Z/2]", monoid_algebra(cyclic_group_table(2), Q)},
        {"Q[Z/3]", monoid_algebra(cyclic_group_table(3), Q)},
        {"M2", matrix_algebra(2, Q)},
    };
    const std::vector<NamedCoalgebra> coalgebras = {
        {"rank-1", base_coalgebra(Q)},
        {"comatrix-2", comatrix_coalgebra(2, Q)},
        {"divided-power-2", divided_power_coalgebra(2, Q)},
    };
    for (const auto& na : algebras)
        for (const auto& nc : coalgebras) {
            const std::string name = na.name + " x " + nc.name;
            const SuiteReport r = verify_adjunction_triangles(na.algebra, nc.coalgebra, name, 1);
            o.require(r.passed(), name);
            // in dual bases both evaluations are identity matrices, so the
            // triangles reduce to equality of the double duals with the originals
            const CoalgebraPresentation cdd = dual_coalgebra_fgp(dual_algebra(nc.coalgebra));
            const AlgebraPresentation add = dual_algebra(dual_coalgebra_fgp(na.algebra));
            o.require(cdd.comul() == nc.coalgebra.comul() && cdd.counit() == nc.coalgebra.counit(),
                      nc.name + " double dual");
            o.require(add.mul() == na.algebra.mul() && add.unit() == na.algebra.unit(), na.name + " double dual");
            const Matrix evc = evaluation(nc.coalgebra.carrier()).matrix();
            const Matrix evcd = evaluation(nc.coalgebra.carrier().dual()).matrix();
            o.require((evc.transpose() * evcd).is_identity(), nc.name + " triangle composite");
        }
    return o;
}

// 8

Outcome determinism_and_controls()
{
    Outcome o;
    RunConfig c;
    c.seed = 2024;
    const RunReport a = run_all(c), b = run_all(c);
    o.require(to_json(a).dump() == to_json(b).dump(), "JSON reports differ");
    o.require(to_text(a) == to_text(b), "text reports differ");
    o.require(a.suites.size() == suite_ids().size(), "suite count");
    for (const auto& s : a.suites) {
        std::size_t controls = 0;
        for (const auto& check : s.checks)
            if (check.negative_control) {
                ++controls;
                o.require(!check.holds, s.id + " control holds: " + check.instance);
            }
        o.require(controls > 0, s.id + " has no negative control");
        o.require(s.passed(), s.id + " failed");
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"fgp duality: evaluation onto the double dual", fgp_duality},
        {"dual algebra of comatrix n = 2, 3 against matrix units", dual_algebra_functor},
        {"finite dual of Q[x]: grouplike, primitive, Fibonacci, non-recurrent control", polynomial_finite_dual},
        {"induced quotient: every single-constant perturbation rejected", induced_quotient_uniqueness},
        {"antipode transfer to the dual Hopf algebra", antipode_transfer},
        {"over Z: Pi injective (SNF) and purity corpus", noetherian_hypotheses},
        {"adjunction triangles on 3 x 3 pairs", adjunction_triangles},
        {"determinism and negative controls", determinism_and_controls},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.ok && secs >= kBudgetSeconds) {
            out.ok = false;
            out.note = "over the time budget";
        }
        failures += !out.ok;
        std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].title,
                    secs, out.ok ? "" : " -- ", out.note.c_str());
    }
    return failures == 0 ? 0 : 1;
}
