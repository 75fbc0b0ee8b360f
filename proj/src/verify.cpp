#include "hopfdual/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "hopfdual/duality.hpp"
#include "hopfdual/families.hpp"
#include "hopfdual/linalg.hpp"

namespace hopfdual {

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verdict(); });
}

void SuiteReport::absorb(const SuiteReport& other)
{
    instances.insert(instances.end(), other.instances.begin(), other.instances.end());
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool RunReport::passed() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
}

namespace {

const char* const kPi = "pi-injectivity";
const char* const kPurity = "purity";
const char* const kLift = "lift-conditions";
const char* const kInduced = "induced-quotient";
const char* const kAdjunction = "adjunction-triangles";
const char* const kHopf = "hopf-transfer";
const char* const kFgp = "fgp-duality";
const char* const kPolyalg = "finite-dual-polyalg";

const std::map<std::string, std::string>& anchors()
{
    static const std::map<std::string, std::string> a = {
        {kPi, "comparison maps Pi into functions on a product are injective over a noetherian ring"},
        {kPurity, "the image of the comparison map is a pure submodule"},
        {kLift, "lifting along kappa: Lambda o (kappa (x) kappa) and its 3-fold analogue are monomorphisms"},
        {kInduced, "the finite dual is the only quotient inducing its comultiplication"},
        {kAdjunction, "triangle equalities of the dual-algebra / finite-dual adjunction"},
        {kHopf, "antipodes transfer to the finite dual when kappa is injective"},
        {kFgp, "finitely generated projective duality: A is its double dual"},
        {kPolyalg, "a functional is in the finite dual of R[x] iff its orbit is finitely generated"},
    };
    return a;
}

SuiteReport make_suite(const std::string& id)
{
    SuiteReport r;
    r.id = id;
    r.anchor = anchors().at(id);
    return r;
}

CheckResult from_report(std::string name, std::string instance, const AxiomReport& report,
                        bool control = false)
{
    CheckResult c;
    c.name = std::move(name);
    c.instance = std::move(instance);
    c.holds = report.passed;
    c.negative_control = control;
    c.witnesses = report.witnesses;
    return c;
}

CheckResult plain(std::string name, std::string instance, bool holds, bool control = false,
                  std::string detail = {})
{
    CheckResult c;
    c.name = std::move(name);
    c.instance = std::move(instance);
    c.holds = holds;
    c.negative_control = control;
    c.detail = std::move(detail);
    return c;
}

AxiomReport compare(const std::string& law, const Matrix& left, const Matrix& right)
{
    AxiomReport report;
    if (left.rows() != right.rows() || left.cols() != right.cols()) {
        report.fail(law + " shape", {left.rows(), left.cols(), right.rows(), right.cols()},
                    Scalar::zero(left.ring()), Scalar::zero(left.ring()));
        return report;
    }
    for (std::size_t r = 0; r < left.rows(); ++r)
        for (std::size_t c = 0; c < left.cols(); ++c)
            if (left(r, c) != right(r, c))
                report.fail(law, {r, c}, left(r, c), right(r, c));
    return report;
}

std::string module_name(const char* ring, std::size_t n)
{
    return std::string(ring) + "^" + std::to_string(n);
}

Matrix random_matrix(std::mt19937_64& rng, Ring ring, std::size_t rows, std::size_t cols)
{
    Matrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Scalar(ring, static_cast<long>(rng() % 7) - 3);
    return m;
}

std::string ring_prefix(Ring ring)
{
    switch (ring.kind()) {
    case Ring::Kind::Rational: return "Q";
    case Ring::Kind::Integer: return "Z";
    case Ring::Kind::Prime: return "F" + std::to_string(ring.modulus());
    }
    return "?";
}

Matrix quotient_merging_first_rows(Ring ring, std::size_t rows)
{
    // R^rows -> R^(rows-1), first two coordinates added
    Matrix q(ring, rows - 1, rows);
    q(0, 0) = Scalar::one(ring);
    for (std::size_t r = 1; r < rows; ++r)
        q(r - 1, r) = Scalar::one(ring);
    return q;
}

} // namespace

SuiteReport verify_pi_injectivity(std::size_t max_rank, std::uint64_t seed)
{
    SuiteReport r = make_suite(kPi);
    r.bounds["max_rank"] = max_rank;
    const Ring z = Ring::integers();
    for (std::size_t m = 1; m <= max_rank; ++m)
        for (std::size_t n = 1; n <= max_rank; ++n) {
            const std::string inst = module_name("Z", m) + " x " + module_name("Z", n);
            r.instances.push_back(inst);
            r.checks.push_back(plain("Pi injective (Smith form)", inst,
                                     has_full_column_rank(pi_map(FreeModule(z, m), FreeModule(z, n)))));
        }
    for (std::size_t l = 1; l <= max_rank; ++l)
        for (std::size_t m = 1; m <= max_rank; ++m)
            for (std::size_t n = 1; n <= max_rank; ++n) {
                const std::string inst = module_name("Z", l) + " x " + module_name("Z", m) + " x " +
                                         module_name("Z", n);
                r.instances.push_back(inst);
                const Matrix p = pi3_map(basis_probes(FreeModule(z, l)), basis_probes(FreeModule(z, m)),
                                         basis_probes(FreeModule(z, n)));
                r.checks.push_back(plain("Pi_3 injective (Smith form)", inst, has_full_column_rank(p)));
            }

    // Lambda_{M,N} o (f* (x) g*) = (f (x) g)* o Lambda_{M',N'} for random f : M -> M', g : N -> N'
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < 4; ++trial) {
        const std::size_t m = 1 + rng() % max_rank, m2 = 1 + rng() % max_rank;
        const std::size_t n = 1 + rng() % max_rank, n2 = 1 + rng() % max_rank;
        const Matrix f = random_matrix(rng, z, m2, m);
        const Matrix g = random_matrix(rng, z, n2, n);
        const Matrix left = lambda_map(FreeModule(z, m), FreeModule(z, n)).matrix() *
                            kronecker(f.transpose(), g.transpose());
        const Matrix right = kronecker(f, g).transpose() *
                             lambda_map(FreeModule(z, m2), FreeModule(z, n2)).matrix();
        const std::string inst = "random f: Z^" + std::to_string(m) + "->Z^" + std::to_string(m2) +
                                 ", g: Z^" + std::to_string(n) + "->Z^" + std::to_string(n2);
        r.instances.push_back(inst);
        r.checks.push_back(from_report("Lambda natural", inst, compare("Lambda naturality", left, right)));
    }

    const Matrix pi = pi_map(FreeModule(z, 2), FreeModule(z, 2));
    const Matrix broken = quotient_merging_first_rows(z, pi.rows()) * pi;
    r.instances.push_back("Z^2 x Z^2 with a quotient composed");
    r.checks.push_back(plain("Pi injective (Smith form)", "Z^2 x Z^2 with a quotient composed",
                             has_full_column_rank(broken), true));
    return r;
}

namespace {

SuiteReport suite_purity(const RunConfig& config)
{
    SuiteReport r = make_suite(kPurity);
    r.bounds["max_rank"] = config.max_rank;
    for (const auto& pc : purity_corpus()) {
        r.instances.push_back(pc.name);
        const bool pure = is_pure_submodule(pc.submodule);
        std::ostringstream d;
        d << "invariant factors";
        for (const auto& f : invariant_factors(pc.submodule.generators))
            d << ' ' << f.get_str();
        r.checks.push_back(plain("pure submodule", pc.name, pure, !pc.pure, d.str()));
    }
    const Ring z = Ring::integers();
    for (std::size_t m = 1; m <= config.max_rank; ++m)
        for (std::size_t n = m; n <= config.max_rank; ++n) {
            const std::string inst = "image of Pi on " + module_name("Z", m) + " x " + module_name("Z", n);
            r.instances.push_back(inst);
            const Matrix p = pi_map(FreeModule(z, m), FreeModule(z, n));
            r.checks.push_back(plain("pure submodule", inst,
                                     is_pure_submodule(Submodule(FreeModule(z, p.rows()), p))));
        }
    return r;
}

} // namespace

SuiteReport verify_lift_conditions(const FiniteDualCoalgebra& fd, std::size_t probe_degree,
                                   const std::string& instance)
{
    SuiteReport r = make_suite(kLift);
    r.bounds["probe_degree"] = probe_degree;
    r.instances.push_back(instance);
    Matrix two(fd.ring(), 0, 0), three(fd.ring(), 0, 0);
    if (fd.polynomial()) {
        const Matrix p = kappa_probe(fd, probe_degree);
        two = kronecker(p, p);
        three = kronecker(p, two);
    } else {
        const AlgebraPresentation& a = fd.algebra();
        const Matrix& k = fd.kappa();
        const Matrix kk = kronecker(k, k);
        two = lambda_map(a.carrier(), a.carrier()).matrix() * kk;
        three = lambda3_map(a.carrier(), a.carrier(), a.carrier()).matrix() * kronecker(k, kk);
    }
    r.checks.push_back(plain("Lambda o (kappa (x) kappa) injective", instance, has_full_column_rank(two)));
    r.checks.push_back(
        plain("Lambda_3 o (kappa (x) kappa (x) kappa) injective", instance, has_full_column_rank(three)));
    return r;
}

SuiteReport verify_adjunction_triangles(const AlgebraPresentation& a, const CoalgebraPresentation& c,
                                        const std::string& instance, std::uint64_t seed)
{
    SuiteReport r = make_suite(kAdjunction);
    r.instances.push_back(instance);

    // C: G(eps_C) o eta_{GC} = id on C*
    {
        const AlgebraPresentation cs = dual_algebra(c);
        const CoalgebraPresentation css = dual_coalgebra_fgp(cs);
        const LinearMap ev_c = evaluation(c.carrier());
        const LinearMap ev_cs = evaluation(cs.carrier());
        r.checks.push_back(from_report("eps_C = ev_C is a coalgebra morphism C -> (C*)°", instance,
                                       coalgebra_morphism_report(ev_c, c, css)));
        r.checks.push_back(from_report("eta_{C*} = ev is an algebra morphism C* -> (C*)°*", instance,
                                       algebra_morphism_report(ev_cs, cs, dual_algebra(css))));
        r.checks.push_back(from_report("G(eps_C) o eta_{GC} = id", instance,
                                       compare("triangle", ev_c.matrix().transpose() * ev_cs.matrix(),
                                               Matrix::identity(c.ring(), c.rank()))));
    }

    // A: (eta_A)° o eps_{A°} = id on A°
    const FiniteDualCoalgebra fd = finite_dual_findim(a);
    const CoalgebraPresentation& d = fd.coalgebra();
    const AlgebraPresentation ds = dual_algebra(d);
    const LinearMap ev_d = evaluation(d.carrier());
    const CoalgebraPresentation dss = dual_coalgebra_fgp(ds);
    auto triangle_14 = [&](const Matrix& eta) {
        AxiomReport rep = algebra_morphism_report(LinearMap(a.carrier(), ds.carrier(), eta), a, ds);
        rep.merge(compare("triangle", eta.transpose() * ev_d.matrix(),
                          Matrix::identity(a.ring(), d.rank())));
        return rep;
    };
    const Matrix eta = fd.kappa().transpose();
    r.checks.push_back(from_report("eps_{A°} = ev is a coalgebra morphism A° -> (A°*)°", instance,
                                   coalgebra_morphism_report(ev_d, d, dss)));
    r.checks.push_back(from_report("eta_A algebra morphism and (eta_A)° o eps_{A°} = id", instance,
                                   triangle_14(eta)));

    std::mt19937_64 rng(seed);
    Matrix bent = eta;
    const std::size_t i = rng() % bent.rows(), j = rng() % bent.cols();
    bent(i, j) += Scalar::one(a.ring());
    r.checks.push_back(from_report("eta_A algebra morphism and (eta_A)° o eps_{A°} = id",
                                   instance + ", eta perturbed at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")",
                                   triangle_14(bent), true));
    return r;
}

SuiteReport verify_hopf_transfer(const HopfPresentation& h, const std::string& instance)
{
    SuiteReport r = make_suite(kHopf);
    r.instances.push_back(instance);
    const FiniteDualCoalgebra fd = finite_dual_findim(h.algebra());
    r.checks.push_back(plain("kappa injective", instance, has_full_column_rank(fd.kappa())));
    const HopfPresentation dual = dual_hopf_findim(h);
    r.checks.push_back(from_report("dual is a bialgebra", instance, check_bialgebra(dual.bialgebra)));
    r.checks.push_back(from_report("dual antipode", instance, check_antipode(dual)));
    return r;
}

namespace {

SuiteReport suite_lift(const RunConfig& config)
{
    SuiteReport r = make_suite(kLift);
    r.bounds["max_rank"] = config.max_rank;
    r.bounds["probe_degree"] = config.probe_degree;
    for (const auto& na : algebra_corpus(Ring::rationals()))
        if (na.algebra.rank() <= config.max_rank)
            r.absorb(verify_lift_conditions(finite_dual_findim(na.algebra), config.probe_degree, na.name));
    for (const auto& ns : recurrent_corpus())
        r.absorb(verify_lift_conditions(orbit_coalgebra_polyalg(ns.sequence), config.probe_degree,
                                        "orbit of " + ns.name + " in Q[x]°"));

    const Ring q = Ring::rationals();
    const AlgebraPresentation a = monoid_algebra(cyclic_group_table(2), q);
    const FiniteDualCoalgebra fabricated(a, dual_coalgebra_fgp(a), Matrix(q, {{1, 1}, {0, 0}}));
    SuiteReport control = verify_lift_conditions(fabricated, config.probe_degree,
                                                 "Q[Z/2] with rank-deficient kappa");
    for (auto& c : control.checks)
        c.negative_control = true;
    r.absorb(control);
    return r;
}

SuiteReport suite_induced(const RunConfig& config)
{
    SuiteReport r = make_suite(kInduced);
    r.bounds["probe_degree"] = config.probe_degree;
    std::mt19937_64 rng(config.seed);
    auto run = [&](const FiniteDualCoalgebra& fd, const std::string& name) {
        r.instances.push_back(name);
        r.checks.push_back(from_report("induced quotient", name,
                                       check_induced_quotient(fd, config.probe_degree)));
        const std::size_t n = fd.rank();
        if (n == 0)
            return;
        const std::array<std::size_t, 3> key{rng() % n, rng() % n, rng() % n};
        const FiniteDualCoalgebra bent = fd.with_coalgebra(
            perturbed_comultiplication(fd.coalgebra(), key, Scalar::one(fd.ring())));
        r.checks.push_back(from_report("induced quotient",
                                       name + ", Delta[" + std::to_string(key[0]) + "][" +
                                           std::to_string(key[1]) + "][" + std::to_string(key[2]) +
                                           "] + 1",
                                       check_induced_quotient(bent, config.probe_degree), true));
    };
    for (Ring ring : {Ring::rationals(), Ring::prime_field(5)})
        for (const auto& na : algebra_corpus(ring))
            run(finite_dual_findim(na.algebra), na.name + "°");
    for (const auto& ns : recurrent_corpus())
        run(orbit_coalgebra_polyalg(ns.sequence), "orbit of " + ns.name + " in Q[x]°");
    return r;
}

SuiteReport suite_adjunction(const RunConfig& config)
{
    SuiteReport r = make_suite(kAdjunction);
    r.bounds["seed"] = config.seed;
    const Ring q = Ring::rationals();
    const std::vector<NamedAlgebra> algebras = {
        {"Q[Z/2]", monoid_algebra(cyclic_group_table(2), q)},
        {"Q[Z/3]", monoid_algebra(cyclic_group_table(3), q)},
        {"M_2(Q)", matrix_algebra(2, q)},
    };
    std::uint64_t salt = 0;
    for (const auto& na : algebras)
        for (const auto& nc : coalgebra_corpus(q))
            r.absorb(verify_adjunction_triangles(na.algebra, nc.coalgebra, na.name + ", " + nc.name,
                                                 config.seed + salt++));
    return r;
}

SuiteReport suite_hopf(const RunConfig&)
{
    SuiteReport r = make_suite(kHopf);
    for (const auto& nh : hopf_corpus(Ring::rationals()))
        r.absorb(verify_hopf_transfer(nh.hopf, nh.name));
    const Ring q = Ring::rationals();
    const HopfPresentation g3 = group_algebra_hopf(cyclic_group_table(3), q);
    const HopfPresentation wrong(g3.bialgebra, LinearMap::identity(g3.carrier()));
    r.instances.push_back("Q[Z/3] with S = id");
    r.checks.push_back(from_report("dual antipode", "Q[Z/3] with S = id",
                                   check_antipode(dual_hopf_findim(wrong)), true));
    return r;
}

SuiteReport suite_fgp(const RunConfig&)
{
    SuiteReport r = make_suite(kFgp);
    for (Ring ring : {Ring::rationals(), Ring::prime_field(5)})
        for (const auto& na : algebra_corpus(ring)) {
            r.instances.push_back(na.name);
            r.checks.push_back(from_report("evaluation is an algebra isomorphism onto A**", na.name,
                                           verify_fgp_duality(na.algebra)));
        }
    const Ring q = Ring::rationals();
    const AlgebraPresentation a = monoid_algebra(cyclic_group_table(3), q);
    Matrix ev = evaluation(a.carrier()).matrix();
    ev(0, 1) += Scalar::one(q);
    const std::string inst = "Q[Z/3] with evaluation perturbed";
    r.instances.push_back(inst);
    r.checks.push_back(from_report(
        "evaluation is an algebra isomorphism onto A**", inst,
        algebra_morphism_report(LinearMap(a.carrier(), a.carrier(), ev), a,
                                dual_algebra(dual_coalgebra_fgp(a))),
        true));
    return r;
}

SuiteReport suite_polyalg(const RunConfig& config)
{
    SuiteReport r = make_suite(kPolyalg);
    r.bounds["probe_degree"] = config.probe_degree;
    r.bounds["max_order"] = 4;
    const Ring q = Ring::rationals();
    const Scalar one = Scalar::one(q);

    {
        const std::string inst = "2^n";
        r.instances.push_back(inst);
        const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(RecurrentSequence::geometric(q, Scalar(q, 2L)));
        const SparseTensor grouplike = {{{0, 0, 0}, one}};
        r.checks.push_back(plain("grouplike", inst,
                                 fd.rank() == 1 && fd.coalgebra().comul() == grouplike &&
                                     fd.coalgebra().counit() == Vector{one}));
    }
    {
        const std::string inst = "delta_{n,1}";
        r.instances.push_back(inst);
        const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(RecurrentSequence::delta(q, 1));
        // basis: delta_1, x.delta_1 = delta_0
        const SparseTensor expected = {{{0, 0, 1}, one}, {{0, 1, 0}, one}, {{1, 1, 1}, one}};
        r.checks.push_back(plain("primitive over delta_{n,0}", inst,
                                 fd.rank() == 2 && fd.coalgebra().comul() == expected &&
                                     fd.coalgebra().counit() == Vector{Scalar::zero(q), one}));
    }
    {
        const std::string inst = "Fibonacci";
        r.instances.push_back(inst);
        const FiniteDualCoalgebra fd = orbit_coalgebra_polyalg(RecurrentSequence::fibonacci(q));
        r.checks.push_back(plain("orbit coalgebra has rank 2", inst, fd.rank() == 2));
        r.checks.push_back(from_report("f(x^(m+n)) = sum g_i(x^m) h_i(x^n)", inst,
                                       check_induced_quotient(fd, config.probe_degree)));
    }
    {
        const std::string inst = "1/(n+1), first 10 terms";
        r.instances.push_back(inst);
        Vector prefix;
        for (long n = 0; n < 10; ++n)
            prefix.push_back(Scalar(q, mpz_class(1), mpz_class(n + 1)));
        r.checks.push_back(plain("no recurrence of order <= 4", inst, !minimal_recurrence(prefix, 4)));
    }
    {
        const std::string inst = "initial 1,2,4,9 claimed with a_{n+1} = 2 a_n";
        r.instances.push_back(inst);
        const RecurrentSequence bad(q, {one, Scalar(q, 2L), Scalar(q, 4L), Scalar(q, 9L)}, {Scalar(q, 2L)});
        const MembershipReport m = polyalg_membership(bad);
        r.checks.push_back(plain("in the finite dual", inst, m.member, true, m.diagnostic));
    }
    return r;
}

using SuiteRunner = std::function<SuiteReport(const RunConfig&)>;

const std::map<std::string, SuiteRunner>& runners()
{
    static const std::map<std::string, SuiteRunner> r = {
        {kAdjunction, suite_adjunction},
        {kFgp, suite_fgp},
        {kPolyalg, suite_polyalg},
        {kHopf, suite_hopf},
        {kInduced, suite_induced},
        {kLift, suite_lift},
        {kPi, [](const RunConfig& c) { return verify_pi_injectivity(c.max_rank, c.seed); }},
        {kPurity, suite_purity},
    };
    return r;
}

} // namespace

const std::vector<std::string>& suite_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, _] : runners())
            v.push_back(id);
        return v;
    }();
    return ids;
}

RunReport run_all(const RunConfig& config)
{
    std::vector<std::string> selected = config.suites.value_or(suite_ids());
    for (const auto& id : selected)
        if (!runners().count(id))
            throw UnknownSuite("unknown suite \"" + id + "\"");
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

    std::vector<std::future<SuiteReport>> jobs;
    for (const auto& id : selected)
        jobs.push_back(std::async(std::launch::async, [&config, id] {
            const auto start = std::chrono::steady_clock::now();
            SuiteReport rep = runners().at(id)(config);
            if (config.timing)
                rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return rep;
        }));
    RunReport out;
    out.seed = config.seed;
    for (auto& j : jobs)
        out.suites.push_back(j.get());
    return out;
}

std::vector<NamedAlgebra> algebra_corpus(Ring ring)
{
    const std::string r = ring_prefix(ring);
    std::vector<NamedAlgebra> v;
    for (std::size_t n = 1; n <= 6; ++n)
        v.push_back({r + "[Z/" + std::to_string(n) + "]", monoid_algebra(cyclic_group_table(n), ring)});
    v.push_back({r + "[S_3]", monoid_algebra(symmetric_group_table(3), ring)});
    v.push_back({"M_2(" + r + ")", matrix_algebra(2, ring)});
    v.push_back({r + "[x]/(x^3)", truncated_polynomial_algebra(3, ring)});
    v.push_back({"H4 over " + r + " (algebra)", sweedler_h4(ring).algebra()});
    return v;
}

std::vector<NamedCoalgebra> coalgebra_corpus(Ring ring)
{
    return {{"rank-1 coalgebra", base_coalgebra(ring)},
            {"comatrix 2", comatrix_coalgebra(2, ring)},
            {"divided powers 2", divided_power_coalgebra(2, ring)}};
}

std::vector<NamedHopf> hopf_corpus(Ring ring)
{
    const std::string r = ring_prefix(ring);
    std::vector<NamedHopf> v;
    for (std::size_t n = 1; n <= 6; ++n)
        v.push_back({r + "[Z/" + std::to_string(n) + "]", group_algebra_hopf(cyclic_group_table(n), ring)});
    v.push_back({r + "[S_3]", group_algebra_hopf(symmetric_group_table(3), ring)});
    v.push_back({"H4 over " + r, sweedler_h4(ring)});
    return v;
}

std::vector<PurityCase> purity_corpus()
{
    const Ring z = Ring::integers();
    auto sub = [&](std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
        return Submodule(FreeModule(z, n), Matrix(z, rows));
    };
    return {
        {"Z(1,0) in Z^2", sub(2, {{1}, {0}}), true},
        {"Z(2,3) in Z^2", sub(2, {{2}, {3}}), true},
        {"Z(3,5,7) in Z^3", sub(3, {{3}, {5}, {7}}), true},
        {"<(1,1,0),(0,1,1)> in Z^3", sub(3, {{1, 0}, {1, 1}, {0, 1}}), true},
        {"<(1,0,0),(0,1,0)> in Z^3", sub(3, {{1, 0}, {0, 1}, {0, 0}}), true},
        {"<(2,1),(3,2)> = Z^2", sub(2, {{2, 3}, {1, 2}}), true},
        {"<(1,2),(2,4)> in Z^2", sub(2, {{1, 2}, {2, 4}}), true},
        {"2Z in Z", sub(1, {{2}}), false},
        {"Z(2,4) in Z^2", sub(2, {{2}, {4}}), false},
        {"<(1,1),(1,-1)> in Z^2", sub(2, {{1, 1}, {1, -1}}), false},
        {"<(2,0,0),(0,3,0)> in Z^3", sub(3, {{2, 0}, {0, 3}, {0, 0}}), false},
        {"Z(6,9,12) in Z^3", sub(3, {{6}, {9}, {12}}), false},
        {"<(1,0,0),(0,2,2)> in Z^3", sub(3, {{1, 0}, {0, 2}, {0, 2}}), false},
    };
}

std::vector<NamedSequence> recurrent_corpus()
{
    const Ring q = Ring::rationals();
    return {{"2^n", RecurrentSequence::geometric(q, Scalar(q, 2L))},
            {"delta_{n,1}", RecurrentSequence::delta(q, 1)},
            {"Fibonacci", RecurrentSequence::fibonacci(q)}};
}

Json to_json(const SuiteReport& r)
{
    Json doc;
    doc["id"] = r.id;
    doc["anchor"] = r.anchor;
    doc["passed"] = r.passed();
    doc["bounds"] = r.bounds;
    doc["instances"] = r.instances;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["instance"] = c.instance;
        e["expect"] = c.negative_control ? "fail" : "hold";
        e["holds"] = c.holds;
        e["verdict"] = !c.verdict() ? "FAIL" : c.negative_control ? "rejected as expected" : "pass";
        Json ws = Json::array();
        for (const auto& w : c.witnesses) {
            Json we;
            we["law"] = w.law;
            we["indices"] = w.indices;
            we["left"] = scalar_to_json(w.left);
            we["right"] = scalar_to_json(w.right);
            ws.push_back(std::move(we));
        }
        e["witnesses"] = std::move(ws);
        if (!c.detail.empty())
            e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    doc["checks"] = std::move(checks);
    if (r.seconds)
        doc["seconds"] = *r.seconds;
    return doc;
}

Json to_json(const RunReport& r)
{
    Json doc;
    doc["seed"] = r.seed;
    doc["passed"] = r.passed();
    Json suites = Json::array();
    for (const auto& s : r.suites)
        suites.push_back(to_json(s));
    doc["suites"] = std::move(suites);
    return doc;
}

std::string to_text(const SuiteReport& r)
{
    std::ostringstream os;
    os << "suite " << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << "\n  " << r.anchor << "\n";
    if (!r.bounds.empty()) {
        os << "  bounds:";
        for (const auto& [k, v] : r.bounds)
            os << ' ' << k << '=' << v;
        os << "\n";
    }
    if (r.seconds)
        os << "  seconds: " << *r.seconds << "\n";
    for (const auto& c : r.checks) {
        const char* tag = !c.verdict() ? "FAIL" : c.negative_control ? "rejected as expected" : "pass";
        os << "  [" << tag << "] " << c.name << " @ " << c.instance << "\n";
        if (!c.detail.empty())
            os << "      " << c.detail << "\n";
        for (const auto& w : c.witnesses) {
            os << "      " << w.law << " at (";
            for (std::size_t i = 0; i < w.indices.size(); ++i)
                os << (i ? "," : "") << w.indices[i];
            os << "): " << w.left << " vs " << w.right << "\n";
        }
    }
    return os.str();
}

std::string to_text(const RunReport& r)
{
    std::string out;
    for (const auto& s : r.suites)
        out += to_text(s);
    std::size_t passed = 0;
    for (const auto& s : r.suites)
        passed += s.passed();
    out += std::to_string(passed) + "/" + std::to_string(r.suites.size()) + " suites passed (seed " +
           std::to_string(r.seed) + ")\n";
    return out;
}

} // namespace hopfdual
