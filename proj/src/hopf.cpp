#include "hopfdual/hopf.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "hopfdual/duality.hpp"
#include "hopfdual/families.hpp"

namespace hopfdual {

BialgebraPresentation::BialgebraPresentation(AlgebraPresentation a, CoalgebraPresentation c)
    : algebra(std::move(a)), coalgebra(std::move(c))
{
    if (!(algebra.carrier() == coalgebra.carrier()))
        throw std::invalid_argument("bialgebra: algebra and coalgebra carriers differ");
}

HopfPresentation::HopfPresentation(BialgebraPresentation b, LinearMap s)
    : bialgebra(std::move(b)), antipode(std::move(s))
{
    if (!(antipode.domain() == bialgebra.carrier()) || !(antipode.codomain() == bialgebra.carrier()))
        throw std::invalid_argument("hopf: antipode must be an endomorphism of the carrier");
}

namespace {

void merge_prefixed(AxiomReport& into, const AxiomReport& from, const std::string& prefix)
{
    if (from.passed)
        return;
    into.passed = false;
    for (const auto& w : from.witnesses)
        if (into.witnesses.size() < into.limit)
            into.witnesses.push_back({prefix + w.law, w.indices, w.left, w.right});
}

void compare_matrices(AxiomReport& report, const std::string& law, const Matrix& left,
                      const Matrix& right)
{
    for (std::size_t r = 0; r < left.rows(); ++r)
        for (std::size_t c = 0; c < left.cols(); ++c)
            if (left(r, c) != right(r, c))
                report.fail(law, {r, c}, left(r, c), right(r, c));
}

} // namespace

AxiomReport check_bialgebra(const BialgebraPresentation& b, std::size_t witness_limit)
{
    AxiomReport report(witness_limit);
    report.merge(check_algebra_axioms(b.algebra, witness_limit));
    report.merge(check_coalgebra_axioms(b.coalgebra, witness_limit));
    const FreeModule& carrier = b.carrier();
    const LinearMap delta(carrier, carrier.tensor(carrier), b.coalgebra.comultiplication_matrix());
    merge_prefixed(report,
                   algebra_morphism_report(delta, b.algebra, tensor_algebra(b.algebra, b.algebra),
                                           witness_limit),
                   "comultiplication ");
    const LinearMap eps(carrier, FreeModule(b.ring(), 1), b.coalgebra.counit_matrix());
    merge_prefixed(report,
                   algebra_morphism_report(eps, b.algebra, base_algebra(b.ring()), witness_limit),
                   "counit ");
    return report;
}

AxiomReport check_antipode(const HopfPresentation& h, std::size_t witness_limit)
{
    AxiomReport report(witness_limit);
    const AlgebraPresentation& a = h.algebra();
    const CoalgebraPresentation& c = h.coalgebra();
    const LinearMap id = LinearMap::identity(h.carrier());
    const Matrix unit = convolution_unit(c, a).matrix();
    compare_matrices(report, "S * id", convolution(h.antipode, id, c, a).matrix(), unit);
    compare_matrices(report, "id * S", convolution(id, h.antipode, c, a).matrix(), unit);
    merge_prefixed(report,
                   algebra_morphism_report(h.antipode, a, opposite_algebra(a), witness_limit),
                   "antipode to opposite ");
    return report;
}

AxiomReport check_hopf(const HopfPresentation& h, std::size_t witness_limit)
{
    AxiomReport report = check_bialgebra(h.bialgebra, witness_limit);
    report.merge(check_antipode(h, witness_limit));
    return report;
}

BialgebraPresentation dual_bialgebra_findim(const BialgebraPresentation& b)
{
    return BialgebraPresentation(dual_algebra(b.coalgebra), dual_coalgebra_fgp(b.algebra));
}

HopfPresentation dual_hopf_findim(const HopfPresentation& h)
{
    BialgebraPresentation dual = dual_bialgebra_findim(h.bialgebra);
    const FreeModule carrier = dual.carrier();
    return HopfPresentation(std::move(dual), LinearMap(carrier, carrier, h.antipode.matrix().transpose()));
}

HopfPresentation group_algebra_hopf(const MultiplicationTable& table, Ring ring,
                                    std::vector<std::string> labels)
{
    validate_monoid_table(table);
    const std::size_t n = table.size();
    const std::size_t e = table_identity(table);
    std::vector<std::size_t> inv(n);
    for (std::size_t g = 0; g < n; ++g) {
        std::optional<std::size_t> found;
        for (std::size_t h = 0; h < n && !found; ++h)
            if (table[g][h] == e && table[h][g] == e)
                found = h;
        if (!found)
            throw std::invalid_argument("group_algebra_hopf: element " + std::to_string(g) +
                                        " has no inverse");
        inv[g] = *found;
    }
    AlgebraPresentation a = monoid_algebra(table, ring, std::move(labels));
    SparseTensor comul;
    for (std::size_t g = 0; g < n; ++g)
        comul.emplace(std::array<std::size_t, 3>{g, g, g}, Scalar::one(ring));
    CoalgebraPresentation c(a.carrier(), std::move(comul), Vector(n, Scalar::one(ring)));
    Matrix s(ring, n, n);
    for (std::size_t g = 0; g < n; ++g)
        s(inv[g], g) = Scalar::one(ring);
    const FreeModule carrier = a.carrier();
    return HopfPresentation(BialgebraPresentation(std::move(a), std::move(c)),
                            LinearMap(carrier, carrier, std::move(s)));
}

namespace {

// Words in g, x modulo g^2 = 1, x^2 = 0, xg = -gx.
using Word = std::string;
using Combination = std::map<Word, Scalar>;
using TensorCombination = std::map<std::pair<Word, Word>, Scalar>;

const std::vector<Word> kH4Basis = {"", "g", "x", "gx"};

/// Normal form of one word: (sign, word), or nullopt if it reduces to 0.
std::optional<std::pair<int, Word>> reduce_word(Word w)
{
    int sign = 1;
    for (;;) {
        if (w.find("xx") != Word::npos)
            return std::nullopt;
        if (auto p = w.find("gg"); p != Word::npos) {
            w.erase(p, 2);
            continue;
        }
        if (auto p = w.find("xg"); p != Word::npos) {
            w.replace(p, 2, "gx");
            sign = -sign;
            continue;
        }
        return std::make_pair(sign, w);
    }
}

void add_to(Combination& out, const Word& w, const Scalar& c)
{
    auto [it, fresh] = out.emplace(w, c);
    if (!fresh)
        it->second += c;
}

Combination reduce(const Combination& x, const Ring& ring)
{
    Combination out;
    for (const auto& [w, c] : x)
        if (auto r = reduce_word(w))
            add_to(out, r->second, c * Scalar(ring, static_cast<long>(r->first)));
    return out;
}

Combination multiply(const Combination& x, const Combination& y, const Ring& ring)
{
    Combination out;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y)
            add_to(out, u + v, a * b);
    return reduce(out, ring);
}

std::size_t basis_index(const Word& w)
{
    for (std::size_t i = 0; i < kH4Basis.size(); ++i)
        if (kH4Basis[i] == w)
            return i;
    throw std::logic_error("word not in normal form: " + w);
}

} // namespace

HopfPresentation sweedler_h4(Ring ring)
{
    if (ring.characteristic() == 2)
        throw std::invalid_argument("sweedler_h4 needs characteristic other than 2");
    const Scalar one = Scalar::one(ring);
    const std::size_t n = kH4Basis.size();

    SparseTensor mul;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [w, c] : multiply({{kH4Basis[i], one}}, {{kH4Basis[j], one}}, ring))
                if (!c.is_zero())
                    mul.emplace(std::array<std::size_t, 3>{i, j, basis_index(w)}, c);

    // generator data
    std::map<char, TensorCombination> delta_gen;
    delta_gen['g'] = {{{"g", "g"}, one}};
    delta_gen['x'] = {{{"x", ""}, one}, {{"g", "x"}, one}};
    const std::map<char, Scalar> eps_gen = {{'g', one}, {'x', Scalar::zero(ring)}};

    SparseTensor comul;
    Vector counit;
    for (std::size_t k = 0; k < n; ++k) {
        TensorCombination acc = {{{"", ""}, one}};
        Scalar eps = one;
        for (char letter : kH4Basis[k]) {
            TensorCombination next;
            for (const auto& [uv, a] : acc)
                for (const auto& [st, b] : delta_gen.at(letter)) {
                    std::pair<Word, Word> key{uv.first + st.first, uv.second + st.second};
                    auto [it, fresh] = next.emplace(key, a * b);
                    if (!fresh)
                        it->second += a * b;
                }
            acc = std::move(next);
            eps *= eps_gen.at(letter);
        }
        for (const auto& [uv, c] : acc) {
            auto left = reduce_word(uv.first);
            auto right = reduce_word(uv.second);
            if (!left || !right)
                continue;
            const Scalar coeff = c * Scalar(ring, static_cast<long>(left->first * right->first));
            const std::array<std::size_t, 3> key{k, basis_index(left->second),
                                                 basis_index(right->second)};
            auto [it, fresh] = comul.emplace(key, coeff);
            if (!fresh)
                it->second += coeff;
        }
        counit.push_back(eps);
    }

    // S(g) = g^-1 = g; from S(x) 1 + S(g) x = eps(x) = 0, S(x) = -S(g) x
    std::map<char, Combination> s_gen;
    s_gen['g'] = {{"g", one}};
    s_gen['x'] = multiply(s_gen['g'], {{"x", -one}}, ring);
    Matrix s(ring, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        // anti-multiplicative: S(w_1 ... w_m) = S(w_m) ... S(w_1)
        Combination acc = {{"", one}};
        const Word& w = kH4Basis[k];
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = multiply(acc, s_gen.at(*it), ring);
        for (const auto& [word, c] : acc)
            s(basis_index(word), k) += c;
    }

    const FreeModule carrier(ring, n, {"1", "g", "x", "gx"});
    AlgebraPresentation a(carrier, std::move(mul), unit_vector(ring, n, 0));
    CoalgebraPresentation c(carrier, std::move(comul), std::move(counit));
    return HopfPresentation(BialgebraPresentation(std::move(a), std::move(c)),
                            LinearMap(carrier, carrier, std::move(s)));
}

bool is_commutative(const AlgebraPresentation& a)
{
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = i + 1; j < a.rank(); ++j)
            if (a.basis_product(i, j) != a.basis_product(j, i))
                return false;
    return true;
}

bool is_cocommutative(const CoalgebraPresentation& c)
{
    const Matrix delta = c.comultiplication_matrix();
    return swap(c.carrier(), c.carrier()).matrix() * delta == delta;
}

AxiomReport bialgebra_morphism_report(const LinearMap& f, const BialgebraPresentation& b,
                                      const BialgebraPresentation& d, std::size_t witness_limit)
{
    AxiomReport report = algebra_morphism_report(f, b.algebra, d.algebra, witness_limit);
    report.merge(coalgebra_morphism_report(f, b.coalgebra, d.coalgebra, witness_limit));
    return report;
}

LinearMap cyclic_character_map(std::size_t n, Ring ring)
{
    if (n == 0)
        throw std::invalid_argument("cyclic_character_map: n must be positive");
    if (ring.kind() != Ring::Kind::Prime || (ring.modulus() - 1) % n != 0)
        throw std::invalid_argument("cyclic_character_map: no primitive " + std::to_string(n) +
                                    "-th root of unity in " + ring.to_string());
    const mpz_class p(std::to_string(ring.modulus()));
    const mpz_class cofactor = (p - 1) / static_cast<unsigned long>(n);
    std::vector<unsigned long> prime_divisors;
    for (unsigned long q = 2, m = n; m > 1; ++q)
        if (m % q == 0) {
            prime_divisors.push_back(q);
            while (m % q == 0)
                m /= q;
        }
    std::optional<mpz_class> root;
    for (mpz_class c = 1; c < p && !root; ++c) {
        mpz_class w;
        mpz_powm(w.get_mpz_t(), c.get_mpz_t(), cofactor.get_mpz_t(), p.get_mpz_t());
        bool primitive = true;
        for (unsigned long q : prime_divisors) {
            mpz_class t;
            mpz_powm_ui(t.get_mpz_t(), w.get_mpz_t(), n / q, p.get_mpz_t());
            if (t == 1)
                primitive = false;
        }
        if (primitive)
            root = w;
    }
    const Scalar w(ring, *root);

    const FreeModule carrier(ring, n);
    Matrix m(ring, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        Scalar power = Scalar::one(ring);   // w^{ab}, b increasing
        Scalar step = Scalar::one(ring);
        for (std::size_t i = 0; i < a; ++i)
            step *= w;
        for (std::size_t b = 0; b < n; ++b) {
            m(b, a) = power;
            power *= step;
        }
    }
    return LinearMap(carrier, carrier.dual(), std::move(m));
}

} // namespace hopfdual
