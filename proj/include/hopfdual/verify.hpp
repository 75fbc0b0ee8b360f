#ifndef HOPFDUAL_VERIFY_HPP
#define HOPFDUAL_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfdual/finite_dual.hpp"
#include "hopfdual/hopf.hpp"
#include "hopfdual/presentation_io.hpp"

namespace hopfdual {

/*
 * One check inside a suite. `holds` is the mathematical outcome; a negative
 * control is a deliberately broken instance, so its verdict is good exactly
 * when it does not hold.
 */
struct CheckResult {
    std::string name;
    std::string instance;
    bool holds = false;
    bool negative_control = false;
    std::vector<Witness> witnesses;
    std::string detail;

    bool verdict() const { return negative_control ? !holds : holds; }
};

struct SuiteReport {
    std::string id;
    std::string anchor;
    std::vector<std::string> instances;
    std::vector<CheckResult> checks;
    std::map<std::string, std::uint64_t> bounds;
    std::optional<double> seconds;   ///< only when timing was requested

    bool passed() const;
    /// Appends another report's instances and checks.
    void absorb(const SuiteReport& other);
};

struct RunConfig {
    /// nullopt runs every suite; an empty list runs none.
    std::optional<std::vector<std::string>> suites;
    std::uint64_t seed = 1;
    std::size_t max_rank = 4;
    std::size_t probe_degree = 8;
    bool timing = false;
};

struct RunReport {
    std::uint64_t seed = 1;
    std::vector<SuiteReport> suites;   ///< sorted by id

    bool passed() const;
};

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Suite ids in report order.
const std::vector<std::string>& suite_ids();

// Instance-level checks.

/// Over Z, Pi_{M,N} and Pi_{L,M,N} have no zero invariant factor for every
/// rank pair and triple up to max_rank, and Lambda is natural for random
/// integer maps; the control composes Pi with a rank-dropping quotient.
SuiteReport verify_pi_injectivity(std::size_t max_rank, std::uint64_t seed = 1);

/// Lambda o (kappa (x) kappa) and Lambda_3 o (kappa (x) kappa (x) kappa) have
/// full column rank on the probe grid.
SuiteReport verify_lift_conditions(const FiniteDualCoalgebra& fd, std::size_t probe_degree,
                                   const std::string& instance);

/// Both triangle identities for one (A, C) pair, with a perturbed-eta control.
SuiteReport verify_adjunction_triangles(const AlgebraPresentation& a,
                                        const CoalgebraPresentation& c,
                                        const std::string& instance, std::uint64_t seed = 1);

/// kappa injectivity for H and check_antipode on the dual Hopf algebra.
SuiteReport verify_hopf_transfer(const HopfPresentation& h, const std::string& instance);

/// Runs the selected suites concurrently; reports are ordered by suite id.
/// Throws UnknownSuite for an id not in suite_ids().
RunReport run_all(const RunConfig& config);

// Shipped corpus.

struct NamedAlgebra {
    std::string name;
    AlgebraPresentation algebra;
};
struct NamedCoalgebra {
    std::string name;
    CoalgebraPresentation coalgebra;
};
struct NamedHopf {
    std::string name;
    HopfPresentation hopf;
};
struct PurityCase {
    std::string name;
    Submodule submodule;
    bool pure;
};
struct NamedSequence {
    std::string name;
    RecurrentSequence sequence;
};

/// Z/n (n <= 6), S_3, M_2, R[x]/(x^3) and the algebra of H4 over the ring.
std::vector<NamedAlgebra> algebra_corpus(Ring ring);
/// Base coalgebra, comatrix 2, divided powers 2.
std::vector<NamedCoalgebra> coalgebra_corpus(Ring ring);
/// R[Z/n] (n <= 6), R[S_3] and H4.
std::vector<NamedHopf> hopf_corpus(Ring ring);
/// Submodules of Z^k labelled pure or not.
std::vector<PurityCase> purity_corpus();
/// Polynomial finite-dual members: geometric, delta_1, Fibonacci.
std::vector<NamedSequence> recurrent_corpus();

Json to_json(const SuiteReport& r);
Json to_json(const RunReport& r);
std::string to_text(const SuiteReport& r);
std::string to_text(const RunReport& r);

} // namespace hopfdual

#endif
