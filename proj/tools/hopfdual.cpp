// hopfdual: check, dualize and verify finite presentations.
//
// Exit status: 0 pass, 1 mathematical failure (witness printed), 2 usage or
// parse error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopfdual/duality.hpp"
#include "hopfdual/families.hpp"
#include "hopfdual/finite_dual.hpp"
#include "hopfdual/hopf.hpp"
#include "hopfdual/presentation_io.hpp"
#include "hopfdual/verify.hpp"

using namespace hopfdual;

namespace {

constexpr int kPass = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct Options {
    std::string path;
    std::string suite;
    std::string family;
    std::vector<std::string> params;
    std::string base = "Q";
    std::string format = "text";
    std::size_t probe_degree = kDefaultProbeDegree;
    std::size_t max_rank = 4;
    std::uint64_t seed = 1;
    bool timing = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_report(const std::string& what, const AxiomReport& r, const Options& o)
{
    if (o.format == "json") {
        Json doc;
        doc["check"] = what;
        doc["report"] = to_json(r);
        std::cout << format_document(doc);
    } else {
        std::cout << what << ": " << r.to_string() << "\n";
    }
}

int cmd_check(const Options& o)
{
    const Presentation p = read_presentation_file(o.path);
    const std::string kind = kind_name(p);
    if (const auto* f = std::get_if<RecurrentSequence>(&p)) {
        const MembershipReport m = polyalg_membership(*f);
        if (o.format == "json") {
            Json doc;
            doc["check"] = "recseq";
            doc["member"] = m.member;
            doc["minimal_order"] = m.minimal_order;
            doc["hankel_ranks"] = m.hankel_ranks;
            if (!m.member)
                doc["diagnostic"] = m.diagnostic;
            std::cout << format_document(doc);
        } else if (m.member) {
            std::cout << "recseq: PASS (in the finite dual, minimal order " << m.minimal_order << ")\n";
        } else {
            std::cout << "recseq: FAIL\n  " << m.diagnostic << "\n";
        }
        return m.member ? kPass : kMathFailure;
    }
    AxiomReport r;
    if (const auto* a = std::get_if<AlgebraPresentation>(&p))
        r = check_algebra_axioms(*a);
    else if (const auto* c = std::get_if<CoalgebraPresentation>(&p))
        r = check_coalgebra_axioms(*c);
    else if (const auto* b = std::get_if<BialgebraPresentation>(&p))
        r = check_bialgebra(*b);
    else
        r = check_hopf(std::get<HopfPresentation>(p));
    print_report(kind, r, o);
    return r.passed ? kPass : kMathFailure;
}

int cmd_dual(const Options& o)
{
    const Presentation p = read_presentation_file(o.path);
    Json out;
    if (const auto* a = std::get_if<AlgebraPresentation>(&p))
        out = to_json(dual_coalgebra_fgp(*a));
    else if (const auto* c = std::get_if<CoalgebraPresentation>(&p))
        out = to_json(dual_algebra(*c));
    else if (const auto* b = std::get_if<BialgebraPresentation>(&p))
        out = to_json(dual_bialgebra_findim(*b));
    else if (const auto* h = std::get_if<HopfPresentation>(&p))
        out = to_json(dual_hopf_findim(*h));
    else
        throw UsageError("dual: a recurrent sequence lives in the dual of R[x], which has infinite rank; "
                         "use finite-dual");
    std::cout << format_document(out);
    return kPass;
}

int cmd_finite_dual(const Options& o)
{
    const Presentation p = read_presentation_file(o.path);
    if (const auto* f = std::get_if<RecurrentSequence>(&p)) {
        try {
            std::cout << format_document(to_json(orbit_coalgebra_polyalg(*f), o.probe_degree));
        } catch (const MembershipError& e) {
            std::cerr << "finite-dual: " << e.what() << "\n";
            return kMathFailure;
        }
        return kPass;
    }
    if (const auto* a = std::get_if<AlgebraPresentation>(&p)) {
        std::cout << format_document(to_json(finite_dual_findim(*a), o.probe_degree));
        return kPass;
    }
    throw UsageError("finite-dual: expected an algebra or recseq file, got " + kind_name(p));
}

int cmd_verify(const Options& o)
{
    RunConfig config;
    if (o.suite != "all")
        config.suites = std::vector<std::string>{o.suite};
    config.seed = o.seed;
    config.max_rank = o.max_rank;
    config.probe_degree = o.probe_degree;
    config.timing = o.timing;
    if (config.max_rank == 0)
        throw UsageError("verify: --max-rank must be at least 1");
    RunReport report;
    try {
        report = run_all(config);
    } catch (const UnknownSuite& e) {
        std::string known;
        for (const auto& id : suite_ids())
            known += " " + id;
        throw UsageError(std::string(e.what()) + "; known suites:" + known + " (or all)");
    }
    if (o.format == "json")
        std::cout << format_document(to_json(report));
    else
        std::cout << to_text(report);
    return report.passed() ? kPass : kMathFailure;
}

std::size_t size_param(const Options& o, std::size_t i, const char* what)
{
    if (i >= o.params.size())
        throw UsageError("gen " + o.family + ": missing " + what);
    const std::string& s = o.params[i];
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty() || v == 0)
        throw UsageError("gen " + o.family + ": " + what + " must be a positive integer, got \"" + s + "\"");
    return v;
}

MultiplicationTable monoid_by_name(const std::string& name)
{
    auto suffix = [&](const std::string& prefix) -> std::optional<std::size_t> {
        if (name.rfind(prefix, 0) != 0)
            return std::nullopt;
        const std::string rest = name.substr(prefix.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        const auto v = std::stoul(rest);
        return v == 0 ? std::nullopt : std::optional<std::size_t>(v);
    };
    if (name == "trivial")
        return cyclic_group_table(1);
    if (name == "left-zero")
        return left_zero_monoid_table();
    if (auto n = suffix("cyclic-"))
        return cyclic_group_table(*n);
    if (auto n = suffix("max-"))
        return max_monoid_table(*n);
    throw UsageError("gen monoid-algebra: unknown monoid \"" + name +
                     "\" (trivial, left-zero, cyclic-N, max-N)");
}

int cmd_gen(const Options& o)
{
    Ring ring = Ring::rationals();
    try {
        ring = Ring::parse(o.base);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--base: ") + e.what());
    }
    const std::string& f = o.family;
    Json out;
    if (f == "group-algebra") {
        if (!o.params.empty() && (o.params[0] == "S3" || o.params[0] == "s3"))
            out = to_json(group_algebra_hopf(symmetric_group_table(3), ring));
        else
            out = to_json(group_algebra_hopf(cyclic_group_table(size_param(o, 0, "group order")), ring));
    } else if (f == "monoid-algebra") {
        if (o.params.empty())
            throw UsageError("gen monoid-algebra: missing monoid name");
        out = to_json(monoid_algebra(monoid_by_name(o.params[0]), ring));
    } else if (f == "matrix-algebra") {
        out = to_json(matrix_algebra(size_param(o, 0, "size"), ring));
    } else if (f == "truncated-poly") {
        out = to_json(truncated_polynomial_algebra(size_param(o, 0, "length"), ring));
    } else if (f == "sweedler-h4") {
        try {
            out = to_json(sweedler_h4(ring));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("gen sweedler-h4: ") + e.what());
        }
    } else if (f == "comatrix") {
        out = to_json(comatrix_coalgebra(size_param(o, 0, "size"), ring));
    } else {
        throw UsageError("gen: unknown family \"" + f +
                         "\" (group-algebra, monoid-algebra, matrix-algebra, truncated-poly, "
                         "sweedler-h4, comatrix)");
    }
    std::cout << format_document(out);
    return kPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact algebras, coalgebras, Hopf algebras and their duals"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--probe-degree", o.probe_degree, "Highest power of x used as a probe");
    app.add_option("--max-rank", o.max_rank, "Largest free rank in the verification suites");
    app.add_option("--seed", o.seed, "Seed for the randomized checks");

    auto* check = app.add_subcommand("check", "Check the axioms of a presentation file");
    check->add_option("path", o.path)->required();
    auto* dual = app.add_subcommand("dual", "Print the dual presentation");
    dual->add_option("path", o.path)->required();
    auto* finite = app.add_subcommand("finite-dual", "Print the finite dual with its kappa certificate");
    finite->add_option("path", o.path)->required();
    auto* verify = app.add_subcommand("verify", "Run a verification suite, or all");
    verify->add_option("suite", o.suite)->required();
    verify->add_flag("--timing", o.timing, "Include wall-clock durations");
    auto* gen = app.add_subcommand("gen", "Generate a presentation from a family");
    gen->add_option("family", o.family)->required();
    gen->add_option("params", o.params);
    gen->add_option("--base", o.base, "Q, Z or Fp:<prime>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*check)
            return cmd_check(o);
        if (*dual)
            return cmd_dual(o);
        if (*finite)
            return cmd_finite_dual(o);
        if (*verify)
            return cmd_verify(o);
        return cmd_gen(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
