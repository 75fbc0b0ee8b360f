#ifndef HOPFDUAL_PRESENTATION_IO_HPP
#define HOPFDUAL_PRESENTATION_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "hopfdual/finite_dual.hpp"
#include "hopfdual/hopf.hpp"
#include "hopfdual/recurrence.hpp"

namespace hopfdual {

/*
 * Presentation files.
 *
 *   {
 *     "kind": "algebra" | "coalgebra" | "bialgebra" | "hopf" | "recseq",
 *     "base": "Q" | "Fp:<p>" | "Z",
 *     "rank": n,
 *     "labels": ["1", "g", ...],                 optional
 *     "mul":   [[i, j, k, num, den], ...],        e_i e_j has e_k-coefficient num/den
 *     "unit":  [[num, den], ...],
 *     "comul": [[k, i, j, num, den], ...],        Delta e_k has e_i (x) e_j-coefficient
 *     "counit": [[num, den], ...],
 *     "antipode": [[[num, den], ...], ...]       matrix rows, S e_j = sum_i row_i[j] e_i
 *   }
 *
 * A recseq file has "initial" and "recurrence" scalar lists instead. A scalar
 * is an integer, a decimal string "n" or "n/d", or a pair [num, den] whose
 * parts are integers or decimal strings. Integers beyond 64 bits are written
 * as strings. Without "kind" the kind is inferred from the fields present.
 */

using Json = nlohmann::ordered_json;

using Presentation = std::variant<AlgebraPresentation, CoalgebraPresentation,
                                  BialgebraPresentation, HopfPresentation, RecurrentSequence>;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Presentation parse_presentation(std::string_view text);
Presentation presentation_from_json(const Json& doc);
/// Throws ParseError if the file cannot be read.
Presentation read_presentation_file(const std::string& path);

std::string kind_name(const Presentation& p);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Ring ring);

Json to_json(const AlgebraPresentation& a);
Json to_json(const CoalgebraPresentation& c);
Json to_json(const BialgebraPresentation& b);
Json to_json(const HopfPresentation& h);
Json to_json(const RecurrentSequence& f);
Json to_json(const Presentation& p);
Json to_json(const Matrix& m);
Json to_json(const AxiomReport& r);

/// A coalgebra document with the kappa certificate: the values of the basis
/// functionals on the probes and the rank of that matrix. For R[x] the
/// functionals themselves are listed as recurrent sequences.
Json to_json(const FiniteDualCoalgebra& fd, std::size_t probe_degree);

/// Indented JSON with each entry of a top-level list on its own line.
std::string format_document(const Json& doc);

} // namespace hopfdual

#endif
