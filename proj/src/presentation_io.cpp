#include "hopfdual/presentation_io.hpp"

#include <fstream>
#include <sstream>

#include "hopfdual/linalg.hpp"

namespace hopfdual {

namespace {

mpz_class integer_from_json(const Json& j, const char* what)
{
    if (j.is_number_unsigned())
        return mpz_class(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        mpz_class z;
        const std::string s = j.get<std::string>();
        if (s.empty() || mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
            throw ParseError(std::string(what) + ": not an integer: \"" + s + "\"");
        return z;
    }
    throw ParseError(std::string(what) + ": expected an integer, got " + j.dump());
}

Json integer_to_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return Json(z.get_si());
    return Json(z.get_str());
}

std::size_t index_from_json(const Json& j, std::size_t bound, const char* what)
{
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw ParseError(std::string(what) + ": index must be a non-negative integer, got " + j.dump());
    const auto v = j.get<std::uint64_t>();
    if (v >= bound)
        throw ParseError(std::string(what) + ": index " + std::to_string(v) + " out of range (rank " +
                         std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

Scalar make_scalar(Ring ring, const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw ParseError("zero denominator");
    try {
        return Scalar(ring, num, den);
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("scalar not in ") + ring.to_string() + ": " + e.what());
    }
}

const Json& field(const Json& doc, const char* key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& list_field(const Json& doc, const char* key)
{
    const Json& j = field(doc, key);
    if (!j.is_array())
        throw ParseError(std::string("field \"") + key + "\" must be a list");
    return j;
}

Vector scalar_list(const Json& doc, const char* key, Ring ring, std::optional<std::size_t> length)
{
    const Json& j = list_field(doc, key);
    if (length && j.size() != *length)
        throw ParseError(std::string("field \"") + key + "\" has " + std::to_string(j.size()) +
                         " entries, expected " + std::to_string(*length));
    Vector v;
    for (const auto& x : j)
        v.push_back(scalar_from_json(x, ring));
    return v;
}

SparseTensor triple_list(const Json& doc, const char* key, Ring ring, std::size_t n)
{
    SparseTensor t;
    for (const auto& e : list_field(doc, key)) {
        if (!e.is_array() || e.size() != 5)
            throw ParseError(std::string("entries of \"") + key +
                             "\" must be [i, j, k, numerator, denominator], got " + e.dump());
        const std::array<std::size_t, 3> idx{index_from_json(e[0], n, key),
                                             index_from_json(e[1], n, key),
                                             index_from_json(e[2], n, key)};
        const Scalar value = make_scalar(ring, integer_from_json(e[3], key), integer_from_json(e[4], key));
        if (!t.emplace(idx, value).second)
            throw ParseError(std::string("duplicate entry in \"") + key + "\": " + e.dump());
    }
    return t;
}

FreeModule carrier_from(const Json& doc, Ring ring)
{
    const Json& r = field(doc, "rank");
    if (!r.is_number_integer() || r.get<std::int64_t>() < 0)
        throw ParseError("\"rank\" must be a non-negative integer");
    const auto n = static_cast<std::size_t>(r.get<std::int64_t>());
    std::vector<std::string> labels;
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array() || it->size() != n)
            throw ParseError("\"labels\" must be a list of " + std::to_string(n) + " strings");
        for (const auto& l : *it) {
            if (!l.is_string())
                throw ParseError("\"labels\" must be a list of strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return FreeModule(ring, n, std::move(labels));
}

AlgebraPresentation algebra_from(const Json& doc, const FreeModule& carrier)
{
    const Ring ring = carrier.ring();
    const std::size_t n = carrier.rank();
    return AlgebraPresentation(carrier, triple_list(doc, "mul", ring, n),
                               scalar_list(doc, "unit", ring, n));
}

CoalgebraPresentation coalgebra_from(const Json& doc, const FreeModule& carrier)
{
    const Ring ring = carrier.ring();
    const std::size_t n = carrier.rank();
    return CoalgebraPresentation(carrier, triple_list(doc, "comul", ring, n),
                                 scalar_list(doc, "counit", ring, n));
}

Matrix matrix_from(const Json& doc, const char* key, Ring ring, std::size_t n)
{
    const Json& rows = list_field(doc, key);
    if (rows.size() != n)
        throw ParseError(std::string("\"") + key + "\" must have " + std::to_string(n) + " rows");
    Matrix m(ring, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw ParseError(std::string("\"") + key + "\" row " + std::to_string(r) + " must have " +
                             std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = scalar_from_json(rows[r][c], ring);
    }
    return m;
}

std::string infer_kind(const Json& doc)
{
    if (auto it = doc.find("kind"); it != doc.end()) {
        if (!it->is_string())
            throw ParseError("\"kind\" must be a string");
        return it->get<std::string>();
    }
    if (doc.contains("initial"))
        return "recseq";
    if (doc.contains("antipode"))
        return "hopf";
    if (doc.contains("mul") && doc.contains("comul"))
        return "bialgebra";
    if (doc.contains("mul"))
        return "algebra";
    if (doc.contains("comul"))
        return "coalgebra";
    throw ParseError("cannot tell the kind of presentation; add a \"kind\" field");
}

Json triples_to_json(const SparseTensor& t)
{
    Json out = Json::array();
    for (const auto& [idx, v] : t) {
        Json e = {idx[0], idx[1], idx[2]};
        e.push_back(integer_to_json(v.numerator()));
        e.push_back(integer_to_json(v.denominator()));
        out.push_back(std::move(e));
    }
    return out;
}

Json vector_to_json(const Vector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(scalar_to_json(x));
    return out;
}

Json header(const char* kind, const FreeModule& carrier)
{
    Json doc;
    doc["kind"] = kind;
    doc["base"] = carrier.ring().to_string();
    doc["rank"] = carrier.rank();
    if (!carrier.labels().empty())
        doc["labels"] = carrier.labels();
    return doc;
}

void put_algebra(Json& doc, const AlgebraPresentation& a)
{
    doc["mul"] = triples_to_json(a.mul());
    doc["unit"] = vector_to_json(a.unit());
}

void put_coalgebra(Json& doc, const CoalgebraPresentation& c)
{
    doc["comul"] = triples_to_json(c.comul());
    doc["counit"] = vector_to_json(c.counit());
}

} // namespace

Json scalar_to_json(const Scalar& s)
{
    return Json::array({integer_to_json(s.numerator()), integer_to_json(s.denominator())});
}

Scalar scalar_from_json(const Json& j, Ring ring)
{
    if (j.is_array()) {
        if (j.size() != 2)
            throw ParseError("scalar pair must be [numerator, denominator], got " + j.dump());
        return make_scalar(ring, integer_from_json(j[0], "numerator"),
                           integer_from_json(j[1], "denominator"));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        if (slash == std::string::npos)
            return make_scalar(ring, integer_from_json(j, "scalar"), 1);
        return make_scalar(ring, integer_from_json(Json(s.substr(0, slash)), "numerator"),
                           integer_from_json(Json(s.substr(slash + 1)), "denominator"));
    }
    if (j.is_number_integer())
        return make_scalar(ring, integer_from_json(j, "scalar"), 1);
    throw ParseError("expected an exact scalar, got " + j.dump());
}

Presentation presentation_from_json(const Json& doc)
{
    if (!doc.is_object())
        throw ParseError("presentation must be a JSON object");
    const std::string kind = infer_kind(doc);
    Ring ring = Ring::rationals();
    if (auto it = doc.find("base"); it != doc.end()) {
        if (!it->is_string())
            throw ParseError("\"base\" must be a string");
        try {
            ring = Ring::parse(it->get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad \"base\": ") + e.what());
        }
    }
    try {
        if (kind == "recseq")
            return RecurrentSequence(ring, scalar_list(doc, "initial", ring, std::nullopt),
                                     scalar_list(doc, "recurrence", ring, std::nullopt));
        const FreeModule carrier = carrier_from(doc, ring);
        if (kind == "algebra")
            return algebra_from(doc, carrier);
        if (kind == "coalgebra")
            return coalgebra_from(doc, carrier);
        if (kind == "bialgebra" || kind == "hopf") {
            BialgebraPresentation b(algebra_from(doc, carrier), coalgebra_from(doc, carrier));
            if (kind == "bialgebra")
                return b;
            Matrix s = matrix_from(doc, "antipode", ring, carrier.rank());
            return HopfPresentation(std::move(b), LinearMap(carrier, carrier, std::move(s)));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown kind \"" + kind + "\"");
}

Presentation parse_presentation(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return presentation_from_json(doc);
}

Presentation read_presentation_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_presentation(std::string_view(text.str()));
}

std::string kind_name(const Presentation& p)
{
    static const char* const names[] = {"algebra", "coalgebra", "bialgebra", "hopf", "recseq"};
    return names[p.index()];
}

Json to_json(const AlgebraPresentation& a)
{
    Json doc = header("algebra", a.carrier());
    put_algebra(doc, a);
    return doc;
}

Json to_json(const CoalgebraPresentation& c)
{
    Json doc = header("coalgebra", c.carrier());
    put_coalgebra(doc, c);
    return doc;
}

Json to_json(const BialgebraPresentation& b)
{
    Json doc = header("bialgebra", b.carrier());
    put_algebra(doc, b.algebra);
    put_coalgebra(doc, b.coalgebra);
    return doc;
}

Json to_json(const HopfPresentation& h)
{
    Json doc = header("hopf", h.carrier());
    put_algebra(doc, h.algebra());
    put_coalgebra(doc, h.coalgebra());
    doc["antipode"] = to_json(h.antipode.matrix());
    return doc;
}

Json to_json(const RecurrentSequence& f)
{
    Json doc;
    doc["kind"] = "recseq";
    doc["base"] = f.ring().to_string();
    doc["initial"] = vector_to_json(f.initial());
    doc["recurrence"] = vector_to_json(f.recurrence());
    return doc;
}

Json to_json(const Presentation& p)
{
    return std::visit([](const auto& x) { return to_json(x); }, p);
}

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(vector_to_json(m.row_vector(r)));
    return rows;
}

Json to_json(const AxiomReport& r)
{
    Json doc;
    doc["passed"] = r.passed;
    Json ws = Json::array();
    for (const auto& w : r.witnesses) {
        Json e;
        e["law"] = w.law;
        e["indices"] = w.indices;
        e["left"] = scalar_to_json(w.left);
        e["right"] = scalar_to_json(w.right);
        ws.push_back(std::move(e));
    }
    doc["witnesses"] = std::move(ws);
    return doc;
}

Json to_json(const FiniteDualCoalgebra& fd, std::size_t probe_degree)
{
    Json doc = to_json(fd.coalgebra());
    const Matrix probes = kappa_probe(fd, probe_degree);
    doc["ambient"] = fd.polynomial() ? "polynomial" : "algebra";
    if (fd.polynomial()) {
        doc["probe_degree"] = probe_degree;
        Json fs = Json::array();
        for (const auto& g : fd.functionals()) {
            Json e;
            e["initial"] = vector_to_json(g.initial());
            e["recurrence"] = vector_to_json(g.recurrence());
            fs.push_back(std::move(e));
        }
        doc["functionals"] = std::move(fs);
    }
    doc["kappa"] = to_json(probes);
    std::size_t r = 0;
    if (probes.ring().is_field())
        r = rank(probes);
    else
        for (const auto& d : invariant_factors(probes))
            r += d != 0;
    doc["kappa_rank"] = r;
    return doc;
}

std::string format_document(const Json& doc)
{
    if (!doc.is_object())
        return doc.dump() + "\n";
    std::string out = "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : doc.items()) {
        out += "  " + Json(key).dump() + ": ";
        if (value.is_array() && !value.empty() && (value[0].is_array() || value[0].is_object())) {
            out += "[\n";
            for (std::size_t k = 0; k < value.size(); ++k)
                out += "    " + value[k].dump() + (k + 1 < value.size() ? ",\n" : "\n");
            out += "  ]";
        } else {
            out += value.dump();
        }
        out += (++i < doc.size() ? ",\n" : "\n");
    }
    return out + "}\n";
}

} // namespace hopfdual
