#include <gtest/gtest.h>

#include "hopfdual/families.hpp"
#include "hopfdual/presentation_io.hpp"
#include "hopfdual/verify.hpp"

using namespace hopfdual;

namespace {

const Ring Q = Ring::rationals();

template <class T>
T reparse(const T& x)
{
    return std::get<T>(parse_presentation(to_json(x).dump()));
}

} // namespace

TEST(PresentationIo, AlgebraCoalgebraRoundTrip)
{
    for (Ring ring : {Q, Ring::prime_field(5), Ring::integers()}) {
        for (const auto& na : algebra_corpus(ring)) {
            const AlgebraPresentation back = reparse(na.algebra);
            EXPECT_EQ(back, na.algebra) << na.name;
            EXPECT_EQ(back.carrier().labels(), na.algebra.carrier().labels());
        }
        for (const auto& nc : coalgebra_corpus(ring))
            EXPECT_EQ(reparse(nc.coalgebra), nc.coalgebra) << nc.name;
    }
}

TEST(PresentationIo, HopfRoundTrip)
{
    for (const auto& nh : hopf_corpus(Q)) {
        const HopfPresentation back = reparse(nh.hopf);
        EXPECT_EQ(back.algebra(), nh.hopf.algebra()) << nh.name;
        EXPECT_EQ(back.coalgebra(), nh.hopf.coalgebra()) << nh.name;
        EXPECT_EQ(back.antipode, nh.hopf.antipode) << nh.name;
    }
}

TEST(PresentationIo, RecurrentSequenceRoundTrip)
{
    for (const auto& ns : recurrent_corpus()) {
        const RecurrentSequence back = reparse(ns.sequence);
        EXPECT_EQ(back.initial(), ns.sequence.initial());
        EXPECT_EQ(back.recurrence(), ns.sequence.recurrence());
    }
}

TEST(PresentationIo, ScalarForms)
{
    EXPECT_EQ(scalar_from_json(Json(3), Q), Scalar(Q, 3L));
    EXPECT_EQ(scalar_from_json(Json("-2/6"), Q), Scalar(Q, -1, 3));
    EXPECT_EQ(scalar_from_json(Json("7"), Q), Scalar(Q, 7L));
    EXPECT_EQ(scalar_from_json(Json::array({1, 4}), Q), Scalar(Q, 1, 4));
    EXPECT_EQ(scalar_from_json(Json::array({"1", "-4"}), Q), Scalar(Q, -1, 4));
    EXPECT_EQ(scalar_to_json(Scalar(Q, -3, 9)), Json::array({-1, 3}));
    EXPECT_THROW(scalar_from_json(Json("abc"), Q), ParseError);
    EXPECT_THROW(scalar_from_json(Json::array({1, 0}), Q), ParseError);
    EXPECT_THROW(scalar_from_json(Json(1.5), Q), ParseError);
}

TEST(PresentationIo, BigIntegersSurviveAsStrings)
{
    const mpz_class big("123456789012345678901234567890");
    const Scalar s(Q, big, mpz_class(7));
    const Json j = scalar_to_json(s);
    EXPECT_TRUE(j[0].is_string());
    EXPECT_EQ(scalar_from_json(Json::parse(j.dump()), Q), s);
}

TEST(PresentationIo, PrimeFieldInputsAreReduced)
{
    const auto p = parse_presentation(
        R"({"kind": "algebra", "base": "Fp:5", "rank": 1, "mul": [[0,0,0,6,1]], "unit": [[1,1]]})");
    const auto& a = std::get<AlgebraPresentation>(p);
    EXPECT_TRUE(a.constant(0, 0, 0).is_one());
}

TEST(PresentationIo, KindInferred)
{
    EXPECT_EQ(kind_name(parse_presentation(R"({"rank": 1, "mul": [[0,0,0,1,1]], "unit": [[1,1]]})")),
              "algebra");
    EXPECT_EQ(kind_name(parse_presentation(R"({"rank": 1, "comul": [[0,0,0,1,1]], "counit": [1]})")),
              "coalgebra");
    EXPECT_EQ(kind_name(parse_presentation(R"({"initial": [1], "recurrence": [2]})")), "recseq");
    EXPECT_EQ(kind_name(parse_presentation(to_json(group_algebra_hopf(cyclic_group_table(2), Q)).dump())),
              "hopf");
}

TEST(PresentationIo, Errors)
{
    const char* bad[] = {
        "not json",
        "[]",
        R"({"kind": "algebra", "rank": 1, "mul": [[0,0,0,1,1]]})",
        R"({"kind": "algebra", "rank": 1, "mul": [[0,0,1,1,1]], "unit": [[1,1]]})",
        R"({"kind": "algebra", "rank": 1, "mul": [[0,0,0,1,1],[0,0,0,1,1]], "unit": [[1,1]]})",
        R"({"kind": "algebra", "rank": 1, "mul": [[0,0,0,1]], "unit": [[1,1]]})",
        R"({"kind": "algebra", "rank": -1, "mul": [], "unit": []})",
        R"({"kind": "algebra", "base": "Fp:4", "rank": 1, "mul": [], "unit": [[1,1]]})",
        R"({"kind": "algebra", "base": "Z", "rank": 1, "mul": [[0,0,0,1,2]], "unit": [[1,1]]})",
        R"({"kind": "monoid", "rank": 1})",
        R"({"kind": "recseq", "initial": [], "recurrence": [1]})",
        R"({"kind": "hopf", "rank": 1, "mul": [[0,0,0,1,1]], "unit": [[1,1]], "comul": [[0,0,0,1,1]],
            "counit": [[1,1]], "antipode": [[[1,1],[0,1]]]})",
        R"({"rank": 1})",
    };
    for (const char* text : bad)
        EXPECT_THROW(parse_presentation(text), ParseError) << text;
    EXPECT_THROW(read_presentation_file("/nonexistent/file.json"), ParseError);
}

TEST(PresentationIo, FormatDocumentPutsListEntriesOnLines)
{
    const std::string s = format_document(to_json(truncated_polynomial_algebra(2, Q)));
    EXPECT_NE(s.find("\n    [0,0,0,1,1],\n"), std::string::npos) << s;
    EXPECT_EQ(Json::parse(s), to_json(truncated_polynomial_algebra(2, Q)));
}
