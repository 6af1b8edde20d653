#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "folnerlab/error.hpp"
#include "folnerlab/io.hpp"
#include "support.hpp"

using namespace folnerlab;
using namespace testing_support;

TEST(ElementJson, ParsesTheDocumentedExample)
{
    auto j = Json::parse(R"({"algebra":"group:Z","mode":"exact","terms":[)"
                         R"({"irrep":0,"row":1,"col":1,"re":"1","im":"0"},)"
                         R"({"irrep":1,"row":1,"col":1,"re":"-1","im":"0"}]})");
    auto a = element_from_json(j);
    auto alg = algebra("group:Z");
    EXPECT_EQ(a, exact(alg, {{IrrepLabel(0), "1"}, {IrrepLabel(1), "-1"}}));
    EXPECT_EQ(element_to_json(a).dump(), j.dump());
}

TEST(ElementJson, ExactRoundTripIsByteIdentical)
{
    std::mt19937_64 rng(2);
    for (const char* tag : {"group:Z^2", "group:heisenberg", "group:ZxZ/2"}) {
        auto alg = algebra(tag);
        auto labels = alg->ring().standard_window(1).labels();
        for (int trial = 0; trial < 5; ++trial) {
            auto a = random_exact(alg, labels, rng, true) * Scalar(GaussianRational(q("7/3"), q("-1/5")));
            std::string once = dump(element_to_json(a));
            auto back = element_from_json(Json::parse(once));
            EXPECT_EQ(back, a);
            EXPECT_EQ(dump(element_to_json(back)), once);
        }
    }
}

TEST(ElementJson, FloatAndFiniteLabels)
{
    auto j = Json::parse(R"({"algebra":"finite:S3","mode":"float","terms":[{"irrep":"std","row":2,"col":1,"re":0.5,"im":-1}]})");
    auto a = element_from_json(j);
    auto alg = algebra("finite:S3");
    EXPECT_EQ(a.coefficient({IrrepLabel(2), 2, 1}).to_complex(), Complex(0.5, -1.0));
    auto back = element_to_json(a);
    EXPECT_EQ(back["terms"][0]["irrep"], "std");
}

TEST(ElementJson, EmptyTermsIsZero)
{
    auto a = element_from_json(Json::parse(R"({"algebra":"su2","mode":"float","terms":[]})"));
    EXPECT_TRUE(a.is_zero());
}

TEST(ElementJson, Rejections)
{
    auto bad = [](const char* text) { return element_from_json(Json::parse(text)); };
    // row 2 on a one-dimensional irreducible
    EXPECT_THROW(bad(R"({"algebra":"group:Z","mode":"exact","terms":[{"irrep":0,"row":2,"col":1,"re":"1","im":"0"}]})"),
                 PreconditionError);
    EXPECT_THROW(bad(R"({"algebra":"group:Z","mode":"exact","terms":[{"irrep":0,"re":0.5}]})"), PreconditionError);
    EXPECT_THROW(bad(R"({"algebra":"group:Z","mode":"float","terms":[]})"), PreconditionError);
    EXPECT_THROW(bad(R"({"algebra":"group:Z","terms":[],"extra":1})"), PreconditionError);
    EXPECT_THROW(bad(R"({"algebra":"group:Z","terms":[{"irrep":0,"re":"1","phase":"0"}]})"), PreconditionError);
    EXPECT_THROW(bad(R"({"algebra":"group:Q","terms":[]})"), PreconditionError);
    EXPECT_THROW(bad(R"({"algebra":"su2","terms":[{"irrep":-1,"re":1}]})"), Error);
    try {
        bad(R"({"algebra":"group:Z","terms":[{"irrep":0,"re":"1"},{"irrep":0,"row":2,"re":"1"}]})");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("terms[1]"), std::string::npos) << e.what();
    }
}

TEST(MatrixJson, RoundTripAndBareElement)
{
    auto alg = algebra("group:Z");
    MatrixOverPol T(alg, 2);
    T.at(0, 1) = exact(alg, {{IrrepLabel(2), "1/2"}});
    T.at(1, 0) = AlgebraElement::unit(alg);
    auto j = matrix_to_json(T);
    auto back = matrix_from_json(j);
    EXPECT_EQ(back.n(), 2u);
    EXPECT_EQ(matrix_to_json(back).dump(), j.dump());
    auto one = matrix_from_json(element_to_json(AlgebraElement::unit(alg)));
    EXPECT_EQ(one.n(), 1u);
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"n":2,"entries":[[]]})")), PreconditionError);
}

TEST(Reports, EstimateJsonCarriesExactFractions)
{
    auto alg = algebra("group:Z");
    auto T = MatrixOverPol::scalar(exact(alg, {{IrrepLabel(-1), "-1"}, {IrrepLabel(0), "2"}, {IrrepLabel(1), "-1"}}));
    auto j = to_json(kernel_dim_estimate(T, interval(-20, 20)), alg->ring());
    EXPECT_EQ(j["lower"], "0");
    EXPECT_EQ(j["upper"], "2/41");
    EXPECT_EQ(j["window"].size(), 41u);
}

TEST(Reports, FileErrorsNameTheLine)
{
    std::string path = ::testing::TempDir() + "broken.json";
    {
        std::ofstream out(path);
        out << "{\n  \"algebra\": \"group:Z\",\n  \"terms\": [,]\n}\n";
    }
    try {
        read_json_file(path);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(read_json_file(path + ".missing"), PreconditionError);
}
