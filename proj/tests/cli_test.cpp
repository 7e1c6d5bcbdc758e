#include <gtest/gtest.h>

#include <sstream>

#include "ellmf/cli.hpp"
#include "ellmf/serialize.hpp"

using namespace ellmf;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Serialize, MfRoundTrip) {
    for (const MatrixFactorization& m :
         {mf_kst(), mf_linear(4), mf_cone(PointP1(Scalar::lambda(), 1)), reduce_mf(mf_cone(PointP1(Scalar::lambda(), 1))),
          mf_kst(LambdaSpec::numeric(Rational(7, 3)))}) {
        const Json j = mf_to_json(m);
        EXPECT_EQ(mf_from_json(j), m);
        EXPECT_EQ(mf_to_json(mf_from_json(Json::parse(dump_canonical(j)))), j);
    }
}

TEST(Serialize, BettiRoundTrip) {
    const BettiTable t = template_table(BettiClass{BettiType::TypeI, 1, 1, 0, 0});
    const Json j = betti_to_json(t);
    EXPECT_EQ(betti_from_json(j), t);
    EXPECT_EQ(dump_canonical(j),
              "{\n  \"entries\": [\n    {\n      \"beta\": 1,\n      \"i\": 0,\n      \"j\": 0\n    },\n"
              "    {\n      \"beta\": 1,\n      \"i\": 0,\n      \"j\": 1\n    },\n"
              "    {\n      \"beta\": 1,\n      \"i\": 1,\n      \"j\": 2\n    },\n"
              "    {\n      \"beta\": 1,\n      \"i\": 1,\n      \"j\": 3\n    }\n  ]\n}\n");
}

TEST(Serialize, RejectsMalformedInput) {
    Json j = mf_to_json(mf_linear(1));
    j["A"]["rows"][0][0][0]["c"][0] = "1/0";
    try {
        mf_from_json(j);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("$.A.rows[0][0][0].c[0]"), std::string::npos) << e.what();
    }
    j = mf_to_json(mf_kst(LambdaSpec::numeric(2)));
    j["f"][0]["c"] = Json::array({"1", "2"});
    EXPECT_THROW(mf_from_json(j), ParseError);
    j = mf_to_json(mf_kst());
    j["lambda"] = "1";
    EXPECT_THROW(mf_from_json(j), ParseError);
    EXPECT_THROW(betti_from_json(Json::parse(R"({"entries":[{"i":2,"j":0,"beta":1}]})")), ParseError);
    EXPECT_THROW(betti_from_json(Json::parse(R"({"entries":[{"i":0,"j":0,"beta":0}]})")), ParseError);
    EXPECT_THROW(betti_from_json(Json::parse(R"({"rows":[]})")), ParseError);
}

TEST(Serialize, RationalLiteralGrammar) {
    EXPECT_EQ(parse_rational("-12/8"), Rational(-3, 2));
    for (const char* bad : {"1/0", "+1", "1.5", "1/-2", "", "1/02", "a"}) EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Cli, RootsCsvContainsPatternRow) {
    const Outcome o = run_cli({"roots", "--m-max", "0", "--n-min", "0", "--n-max", "0", "--format", "csv"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out.rfind("a0,a1,a2,a3,a4,n,r,d,chi\n", 0), 0u);
    EXPECT_NE(o.out.find("\n0,1,0,0,0,0,0,1,0\n"), std::string::npos);
    std::size_t lines = 0;
    for (char c : o.out) lines += c == '\n';
    EXPECT_EQ(lines, 1 + enumerate_real_roots(0, 0, 0).size());
}

TEST(Cli, CohomTwoTablesOfMultiplicityFour) {
    const Outcome o = run_cli({"--format", "json", "cohom", "0", "1"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Json j = Json::parse(o.out);
    ASSERT_EQ(j["tables"].size(), 2u);
    for (const auto& t : j["tables"]) {
        EXPECT_EQ(t["multiplicity"], 4);
        EXPECT_EQ(t["cohom"]["tube"], "rank2");
    }
    EXPECT_TRUE(j["rank_one"].is_null());
    EXPECT_EQ(run_cli({"cohom", "1", "-2"}).code, 2);
}

TEST(Cli, BuildThenVerify) {
    const Outcome built = run_cli({"mf", "build", "reduced", "1", "1"});
    ASSERT_EQ(built.code, 0) << built.err;
    EXPECT_EQ(run_cli({"mf", "verify", "-"}, built.out).code, 0);

    Json j = Json::parse(run_cli({"mf", "build", "kst"}).out);
    j["A"]["rows"][1][0] = poly_to_json(-poly_from_json(j["A"]["rows"][1][0], "$", false));
    const Outcome bad = run_cli({"mf", "verify", "-"}, j.dump());
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("AB(1,1)"), std::string::npos);
}

TEST(Cli, ReduceThenBetti) {
    const Outcome cone = run_cli({"mf", "build", "cone", "lambda", "1"});
    ASSERT_EQ(cone.code, 0);
    EXPECT_EQ(run_cli({"mf", "betti", "-"}, cone.out).code, 2);
    const Outcome red = run_cli({"mf", "reduce", "-"}, cone.out);
    ASSERT_EQ(red.code, 0) << red.err;
    const Outcome betti = run_cli({"--format", "json", "mf", "betti", "-"}, red.out);
    ASSERT_EQ(betti.code, 0);
    EXPECT_EQ(betti_from_json(Json::parse(betti.out)),
              (BettiTable{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 2}, 1}, {{1, 3}, 1}}));
}

TEST(Cli, NumericLambda) {
    const Outcome o = run_cli({"mf", "build", "cone", "lambda", "1", "--lambda", "3/2"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(Json::parse(o.out)["lambda"], "3/2");
    EXPECT_EQ(run_cli({"mf", "build", "kst", "--lambda", "1"}).code, 2);
    EXPECT_EQ(run_cli({"mf", "build", "kst", "--lambda", "1/0"}).code, 2);
}

TEST(Cli, ClassifyBetti) {
    const Outcome o = run_cli({"classify-betti", "-"}, R"({"entries":[{"i":0,"j":1,"beta":1},{"i":1,"j":2,"beta":1}]})");
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("TypeIII(0,0)"), std::string::npos);
    EXPECT_EQ(run_cli({"classify-betti", "-"}, R"({"entries":[{"i":0,"j":0,"beta":1},{"i":1,"j":1,"beta":2}]})").code,
              1);
    EXPECT_EQ(run_cli({"classify-betti", "-"}, "{").code, 2);
    EXPECT_EQ(run_cli({"classify-betti", "/nonexistent/file.json"}).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"reduce-rd", "0", "0"}).code, 2);
    EXPECT_EQ(run_cli({"reduce-rd", "-1", "2"}).code, 0);
    EXPECT_EQ(run_cli({"slope-word", "2/0"}).code, 2);
    EXPECT_EQ(run_cli({"class-info", "1", "2", "3"}).code, 2);
    EXPECT_EQ(run_cli({"--format", "csv", "cohom", "0", "1"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"--format", "json", "betti-catalog", "--a-max", "2", "--b-max", "2", "--r-max", "3"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}
