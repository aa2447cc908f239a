#include "qform/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

using namespace qform;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qform");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

VerifyOptions opts(std::size_t n, std::size_t samples) {
    VerifyOptions o;
    o.n = n;
    o.samples = samples;
    return o;
}

} // namespace

TEST(Verify, ExactSuitesPassOnOneFamily) {
    EXPECT_TRUE(verify_pearson("SV", opts(40, 2)).ok());
    EXPECT_TRUE(verify_decomposition("H_mu_q", opts(12, 2)).ok());
    EXPECT_TRUE(verify_moments("T_omega_q", opts(10, 2)).ok());
    EXPECT_TRUE(verify_class("Y_Brenke", opts(0, 2)).ok());
    EXPECT_THROW(verify_decomposition("Wall_13", opts(10, 1)), ParameterOutOfRange);
    EXPECT_THROW(verify_pearson("Nope", opts(10, 1)), NotFound);
}

TEST(Verify, IdentitiesHoldOnRandomInstances) {
    const VerifyReport r = verify_identities(opts(10, 40));
    EXPECT_EQ(r.rows.size(), 7u);
    EXPECT_TRUE(r.ok());
}

TEST(Verify, KnownDefectsAreReportedAsFailures) {
    VerifyOptions o = opts(0, 1);
    const VerifyReport r = verify_discrete("U_11", o);
    bool defect_failed = false, theta_passed = false;
    for (const auto& row : r.rows) {
        if (row.note.find("known defect") != std::string::npos) defect_failed = !row.ok();
        else theta_passed = row.ok();
    }
    EXPECT_TRUE(defect_failed);
    EXPECT_TRUE(theta_passed);
    for (const auto& row : r.rows)
        for (const auto& f : row.failures) {
            EXPECT_EQ(f.family, "U_11");
            EXPECT_FALSE(f.expected.empty());
            EXPECT_FALSE(f.actual.empty());
        }
}

TEST(Verify, SoundIntegralRepresentationsPass) {
    const VerifyReport r = verify_integral("LittleQLaguerre_12", opts(0, 1));
    ASSERT_FALSE(r.rows.empty());
    EXPECT_TRUE(r.ok());
}

TEST(Verify, BudgetAbortsGracefully) {
    VerifyOptions o = opts(20, 0);
    o.budget_seconds = 1e-9;
    const VerifyReport r = verify_discrete("all", o);
    EXPECT_TRUE(r.aborted);
    EXPECT_FALSE(r.ok());
}

TEST(Csv, RoundTripsRationalTables) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 9), size(1, 6);
    for (int i = 0; i < 100; ++i) {
        Table t;
        const int cols = size(rng), rows = size(rng);
        for (int c = 0; c < cols; ++c) t.columns.push_back("c" + std::to_string(c));
        for (int r = 0; r < rows; ++r) {
            std::vector<std::string> row;
            for (int c = 0; c < cols; ++c) row.push_back(to_string(make_rational(num(rng), den(rng))));
            t.rows.push_back(row);
        }
        const Table back = parse_csv(emit_csv(t));
        ASSERT_EQ(back, t);
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            for (std::size_t c = 0; c < t.columns.size(); ++c)
                EXPECT_EQ(parse_rational(back.rows[r][c]), parse_rational(t.rows[r][c]));
    }
}

TEST(Csv, QuotedFieldsSurvive) {
    const Table t{{"a", "b"}, {{"x, y", "say \"hi\""}, {"line\nbreak", ""}}};
    EXPECT_EQ(parse_csv(emit_csv(t)), t);
    EXPECT_THROW(parse_csv("a,b\n\"open"), ParseError);
    EXPECT_THROW(parse_csv("a,b\n1\n"), ParseError);
}

TEST(Cli, RecurrenceExampleRows) {
    const CliResult r = cli({"recurrence", "H_mu_q", "--mu", "1/2", "--sqrtq", "2", "-n", "4", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Table t = parse_csv(r.out);
    const std::vector<std::vector<std::string>> rows{{"0", "0", "1"}, {"1", "0", "1"}, {"2", "0", "8"}, {"3", "0", "20"}};
    EXPECT_EQ(t.rows, rows);
}

TEST(Cli, ParameterSpellingsAgree) {
    const CliResult a = cli({"moments", "SV", "--a", "1/2", "--sqrtq", "2/3", "-n", "8", "--format", "csv"});
    const CliResult b = cli({"moments", "SV", "--param", "a=1/2", "--q", "4/9", "-n", "8", "--format", "csv"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ShowPrintsConstraintsWithAnchors) {
    const CliResult r = cli({"show", "SV"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("a != q^{-n-1}"), std::string::npos);
    EXPECT_NE(r.out.find("Proposition 4"), std::string::npos);
    const CliResult j = cli({"show", "SV", "--a", "1/2", "--sqrtq", "1/2", "--format", "json"});
    const auto doc = nlohmann::json::parse(j.out);
    for (const char* key : {"name", "params", "q", "constraints", "provenance"}) EXPECT_TRUE(doc.contains(key)) << key;
    EXPECT_EQ(doc["q"], "1/4");
    EXPECT_EQ(doc["class"], 1);
}

TEST(Cli, ListJsonHasTheCatalog) {
    const CliResult r = cli({"list", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out).size(), 22u);
}

TEST(Cli, PolynomialsRoundTripThroughText) {
    const CliResult r = cli({"polynomials", "B_nu_q", "--nu", "1/2", "--sqrtq", "2", "-n", "6", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Table t = parse_csv(r.out);
    const FamilySpec s = instantiate("B_nu_q", {{"nu", make_rational(1, 2)}}, 2);
    const auto mops = generate_mops(s.recurrence, 5);
    for (std::size_t n = 0; n < 6; ++n) EXPECT_EQ(parse_poly(t.rows[n][1]), mops.polynomials[n]);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"moments", "SV", "--sqrtq", "2"}).code, 2);
    const CliResult bad = cli({"moments", "SV", "--a", "4", "--sqrtq", "1/2"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("case A3"), std::string::npos);
    EXPECT_EQ(cli({"moments", "SV", "--a", "1", "--q", "2"}).code, 2);
    EXPECT_EQ(cli({"verify", "nonsense", "all"}).code, 2);
    EXPECT_EQ(cli({"--precision", "5", "list"}).code, 2);
}

TEST(Cli, VerifyExitCodesFollowViolations) {
    EXPECT_EQ(cli({"verify", "pearson", "all", "-n", "40", "--samples", "5"}).code, 0);
    const CliResult bad = cli({"verify", "discrete", "U_11", "--samples", "1", "--format", "csv"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("FAIL family=U_11 n="), std::string::npos);
    EXPECT_NE(bad.err.find("expected="), std::string::npos);
    const Table t = parse_csv(bad.out);
    EXPECT_EQ(t.columns.front(), "suite");
}

TEST(Cli, EnvironmentAndConfigFile) {
    ::setenv("QFORM_PRECISION", "5", 1);
    EXPECT_EQ(cli({"list"}).code, 2);
    ::setenv("QFORM_PRECISION", "40", 1);
    EXPECT_EQ(cli({"list"}).code, 0);
    ::unsetenv("QFORM_PRECISION");
    const std::string path = ::testing::TempDir() + "qform_test.ini";
    {
        std::ofstream f(path);
        f << "format = csv\nn = 3\n";
    }
    const CliResult r = cli({"--config", path, "recurrence", "H_mu_q", "--mu", "1/2", "--sqrtq", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_csv(r.out).rows.size(), 3u);
    std::remove(path.c_str());
}
