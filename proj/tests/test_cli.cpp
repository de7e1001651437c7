#include "hs/json_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace hs;

namespace {

struct CliRun {
    int code;
    std::string out;
};

// Stdout of the hs binary with stderr discarded.
CliRun run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + HS_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(Cli, InvertUnitSeries) {
    CliRun r = run(R"(invert --series '{"shape":{"kind":"tm","p":1,"m":2},"coeffs":"1+s"}' --ring Q)");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    auto A = ring_from_arg("Q");
    ElemSeries inv = series_from_json(A, j["series"]);
    EXPECT_EQ(inv[MultiIndex{0}], Elem::constant(A, 1));
    EXPECT_EQ(inv[MultiIndex{1}], Elem::constant(A, -1));
    EXPECT_EQ(inv[MultiIndex{2}], Elem::constant(A, 1));
}

TEST(Cli, NonUnitIsDomainError) {
    EXPECT_EQ(run(R"(invert --series '{"shape":{"kind":"tm","p":1,"m":2},"coeffs":"2+s"}' --ring Z)").code, 1);
}

TEST(Cli, NotIntegrableIsSuccess) {
    CliRun r = run(R"(integrate --ring '{"base":{"kind":"Fp","p":2},"vars":["x"],"relations":["x^2"]}' --derivation '{"x":"1"}' --to 2)");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["status"], "NotIntegrable");
    EXPECT_EQ(j["stage"], 2);
    EXPECT_FALSE(j["certificate"]["combination"].empty());
}

TEST(Cli, HasseDerivativeIntegral) {
    CliRun r = run(R"(integrate --ring 'F2[x]' --derivation '{"x":"1"}' --to 4)");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    ASSERT_EQ(j["status"], "Integrable");
    HSDerivation d = hs_from_json(j["integral"]);
    EXPECT_EQ(d.apply(Elem::parse(d.algebra(), "x^3"))[MultiIndex{2}], Elem::parse(d.algebra(), "x"));
}

TEST(Cli, CheckSuiteExitCodes) {
    CliRun r = run("check --suite group-laws --cases 100");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["passed"], 100);
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(run("check --suite no-such-suite").code, 1);
}

TEST(Cli, ParseErrorsExitTwo) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("invert --series '{\"shape\":{\"kind\":\"tm\"' --ring Q").code, 2);
    EXPECT_EQ(run(R"(invert --series '{"shape":{"kind":"tm","p":1,"m":2},"coeffs":"1+s","bad":1}' --ring Q)").code, 2);
    EXPECT_EQ(run("gamma-table --rank 0").code, 2);
    EXPECT_EQ(run("order --op 'd[1]' --ring Q[x]", "HS_DEGREE_CAP=abc").code, 2);
}

TEST(Cli, OutputRoundTripsAndIsDeterministic) {
    std::string hs = R"('{"algebra":{"base":{"kind":"Q"},"vars":["x"],"relations":[]},"shape":{"kind":"tm","p":1,"m":3},"phi":{"x":"x + x^2*s + s^2"}}')";
    CliRun a = run("invert --hs " + hs), b = run("invert --hs " + hs);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    Json j = Json::parse(a.out);
    EXPECT_EQ(hs_to_json(hs_from_json(j["hs"])).dump(), j["hs"].dump());

    CliRun comp = run("compose --first " + hs + " --second '" + j["hs"].dump() + "'");
    ASSERT_EQ(comp.code, 0);
    HSDerivation id = hs_from_json(Json::parse(comp.out)["hs"]);
    EXPECT_EQ(id, HSDerivation::identity(id.algebra(), id.shape()));
}

TEST(Cli, GammaTableCsv) {
    CliRun r = run("gamma-table --rank 1 --base Z --max-degree 8 --format csv");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("2,3,5,10"), std::string::npos);
    long lines = std::count(r.out.begin(), r.out.end(), '\n');
    EXPECT_EQ(lines, 1 + 28);
}

TEST(Cli, VersionAndPretty) {
    CliRun v = run("--version");
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("hs "), std::string::npos);
    CliRun p = run("--output pretty order --op 'x*d[2]' --ring 'Q[x]'");
    ASSERT_EQ(p.code, 0);
    EXPECT_EQ(Json::parse(p.out)["order"], 2);
    EXPECT_NE(p.out.find("\n  "), std::string::npos);
}
