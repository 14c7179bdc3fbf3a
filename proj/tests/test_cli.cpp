#include "dplus/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace dplus;
using namespace dplus::cli;

namespace {

struct CmdResult {
    int rc;
    std::string out, err;
};

CmdResult compute(const std::string& poly, Format f = Format::text, bool show_mu = false, bool show_gist = false) {
    std::ostringstream out, err;
    ComputeOptions opt;
    opt.polynomial = poly;
    opt.format = f;
    opt.show_mu = show_mu;
    opt.show_gist = show_gist;
    int rc = cmd_compute(opt, out, err);
    return {rc, out.str(), err.str()};
}

CmdResult gist(unsigned n, unsigned m, std::optional<std::string> mu = std::nullopt, Format f = Format::text) {
    std::ostringstream out, err;
    GistOptions opt;
    opt.n = n;
    opt.m = m;
    opt.mu = std::move(mu);
    opt.format = f;
    int rc = cmd_gist(opt, out, err);
    return {rc, out.str(), err.str()};
}

CmdResult selftest(SelftestOptions opt) {
    std::ostringstream out, err;
    int rc = cmd_selftest(opt, out, err);
    return {rc, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string text_value(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + " = ", 0) == 0) return line.substr(key.size() + 3);
    return {};
}

}  // namespace

TEST(Compute, ExampleOneText) {
    CmdResult r = compute("x^3-5x^2+7x-3");
    EXPECT_EQ(r.rc, kOk);
    EXPECT_TRUE(contains(r.out, "D+ = -8\n"));
    EXPECT_TRUE(contains(r.out, "mu = (2,1)\n"));
    EXPECT_TRUE(contains(r.out, "denominator bound = 4\n"));
    EXPECT_TRUE(contains(r.out, "cluster cost term = 3\n"));
}

TEST(Compute, OracleCaseAndRationalOutput) {
    EXPECT_TRUE(contains(compute("1,-3,0,4").out, "D+ = 27\n"));
    EXPECT_TRUE(contains(compute("x^3 - 2/3*x^2 - 1/12*x + 1/12").out, "D+ = 125/216\n"));
}

TEST(Compute, ShowFlags) {
    CmdResult r = compute("1,-5,7,-3", Format::text, true, true);
    EXPECT_TRUE(contains(r.out, "factor (x - 1)^2"));
    EXPECT_TRUE(contains(r.out, "factor (x - 3)^1"));
    EXPECT_TRUE(contains(r.out, "H = 4*z1^3 - 18*z1*z2 + 54*z3\n"));
    EXPECT_TRUE(contains(r.out, "C_mu = -4\n"));
}

TEST(Compute, ErrorExits) {
    CmdResult zero = compute("0");
    EXPECT_EQ(zero.rc, kDomain);
    EXPECT_FALSE(zero.err.empty());
    EXPECT_EQ(compute("x^3 +* 2").rc, kUsage);
    EXPECT_EQ(compute("1,,2").rc, kUsage);
    EXPECT_EQ(compute("7").rc, kDomain);
    EXPECT_EQ(compute("x^9 - 1").rc, kDomain);
    EXPECT_EQ(compute("x^9 - x^8").rc, kDomain);
    EXPECT_TRUE(contains(compute("x^9").out, "D+ = 1\n"));  // one distinct root needs no gist
}

TEST(Compute, JsonRoundTripsByteForByte) {
    for (const char* poly : {"x^3-5x^2+7x-3", "1,0,-2,0,1", "3x^2-1/2", "x^4"}) {
        CmdResult r = compute(poly, Format::json, true, true);
        ASSERT_EQ(r.rc, kOk) << poly << r.err;
        Json j = Json::parse(r.out);
        EXPECT_EQ(j.dump(2) + "\n", r.out);
        EXPECT_EQ(j["command"], "compute");
    }
}

TEST(Compute, TextAndJsonAgree) {
    for (const char* poly : {"x^3-5x^2+7x-3", "1,-3,0,4", "x^3 - 2/3*x^2 - 1/12*x + 1/12", "2x^2+3x+1"}) {
        CmdResult t = compute(poly), js = compute(poly, Format::json);
        Json j = Json::parse(js.out);
        EXPECT_EQ(text_value(t.out, "D+"), j["dplus"].get<std::string>()) << poly;
        EXPECT_EQ(Rational::parse(j["dplus"].get<std::string>()),
                  Rational(Integer(j["dplus_numerator"].get<std::string>()),
                           Integer(j["dplus_denominator"].get<std::string>())));
        EXPECT_EQ(text_value(t.out, "log(1/|D+|)"), j["log_inverse"].get<std::string>()) << poly;
        EXPECT_EQ(text_value(t.out, "cluster cost term"), j["complexity_term"].get<std::string>()) << poly;
        std::string mu = "(";
        for (std::size_t i = 0; i < j["mu"].size(); ++i) mu += (i ? "," : "") + std::to_string(j["mu"][i].get<int>());
        EXPECT_EQ(text_value(t.out, "mu"), mu + ")");
    }
}

TEST(Gist, ExampleTwo) {
    CmdResult r = gist(3, 2);
    EXPECT_EQ(r.rc, kOk);
    EXPECT_EQ(r.out, "H = 4*z1^3 - 18*z1*z2 + 54*z3\n");
    CmdResult with_mu = gist(3, 2, "2,1");
    EXPECT_EQ(with_mu.out, "H = 4*z1^3 - 18*z1*z2 + 54*z3\nC_mu = -4\n");
    Json j = Json::parse(gist(3, 2, "(2,1)", Format::json).out);
    EXPECT_EQ(j["C_mu"], "-4");
    EXPECT_EQ(j["H"], "4*z1^3 - 18*z1*z2 + 54*z3");
}

TEST(Gist, Errors) {
    CmdResult cap = gist(9, 2);
    EXPECT_EQ(cap.rc, kDomain);
    EXPECT_TRUE(contains(cap.err, "scale cap"));
    EXPECT_EQ(gist(3, 1).rc, kDomain);
    EXPECT_EQ(gist(3, 2, "1,1,1").rc, kDomain);
    EXPECT_EQ(gist(3, 2, "1,2").rc, kDomain);
    EXPECT_EQ(gist(3, 2, "2,x").rc, kUsage);
}

TEST(PoissonCheck, Passes) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_poisson_check(2, 2, Format::text, out, err), kOk);
    EXPECT_FALSE(contains(out.str(), "FAILS"));
    std::ostringstream big, err2;
    EXPECT_EQ(cmd_poisson_check(5, 5, Format::text, big, err2), kDomain);
}

TEST(Bound, PolynomialAndCeilingOnly) {
    std::ostringstream out, err;
    BoundOptions opt;
    opt.polynomial = "x^3-5x^2+7x-3";
    EXPECT_EQ(cmd_bound(opt, out, err), kOk);
    EXPECT_TRUE(contains(out.str(), "2n(ln n + L ln 2) = 10.75055681536833"));
    EXPECT_TRUE(contains(out.str(), "within bound: yes"));

    std::ostringstream out2, err2;
    BoundOptions ceiling;
    ceiling.n = 4;
    ceiling.L = 2;
    ceiling.format = Format::json;
    EXPECT_EQ(cmd_bound(ceiling, out2, err2), kOk);
    EXPECT_TRUE(contains(Json::parse(out2.str())["corollary_bound"].get<std::string>(), "22.180709777918"));

    std::ostringstream out3, err3;
    EXPECT_EQ(cmd_bound(BoundOptions{}, out3, err3), kUsage);
}

TEST(PartitionMax, Text) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_partition_max(5, 2, Format::text, out, err), kOk);
    EXPECT_TRUE(contains(out.str(), "F_{5,2} = 256 at (4,1)"));
    std::ostringstream out2, err2;
    EXPECT_EQ(cmd_partition_max(31, 2, Format::text, out2, err2), kDomain);
}

TEST(Selftest, CleanRunPasses) {
    CmdResult r = selftest({});
    EXPECT_EQ(r.rc, kOk);
    EXPECT_TRUE(contains(r.out, "9 checks passed"));
}

TEST(Selftest, ExtendedRecordsSeed) {
    SelftestOptions opt;
    opt.extended = true;
    opt.seed = 7;
    CmdResult r = selftest(opt);
    EXPECT_EQ(r.rc, kOk);
    EXPECT_TRUE(contains(r.out, "seed 7"));
    EXPECT_TRUE(contains(r.out, "ok   random_oracle"));
}

TEST(Selftest, FaultInjectionNamesCheck) {
    SelftestOptions opt;
    opt.inject_fault = "c_mu";
    CmdResult r = selftest(opt);
    EXPECT_EQ(r.rc, kInternal);
    EXPECT_TRUE(contains(r.out, "FAIL c_mu: expected -4, got 4"));
    opt.inject_fault = "no_such_check";
    EXPECT_EQ(selftest(opt).rc, kUsage);
}
