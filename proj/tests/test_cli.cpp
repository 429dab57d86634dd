#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ringlab/cli.hpp"
#include "ringlab/ringspec.hpp"

using namespace ringlab;
using namespace ringlab::cli;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run ringlab_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "ringlab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string temp_file(const std::string& name, const std::string& body)
{
    auto path = testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST(Describe, Z4)
{
    auto r = ringlab_run({"describe", "Z4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "order: 4"));
    EXPECT_TRUE(has(r.out, "idempotents: {0, 1}"));
    EXPECT_TRUE(has(r.out, "units: {1, 3}"));
    EXPECT_TRUE(has(r.out, "J(R): {0, 2}"));
    EXPECT_TRUE(has(r.out, "local: yes"));
}

TEST(Describe, ZeroRingAndMatrices)
{
    auto z1 = ringlab_run({"describe", "Z1"});
    EXPECT_EQ(z1.code, 0);
    EXPECT_TRUE(has(z1.out, "R = 0: most theorems not applicable"));
    auto m = ringlab_run({"--json", "describe", "M2(Z2)"});
    EXPECT_EQ(m.code, 0);
    auto j = Json::parse(m.out);
    EXPECT_EQ(j["results"]["order"], 16);
    EXPECT_EQ(j["results"]["flags"]["regular"], true);
}

TEST(Classify, Z4Two)
{
    auto r = ringlab_run({"--json", "classify", "Z4", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out)["results"];
    EXPECT_EQ(j["regular"], false);
    EXPECT_EQ(j["r_clean"], true);
    EXPECT_EQ(j["clean"], true);
    auto text = ringlab_run({"classify", "Z4", "2"}).out;
    EXPECT_TRUE(has(text, "r-clean: yes  r = 1, e = 1, y = 1"));
    EXPECT_TRUE(has(text, "clean: yes  u = 1, e = 1"));
    EXPECT_TRUE(has(text, "regular: no"));
}

TEST(Classify, ZeroAndIdempotent)
{
    auto zero = ringlab_run({"classify", "Z4", "0"}).out;
    EXPECT_TRUE(has(zero, "unit: no"));
    EXPECT_TRUE(has(zero, "nilpotent: yes  index 1"));
    auto three = ringlab_run({"classify", "Z6", "3"}).out;
    EXPECT_TRUE(has(three, "idempotent: yes"));
    EXPECT_TRUE(has(three, "regular: yes"));
    auto bad = ringlab_run({"classify", "Z4", "7"});
    EXPECT_EQ(bad.code, 2);
}

TEST(Verify, ExitCodes)
{
    EXPECT_EQ(ringlab_run({"verify", "Z4", "one-minus-x"}).code, 0);
    auto na = ringlab_run({"verify", "Z6", "clean-from-rclean"});
    EXPECT_EQ(na.code, 0);
    EXPECT_TRUE(has(na.out, "verdict: not-applicable"));
    EXPECT_TRUE(has(ringlab_run({"verify", "Z9", "sqrt-characterization"}).out, "verdict: verified"));
    auto unknown = ringlab_run({"verify", "Z4", "fermat"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_TRUE(has(unknown.err, "one-minus-x"));
    EXPECT_TRUE(has(unknown.err, "semiperfect-group-ring"));
    EXPECT_EQ(ringlab_run({"verify", "M3(Z4)", "one-minus-x"}).code, 2);
    EXPECT_EQ(ringlab_run({"--size-cap", "8", "verify", "Z9", "one-minus-x"}).code, 2);
}

TEST(Verify, TextAndJsonAgree)
{
    for (auto th : {"factor", "pierce", "clean-from-rclean", "group-ring-c2", "poly-lemma"}) {
        auto text = ringlab_run({"verify", "Z6", th});
        auto json = ringlab_run({"--json", "verify", "Z6", th});
        auto report = report_from_json(Json::parse(json.out)["results"]);
        EXPECT_TRUE(has(text.out, "verdict: " + std::string(to_string(report.verdict)))) << th;
        EXPECT_EQ(text.code, json.code);
    }
}

TEST(Errors, ParseCaret)
{
    auto r = ringlab_run({"describe", "M2(Z2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(has(r.err, "  M2(Z2\n       ^")) << r.err;
    auto corner = ringlab_run({"describe", "corner(Z6,2)"});
    EXPECT_EQ(corner.code, 2);
    EXPECT_TRUE(has(corner.err, "corner(Z6,2)"));
}

TEST(Errors, Usage)
{
    EXPECT_EQ(ringlab_run({}).code, 2);
    EXPECT_EQ(ringlab_run({"frobnicate"}).code, 2);
    EXPECT_EQ(ringlab_run({"--help"}).code, 0);
    EXPECT_EQ(ringlab_run({"--orthogonal-interpretation", "sideways", "verify", "Z4", "one-minus-x"}).code, 2);
    EXPECT_EQ(ringlab_run({"search", "Z4", "--regular=maybe"}).code, 2);
}

TEST(Radical, Z8)
{
    auto r = ringlab_run({"radical", "Z8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "{0, 2, 4, 6}"));
}

TEST(Search, Examples)
{
    auto r = ringlab_run({"--json", "search", "Z4", "--regular=false"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out)["results"];
    ASSERT_EQ(j["rings"].size(), 1u);
    EXPECT_EQ(j["rings"][0]["matches"], Json::parse(R"([{"index":2,"label":"2"}])"));
    auto sep = ringlab_run({"search", "M2(Z2)", "--r-clean=true", "--clean=false"});
    EXPECT_TRUE(has(sep.out, "0 matches"));
    EXPECT_TRUE(has(sep.out, "semiperfect if and only if it is clean"));
    auto none = ringlab_run({"search", "Z4", "--unit=true", "--nilpotent=true"});
    EXPECT_EQ(none.code, 0);
    EXPECT_TRUE(has(none.out, "0 matches"));
}

TEST(Config, Parsing)
{
    auto c = parse_config("# corpus\nring = Z4\nring = M2(Z2)  # matrices\ntheorem = factor\ndeg-f = 1\n"
                          "deg-g = 3\nsize-cap = 500\nparallel = 2\northogonal-interpretation = all-pairs\n");
    EXPECT_EQ(c.rings, (std::vector<std::string>{"Z4", "M2(Z2)"}));
    EXPECT_EQ(c.theorems, (std::vector<TheoremId>{TheoremId::Factor}));
    EXPECT_EQ(c.options.deg_f, 1);
    EXPECT_EQ(c.options.deg_g, 3);
    EXPECT_EQ(c.options.size_cap, 500u);
    EXPECT_EQ(c.parallel, 2u);
    EXPECT_EQ(c.options.orthogonal, OrthogonalReading::AllPairs);
    EXPECT_TRUE(parse_config("").rings.empty());
    EXPECT_THROW(parse_config("colour = blue\n"), ConfigError);
    EXPECT_THROW(parse_config("ring = Z(\n"), ConfigError);
    EXPECT_THROW(parse_config("theorem = fermat\n"), ConfigError);
    EXPECT_THROW(parse_config("deg-f = -1\n"), ConfigError);
    EXPECT_THROW(parse_config("size-cap = 0\n"), ConfigError);
    EXPECT_THROW(parse_config("just words\n"), ConfigError);
}

TEST(Config, DefaultCorpusParses)
{
    auto rings = default_corpus_rings();
    EXPECT_EQ(rings.size(), 26u);
    for (const auto& s : rings)
        EXPECT_NO_THROW(parse_ring(s)) << s;
}

TEST(Suite, EmptyCorpus)
{
    auto path = temp_file("empty.corpus", "# nothing\n");
    auto r = ringlab_run({"suite", "--corpus", path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has(r.out, "summary: 0 verified, 0 not applicable, 0 counterexamples, 0 skipped"));
}

TEST(Suite, OversizedRingIsSkipped)
{
    auto path = temp_file("big.corpus", "ring = Z4\nring = M3(Z4)\ntheorem = one-minus-x\ntheorem = factor\n");
    auto r = ringlab_run({"--json", "suite", "--corpus", path});
    EXPECT_EQ(r.code, 0) << r.err;
    auto s = suite_from_json(Json::parse(r.out)["results"]);
    EXPECT_EQ(s.count(Verdict::Skipped), 2u);
    EXPECT_EQ(s.count(Verdict::Verified), 2u);
    ASSERT_EQ(s.rings.size(), 2u);
    EXPECT_TRUE(s.rings[0].error.has_value());
    EXPECT_EQ(s.rings[0].ring, "M3(Z4)");
}

TEST(Suite, ParallelismDoesNotChangeOutput)
{
    auto path = temp_file("small.corpus", "ring = Z6\nring = Z4\nring = T2(Z2)\nring = Z3[C2]\n");
    auto one = ringlab_run({"--json", "--parallel", "1", "suite", "--corpus", path});
    auto four = ringlab_run({"--json", "--parallel", "4", "suite", "--corpus", path});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
}

TEST(Json, ReportRoundTrip)
{
    auto ring = elaborate("Z6");
    for (auto id : all_theorems()) {
        auto rep = run_theorem(id, ring);
        EXPECT_EQ(report_from_json(Json::parse(to_json(rep).dump())), rep) << theorem_name(id);
    }
    VerifyReport odd;
    odd.theorem = "t";
    odd.verdict = Verdict::Counterexample;
    odd.counterexample = "x = 3";
    odd.hypotheses.push_back({"h", CheckStatus::NotApplicable, "d"});
    EXPECT_EQ(report_from_json(to_json(odd)), odd);
}

TEST(Json, SuiteRoundTripAndEnvelope)
{
    CorpusConfig c;
    c.rings = {"Z2", "Z1", "M3(Z4)"};
    c.theorems = {TheoremId::OneMinusX, TheoremId::LocalCorollary};
    c.parallel = 2;
    auto s = run_suite(c);
    auto back = suite_from_json(Json::parse(to_json(s).dump()));
    EXPECT_EQ(back.rings, s.rings);
    EXPECT_EQ(back.reports, s.reports);
    auto doc = document("suite", "", to_json(s));
    EXPECT_EQ(doc["schema_version"], 1);
    EXPECT_EQ(doc["tool_version"], "0.1.0");
    EXPECT_FALSE(doc.contains("timing_ms"));
}
