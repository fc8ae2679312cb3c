#include <gtest/gtest.h>

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "dlct/analysis.hpp"
#include "dlct/catalog.hpp"
#include "dlct/error.hpp"

namespace dlct::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "dlct");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = kExitOk) {
  const Outcome r = run(std::move(args));
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("dlct_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

std::vector<Value> spectrum_values(const Json& spectrum) {
  std::vector<Value> out;
  for (const auto& e : spectrum) out.push_back(e["value"].get<Value>());
  return out;
}

TEST(Parse, Integers) {
  EXPECT_EQ(parse_integer("42"), 42u);
  EXPECT_EQ(parse_integer("0x1b"), 27u);
  EXPECT_EQ(parse_integer(" 7 "), 7u);
  EXPECT_THROW(parse_integer("x3"), UsageError);
  EXPECT_THROW(parse_integer(""), UsageError);
  EXPECT_THROW(parse_integer("12a"), UsageError);
}

TEST(Parse, LutWithoutHeader) {
  const Vbf f = parse_lut_text("0, 1, 2, 0xd 4 7 15 6\n8 11 12 9 3 14 10 5\n");
  EXPECT_EQ(f.n(), 4u);
  EXPECT_EQ(f.m(), 4u);
  EXPECT_EQ(f, optimal_sbox(0));
}

TEST(Parse, LutWithHeader) {
  const Vbf f = parse_lut_text("n=3 m=1\n0 1 1 0 1 0 0 1");
  EXPECT_EQ(f.n(), 3u);
  EXPECT_EQ(f.m(), 1u);
  EXPECT_EQ(f(7), 1u);
}

TEST(Parse, LutErrors) {
  EXPECT_THROW(parse_lut_text("0 1 2"), UsageError);
  EXPECT_THROW(parse_lut_text(""), UsageError);
  EXPECT_THROW(parse_lut_text("q=3 0 1"), UsageError);
  EXPECT_THROW(parse_lut_text("0 1 2 4"), Error);
}

TEST(Parse, Polynomials) {
  EXPECT_EQ(parse_poly("1*x^3"), (std::vector<Term>{{1, 3}}));
  EXPECT_EQ(parse_poly("0x2*x^5 + x^3 + x + 1"), (std::vector<Term>{{2, 5}, {1, 3}, {1, 1}, {1, 0}}));
  EXPECT_EQ(parse_poly(" 0x3 "), (std::vector<Term>{{3, 0}}));
  EXPECT_THROW(parse_poly("1*x^"), UsageError);
  EXPECT_THROW(parse_poly("1*y^3"), UsageError);
  EXPECT_THROW(parse_poly("x^3 +"), UsageError);
}

TEST(Source, ExactlyOne) {
  FunctionSpec none;
  EXPECT_THROW(load_function(none), UsageError);
  FunctionSpec two;
  two.poly = "x^3";
  two.catalog = "inverse";
  two.n = 4;
  EXPECT_THROW(load_function(two), UsageError);
  FunctionSpec unknown;
  unknown.catalog = "nope";
  EXPECT_THROW(load_function(unknown), UsageError);
}

TEST(Table, InverseOverGf16) {
  const Json j = run_json({"table", "--kind", "dlct", "--catalog", "inverse", "--n", "4"});
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["kind"], "dlct");
  EXPECT_EQ(j["modulus"], 0x13);
  ASSERT_EQ(j["rows"].size(), 16u);
  Value best = 0;
  for (std::size_t u = 1; u < 16; ++u) {
    ASSERT_EQ(j["rows"][u].size(), 16u);
    for (std::size_t v = 1; v < 16; ++v) best = std::max(best, std::abs(j["rows"][u][v].get<Value>()));
  }
  EXPECT_EQ(best, 4);
}

TEST(Table, JsonRoundTrip) {
  const Json j = run_json({"table", "--kind", "ac", "--poly", "1*x^3 + 0x5*x^6", "--n", "5"});
  const SpectralTable back = table_from_json(j);
  const std::array<Term, 2> terms = {Term{1, 3}, Term{5, 6}};
  EXPECT_EQ(back, autocorrelation_table(Vbf::from_univariate(FieldCtx(5), terms)));
  EXPECT_EQ(table_to_json(back, 0x25), j);
}

TEST(Table, IdentityDdtFromFile) {
  const std::string path = temp_file("id4.txt", "0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15\n");
  const Json j = run_json({"table", "--kind", "ddt", "--lut-file", path});
  EXPECT_TRUE(j["modulus"].is_null());
  for (std::size_t u = 0; u < 16; ++u) {
    for (std::size_t w = 0; w < 16; ++w) EXPECT_EQ(j["rows"][u][w], u == w ? 16 : 0);
  }
}

TEST(Table, CsvHeaderAndSize) {
  const Outcome r = run({"table", "--kind", "walsh", "--catalog", "gold", "--n", "3", "--i", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "u,v,value");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 64u);
}

TEST(Table, CapErrors) {
  EXPECT_EQ(run({"table", "--kind", "dlct", "--poly", "1*x^3", "--n", "20"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--kind", "dlct", "--poly", "1*x^3", "--n", "14"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--kind", "bct", "--catalog", "inverse", "--n", "4"}).code, kExitUsage);
}

TEST(Table, ThreadCountDoesNotChangeOutput) {
  const Outcome one = run({"table", "--kind", "dlct", "--catalog", "inverse", "--n", "8"});
  const Outcome four = run({"table", "--kind", "dlct", "--catalog", "inverse", "--n", "8", "--threads", "4"});
  EXPECT_EQ(one.out, four.out);
}

TEST(Analyze, OptimalSboxFive) {
  const Json j = run_json({"analyze", "--catalog", "table1", "--index", "5"});
  EXPECT_EQ(j["dlu"], 4);
  EXPECT_EQ(j["diff_uniformity"], 4);
  EXPECT_EQ(j["flags"]["is_permutation"], true);
}

TEST(Analyze, CczExampleMonomial) {
  const Json j = run_json({"analyze", "--poly", "1*x^13", "--n", "6"});
  EXPECT_EQ(j["dlu"], 16);
  EXPECT_EQ(spectrum_values(j["dlct_spectrum"]), (std::vector<Value>{-16, -8, 0, 8, 16}));
  std::uint64_t total = 0;
  for (const auto& e : j["dlct_spectrum"]) total += e["multiplicity"].get<std::uint64_t>();
  EXPECT_EQ(total, 63u * 63u);
}

TEST(Analyze, ConstantFunction) {
  std::string zeros;
  for (int x = 0; x < 32; ++x) zeros += "0 ";
  const std::string path = temp_file("const0.txt", zeros);
  const Json j = run_json({"analyze", "--lut-file", path});
  EXPECT_EQ(j["dlu"], 16);
  EXPECT_EQ(j["flags"]["is_permutation"], false);
}

TEST(Analyze, PrettyAndCsv) {
  const Outcome pretty = run({"analyze", "--catalog", "inverse", "--n", "4", "--format", "pretty"});
  EXPECT_EQ(pretty.code, 0);
  EXPECT_NE(pretty.out.find("DLU"), std::string::npos);
  const Outcome csv = run({"analyze", "--catalog", "inverse", "--n", "4", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("value,multiplicity\n", 0), 0u);
}

TEST(Verify, IdentitiesOnCube) {
  const Json j = run_json({"verify", "--check", "identities", "--poly", "1*x^3", "--n", "6"});
  EXPECT_EQ(j["pass"], true);
  EXPECT_GE(j["results"].size(), 7u);
}

TEST(Verify, EaInvarianceOfInverse) {
  const Json j =
      run_json({"verify", "--check", "ea-invariance", "--catalog", "inverse", "--n", "7", "--seed", "7", "--trials", "20"});
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["results"].size(), 20u);
}

TEST(Verify, KloostermanModEight) {
  const Json j = run_json({"verify", "--check", "kloosterman-mod8", "--n", "9"});
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["results"].size(), 512u);
}

TEST(Verify, OtherChecks) {
  for (const char* check : {"bounds", "affine-invariance", "apn-dual", "plateaued-dual", "cross-path"}) {
    const Json j = run_json({"verify", "--check", check, "--poly", "1*x^3", "--n", "5", "--trials", "3"});
    EXPECT_EQ(j["pass"], true) << check;
  }
}

TEST(Verify, FailureAndUsageCodes) {
  EXPECT_EQ(run({"verify", "--check", "nonsense", "--catalog", "inverse", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--check", "apn-dual", "--catalog", "inverse", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--catalog", "inverse", "--n", "4"}).code, kExitUsage);
}

TEST(Verify, PrettyMarksFailures) {
  std::ostringstream out;
  write_checks(out, "demo", {{"demo", "a", true, 1, 1}, {"demo", "b", false, 2, 3}}, Format::Pretty);
  EXPECT_NE(out.str().find("FAIL demo [b] lhs=2 rhs=3"), std::string::npos);
  EXPECT_NE(out.str().find("FAILURES (2 checks)"), std::string::npos);
}

TEST(Reproduce, Table2) {
  const Json j = run_json({"reproduce", "table2"});
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["items"].size(), 16u);
}

TEST(Reproduce, CczExample) {
  const Json j = run_json({"reproduce", "example-ccz"});
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["items"][0]["computed"]["dlu"], 16);
  EXPECT_EQ(j["items"][1]["computed"]["dlu"], 32);
}

TEST(Reproduce, KasamiAtFive) {
  const Json j = run_json({"reproduce", "kasami", "--n", "5"});
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["items"][0]["computed"]["values"], (std::vector<Value>{-4, 0, 4}));
}

TEST(Reproduce, OtherTargets) {
  for (const char* target : {"example-ea", "gold", "bracken-leander"}) {
    EXPECT_EQ(run_json({"reproduce", target})["pass"], true) << target;
  }
  EXPECT_EQ(run_json({"reproduce", "inverse-theorem", "--n", "8"})["pass"], true);
  EXPECT_EQ(run_json({"reproduce", "quadratic", "--n", "5", "--trials", "5"})["pass"], true);
  EXPECT_EQ(run({"reproduce", "table3"}).code, kExitUsage);
}

TEST(Search, KasamiAmongMonomialHits) {
  const Json j = run_json({"search", "--n", "5", "--mode", "monomial", "--max-dlu", "4"});
  EXPECT_EQ(j["complete"], true);
  bool found = false;
  for (const auto& h : j["hits"]) {
    EXPECT_LE(h["dlu"].get<Value>(), 4);
    found = found || h["exponent"] == 13;
  }
  EXPECT_TRUE(found);
}

TEST(Search, NoMonomialBelowEightAtSix) {
  const Json strict = run_json({"search", "--n", "6", "--mode", "monomial", "--max-dlu", "6"});
  EXPECT_TRUE(strict["hits"].empty());
  const Json loose = run_json({"search", "--n", "6", "--mode", "monomial", "--max-dlu", "8"});
  EXPECT_FALSE(loose["hits"].empty());
  for (const auto& h : loose["hits"]) EXPECT_EQ(h["dlu"], 8);
}

TEST(Search, RandomHitsReverify) {
  const std::vector<std::string> args = {"search", "--n",       "4", "--mode", "random", "--budget",
                                         "10000",  "--max-dlu", "4", "--seed", "1"};
  const Json j = run_json(args);
  EXPECT_EQ(j["examined"], 10000);
  ASSERT_FALSE(j["hits"].empty());
  for (const auto& h : j["hits"]) {
    const Vbf f = Vbf::from_lut(4, 4, h["lut"].get<std::vector<Word>>());
    EXPECT_EQ(analyze(f).dlu, h["dlu"].get<Value>());
    EXPECT_LE(h["dlu"].get<Value>(), 4);
  }
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Search, BudgetStopsCleanly) {
  const Json j = run_json({"search", "--n", "7", "--mode", "monomial", "--max-dlu", "8", "--budget", "10"});
  EXPECT_EQ(j["examined"], 10);
  EXPECT_EQ(j["complete"], false);
  EXPECT_LT(j["coverage"].get<double>(), 1.0);
}

TEST(Cli, HelpAndBadFlags) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--catalog", "inverse", "--n", "4", "--format", "xml"}).code, kExitUsage);
}

TEST(Cli, OutputFile) {
  const auto path = (std::filesystem::temp_directory_path() / "dlct_cli_test_out.json").string();
  const Outcome r = run({"analyze", "--catalog", "inverse", "--n", "5", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in)["dlu"], 4);
}

}  // namespace
}  // namespace dlct::cli
