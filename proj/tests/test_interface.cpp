#include "pfhpd/cli.hpp"
#include "pfhpd/pfhpd.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace pfhpd;

namespace {

struct CorpusLine {
  bool must_fail = false;
  std::string space, expr, canonical, last;
};

std::vector<CorpusLine> load_corpus() {
  std::ifstream in(std::string(PFHPD_SAMPLES_DIR) + "/bundle_corpus.txt");
  std::vector<CorpusLine> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    CorpusLine c;
    if (line[0] == '!') {
      c.must_fail = true;
      line.erase(0, 1);
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, '\t')) f.push_back(part);
    c.space = f.at(0);
    c.expr = f.at(1);
    if (c.must_fail) {
      c.last = f.at(2);
    } else {
      c.canonical = f.at(2);
      c.last = f.at(3);
    }
    out.push_back(c);
  }
  return out;
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parser, CorpusRoundTrips) {
  const auto corpus = load_corpus();
  ASSERT_GT(corpus.size(), 20u);
  for (const auto& c : corpus) {
    SCOPED_TRACE(c.space + " " + c.expr);
    const Space space = parse_space(c.space);
    if (c.must_fail) {
      if (c.last == "elab") {
        EXPECT_THROW(parse_bundle(c.expr, space), ElaborationError);
      } else {
        try {
          parse_bundle_expr(c.expr);
          ADD_FAILURE() << "parsed";
        } catch (const ParseError& e) {
          EXPECT_EQ(e.offset(), std::stoul(c.last));
        }
      }
      continue;
    }
    const ExprPtr e = parse_bundle_expr(c.expr);
    const std::string formatted = format_bundle_expr(*e);
    EXPECT_EQ(formatted, c.canonical);
    EXPECT_TRUE(*parse_bundle_expr(formatted) == *e);
    EXPECT_EQ(parse_bundle(c.expr, space).object.signed_rank(), Integer(std::stoll(c.last)));
  }
}

TEST(Parser, ErrorMessageNamesExpectedTokens) {
  try {
    parse_bundle_expr("S^2(U");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_EQ(std::string(e.what()), "parse error at offset 6: expected ')', found end of input");
  }
}

TEST(Parser, ElaborationMatchesHandBuiltObjects) {
  const Space gr = Space::gr(2, 6);
  EXPECT_EQ(parse_bundle("E_2", gr).object, object_E(6, 2));
  EXPECT_EQ(parse_bundle("S^2(U)", gr).object, object_E(6, 2));
  EXPECT_EQ(parse_bundle("F_1", Space::ty(6)).object, object_F(6, 1));
  EXPECT_EQ(parse_bundle("F_0*(-2Y)", Space::ty(7)).object, object_F_dual(7, 0).twisted(0, -2));
  // Same bundle; the two descriptions differ only by the character det W.
  const EquivariantObject hg_hy = parse_bundle("O(1G - 1Y)", Space::ty(6)).object;
  EXPECT_EQ(hg_hy.times(VirtualRep::irreducible(DominantWeight::constant(6, -1))),
            object_O_hg_minus_hy(6));
  EXPECT_EQ(parse_bundle("U[1]", gr).object, object_E(6, 1).shifted(1));
  const Elaborated zero = parse_bundle("L^3(U)", gr);
  EXPECT_TRUE(zero.object.is_zero());
  EXPECT_EQ(zero.warnings.size(), 1u);
}

TEST(Parser, Spaces) {
  EXPECT_EQ(parse_space("gr(2,7)"), Space::gr(2, 7));
  EXPECT_EQ(parse_space(" ty( 7 ) "), Space::ty(7));
  EXPECT_THROW(parse_space("pf(7)"), std::invalid_argument);
}

TEST(Json, VirtualRepRoundTrip) {
  VirtualRep r(3);
  r.add(DominantWeight({2, 0, -1}), Integer("123456789012345678901234567890"));
  r.add(DominantWeight({0, 0, 0}), -3);
  const Json j = to_json(r);
  EXPECT_EQ(virtual_rep_from_json(Json::parse(j.dump())), r);
  EXPECT_EQ(j["terms"][0]["weight"][0], "0");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"bbw", "--rank", "3", "--weight", "1,0,0"}).code, 0);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"bbw", "--rank", "3"}).code, 2);
  EXPECT_EQ(run_cli({"bbw", "--rank", "3", "--weight", "1,0"}).code, 2);
  EXPECT_EQ(run_cli({"cohomology", "--space", "gr(2,6)", "S^2(U"}).code, 2);
  EXPECT_EQ(run_cli({"cohomology", "--space", "gr(2,6)", "F_0"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "ldx6"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "--suite", "fkl6", "--t-max", "12"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ParseErrorGoesToStderr) {
  const CliRun r = run_cli({"cohomology", "--space", "gr(2,6)", "S^2(U"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("offset 6"), std::string::npos);
}

TEST(Cli, JsonReportShape) {
  const CliRun r = run_cli({"--json", "ext", "--space", "gr(2,6)", "E_2", "E_0"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["inputs"]["space"], "gr(2,6)");
  EXPECT_EQ(j["result"]["exact"], true);
  EXPECT_EQ(j["result"]["degrees"]["0"]["terms"][0]["weight"],
            Json::array({"2", "0", "0", "0", "0", "0"}));
}

TEST(Cli, VerifyFailureIsReportedInJson) {
  const CliRun r = run_cli({"verify", "--suite", "fkl6", "--t-max", "12", "--json"});
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "failed");
  EXPECT_EQ(j["result"]["ok"], false);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"--json", "hpd-case", "--n", "7", "--r", "10"};
  const CliRun a = run_cli(args);
  const CliRun b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["result"]["discrepancy"], true);
}

TEST(Cli, OutFileReceivesTheReport) {
  const std::string path = testing::TempDir() + "pfhpd_out.json";
  const CliRun r = run_cli({"pfaffian", "--n", "6", "--t", "2", "--json", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["result"]["hypersurface_degree"], 3);
  EXPECT_EQ(j["command"], "pfaffian --n 6 --t 2 --json");
  std::remove(path.c_str());
}

TEST(Cli, TextCommands) {
  EXPECT_NE(run_cli({"bbw", "--rank", "2", "--weight", "0,1"}).out.find("acyclic"), std::string::npos);
  EXPECT_NE(run_cli({"hilbert", "--space", "gr(2,7)"}).out.find("degree 42"), std::string::npos);
  EXPECT_NE(run_cli({"hpd-case", "--n", "6", "--r", "6"}).out.find("K3 surface of degree 14"),
            std::string::npos);
  EXPECT_NE(run_cli({"geometry", "--n", "9"}).out.find("adjunction holds"), std::string::npos);
  EXPECT_NE(run_cli({"section", "--ambient", "Y", "--n", "6", "--r", "3"}).out.find("genus 1"),
            std::string::npos);
  EXPECT_EQ(run_cli({"section", "--ambient", "Q", "--n", "6", "--r", "3"}).code, 2);
  EXPECT_NE(run_cli({"lefschetz", "--model", "ldx6", "--dual"}).out.find("B_11 = <F_2^*>"),
            std::string::npos);
  EXPECT_NE(run_cli({"pushforward", "--n", "6", "--twist", "-6"}).out.find("at position 5"),
            std::string::npos);
}
