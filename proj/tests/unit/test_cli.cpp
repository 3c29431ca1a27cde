#include "cli.hpp"

#include "nctorus/invariant.hpp"
#include "nctorus/weyl.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

using namespace nctorus;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, InvariantExamples) {
  const Result fib = run({"invariant", "1,1;1,0", "--json"});
  EXPECT_EQ(fib.code, 0);
  EXPECT_EQ(fib.out, "{\"D\":5,\"m\":10,\"basis\":[[5,1],[0,2]]}\n");
  const Result cat = run({"--json", "invariant", "3,1;2,1"});
  EXPECT_EQ(cat.out, "{\"D\":3,\"m\":6,\"basis\":[[3,0],[0,1]]}\n");
  const Result text = run({"invariant", "1,1;1,0"});
  EXPECT_TRUE(contains(text.out, "Z\xC2\xB7(5+\xE2\x88\x9A" "5)/10"));
  const Result ascii = run({"invariant", "1,1;1,0", "--ascii"});
  EXPECT_TRUE(contains(ascii.out, "(5+sqrt(5))/10"));
}

TEST(Cli, CompareVerdicts) {
  const Result ne = run({"compare", "1,1;1,0", "3,1;2,1"});
  EXPECT_EQ(ne.code, 0);
  EXPECT_TRUE(contains(ne.out, "NOT equal"));
  EXPECT_TRUE(contains(ne.out, "non-isomorphic"));
  EXPECT_TRUE(contains(ne.out, "not flip conjugate"));
  const Result eq = run({"compare", "1,1;1,0", "2,1;1,1"});
  EXPECT_TRUE(contains(eq.out, "inconclusive"));
  EXPECT_FALSE(contains(eq.out, "NOT equal"));
  const auto j = json_of(run({"compare", "1,1;1,0", "3,1;2,1", "--json"}));
  EXPECT_FALSE(j["equal"].get<bool>());
  EXPECT_EQ(invariant_from_json(j["A"].dump()), trace_range(Mat2Z{1, 1, 1, 0}));
  EXPECT_EQ(invariant_from_json(j["B"].dump()), trace_range(Mat2Z{3, 1, 2, 1}));
}

TEST(Cli, CompareBatchFromStdin) {
  const Result r = run({"compare", "--stdin", "--json"}, "1,1;1,0\n# comment\n\n3,1;2,1\n2,1;1,1\n-2,1;1,-1\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["classes"], 2);
  ASSERT_EQ(j["matrices"].size(), 4u);
  EXPECT_EQ(j["matrices"][0]["class"], 0);
  EXPECT_EQ(j["matrices"][1]["class"], 1);
  EXPECT_EQ(j["matrices"][2]["class"], 0);
  EXPECT_EQ(j["matrices"][3]["class"], 0);
  EXPECT_EQ(run({"compare", "--stdin"}, "1,1;1,0\n0,1;1,0\n").code, 1);
  EXPECT_EQ(run({"compare", "--stdin"}, "1,1;1\n").code, 2);
  EXPECT_EQ(run({"compare", "--stdin", "1,1;1,0"}).code, 2);
}

TEST(Cli, ThetaOutput) {
  const Result r = run({"theta", "1,1;1,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "(5+1\xE2\x88\x9A" "5)/10"));
  EXPECT_TRUE(contains(r.out, "(5-1\xE2\x88\x9A" "5)/10"));
  const auto j = json_of(run({"theta", "3,1;2,1", "--json"}));
  EXPECT_EQ(j["theta"][0], "(3+1\xE2\x88\x9A" "3)/6");
  EXPECT_EQ(j["identities"]["sum_is"], "lambda_u");
  EXPECT_EQ(j["identities"]["sum"], "(2+1\xE2\x88\x9A" "3)");
  const auto neg = json_of(run({"theta", "-2,1;1,-1", "--json"}));
  EXPECT_EQ(neg["route_relation"], "variant");
  EXPECT_EQ(neg["closed_form_identities"]["sum_is"], "lambda_s");
}

TEST(Cli, ThetaJsonRoundTrip) {
  for (const char* text : {"1,1;1,0", "3,1;2,1", "-2,1;1,-1", "5,3;3,2", "1,-3;2,-7"}) {
    const Mat2Z a = parse_matrix(text);
    const HypMatrix h = HypMatrix::certify(a);
    for (const char* glyph : {"--json", "--ascii"}) {
      std::vector<std::string> args{"theta", text, "--json"};
      if (std::string(glyph) == "--ascii") args.push_back("--ascii");
      const auto j = json_of(run(args));
      ThetaVector eig, closed;
      for (int i = 0; i < 4; ++i) {
        eig.values[i] = parse_quadnum(j["theta"][i].get<std::string>());
        closed.values[i] = parse_quadnum(j["closed_form"][i].get<std::string>());
      }
      EXPECT_EQ(eig, theta_from_eigenvectors(h)) << text;
      EXPECT_EQ(closed, theta_closed_form(h)) << text;
      EXPECT_EQ(parse_quadnum(j["lambda_u"].get<std::string>()), h.lambda_u());
    }
  }
}

TEST(Cli, InvariantJsonRoundTrip) {
  for (const char* text : {"1,1;1,0", "3,1;2,1", "7,2;3,1", "-5,2;2,-1", "1,4;1,3"}) {
    const Result r = run({"invariant", text, "--json"});
    ASSERT_EQ(r.code, 0) << text;
    const TraceRangeInvariant inv = invariant_from_json(r.out);
    EXPECT_EQ(inv, trace_range(parse_matrix(text)));
    EXPECT_EQ(to_json(inv) + "\n", r.out);
  }
}

TEST(Cli, PresentationJsonRoundTrip) {
  const auto j = json_of(run({"presentation", "3,1;2,1", "--json"}));
  ASSERT_EQ(j["relations"].size(), 6u);
  const ThetaVector t = theta_closed_form(HypMatrix::certify(Mat2Z{3, 1, 2, 1}));
  const auto rels = torus_relations(t);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    EXPECT_EQ(parse_generator(j["relations"][i]["left"].get<std::string>()), rels[i].left);
    EXPECT_EQ(parse_generator(j["relations"][i]["right"].get<std::string>()), rels[i].right);
    EXPECT_EQ(parse_quadnum(j["relations"][i]["phase"].get<std::string>()), rels[i].phase);
  }
}

TEST(Cli, RuelleJson) {
  const auto j = json_of(run({"ruelle", "1,1;1,0", "--json"}));
  EXPECT_EQ(j["delta"], -1);
  EXPECT_EQ(j["u_map"], nlohmann::json::parse("[[1,1],[1,0]]"));
  EXPECT_EQ(j["v_map"], nlohmann::json::parse("[[0,1],[1,-1]]"));
  EXPECT_EQ(j["w_conjugation"]["verified"], "V2");
  EXPECT_TRUE(j["w_conjugation"]["V2_reading"]["preserves_relations"].get<bool>());
  EXPECT_FALSE(j["w_conjugation"]["U2_reading"]["preserves_relations"].get<bool>());
  EXPECT_EQ(j["w_conjugation"]["V2_reading"]["images"]["U1"], "U1 U2");
  EXPECT_TRUE(j["automorphism_check"].get<bool>());
  // Images re-parse as words.
  for (const auto& [gen, word] : j["w_conjugation"]["V2_reading"]["images"].items()) {
    EXPECT_EQ(to_string(parse_word(word.get<std::string>())), word.get<std::string>()) << gen;
  }
  const Result text = run({"ruelle", "1,1;1,0"});
  EXPECT_TRUE(contains(text.out, "[verified]"));
  EXPECT_TRUE(contains(text.out, "[breaks relations]"));
}

TEST(Cli, Nondegeneracy) {
  const auto j = json_of(run({"nondegeneracy", "3,1;2,1", "--bound", "2", "--json"}));
  EXPECT_EQ(j["degenerate"], nlohmann::json::parse("[[0,0,0,0]]"));
  EXPECT_EQ(j["fixing_pairs"], nlohmann::json::parse("[[0,0]]"));
  EXPECT_TRUE(j["nondegenerate"].get<bool>());
}

TEST(Cli, Conjugate) {
  const auto self = json_of(run({"conjugate", "1,1;1,0", "1,1;1,0", "--bound", "1", "--json"}));
  EXPECT_TRUE(self["found"].get<bool>());
  EXPECT_EQ(self["M"], nlohmann::json::parse("[[1,0],[0,1]]"));
  EXPECT_FALSE(self["flip"].get<bool>());
  const auto none = json_of(run({"conjugate", "1,1;1,0", "3,1;2,1", "--bound", "2", "--json"}));
  EXPECT_FALSE(none["found"].get<bool>());
  EXPECT_TRUE(none["M"].is_null());
  EXPECT_TRUE(contains(run({"conjugate", "1,1;1,0", "0,1;1,-1"}).out, "flip"));
}

TEST(Cli, SimulateJsonSchema) {
  const Result r = run({"simulate", "3,1;2,1", "--point", "0,0", "--mn", "2,-1", "--steps", "15", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j["forward"].size(), 16u);
  EXPECT_EQ(j["backward"].size(), 16u);
  EXPECT_TRUE(j["converged"].get<bool>());
  const Result neg = run({"simulate", "1,1;1,0", "--mn", "-1,2", "--steps", "5", "--json"});
  EXPECT_EQ(neg.code, 0) << neg.err;
}

TEST(Cli, SimulateCsv) {
  const Result r = run({"simulate", "1,1;1,0", "--point", "0.1,0.2", "--steps", "4", "--csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "k,forward,backward");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 5);
}

TEST(Cli, Density) {
  const auto j = json_of(run({"density", "1,1;1,0", "--N", "0", "--grid", "8", "--json"}));
  EXPECT_NEAR(j["covering_radius"].get<double>(), std::sqrt(2.0) / 2, 1e-12);
}

TEST(Cli, ExitCodeMatrix) {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"invariant", "1,1;1,0"}, 0},
      {{"--help"}, 0},
      {{"theta", "--help"}, 0},
      {{}, 2},
      {{"frobnicate"}, 2},
      {{"invariant"}, 2},
      {{"invariant", "1,1;1"}, 2},
      {{"invariant", "1,1;1,0", "--bogus"}, 2},
      {{"invariant", "1,1;1,0", "2,1;1,1"}, 2},
      {{"conjugate", "1,1;1,0", "1,1;1,0", "--bound", "x"}, 2},
      {{"simulate", "1,1;1,0", "--point", "0.1"}, 2},
      {{"simulate", "1,1;1,0", "--steps", "26"}, 2},
      {{"density", "1,1;1,0", "--grid", "0"}, 2},
      {{"compare", "1,1;1,0"}, 2},
      {{"invariant", "0,1;1,0"}, 1},
      {{"theta", "1,1;0,1"}, 1},
      {{"ruelle", "1,0;0,1"}, 1},
      {{"conjugate", "1,1;1,0", "2,0;0,1"}, 1},
      {{"simulate", "0,1;1,0"}, 1},
      {{"density", "1,1;0,1"}, 1},
      {{"nondegeneracy", "2,0;0,1"}, 1},
  };
  for (const Case& c : cases) {
    const Result r = run(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    EXPECT_EQ(r.code, c.code) << joined << "\nout: " << r.out << "\nerr: " << r.err;
  }
}

TEST(Cli, PreconditionMessageNamesCondition) {
  const Result r = run({"invariant", "0,1;1,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "matrix is not hyperbolic (det=-1, trace=0)"));
}
