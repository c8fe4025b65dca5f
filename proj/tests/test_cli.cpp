#include "test_support.hpp"

#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace semiortho;
using semiortho::testing::binom_oracle;
using semiortho::testing::int_matrix;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string demo(const char* name) { return std::string(SEMIORTHO_DEMO_DATA) + "/" + name; }

const char* const markov_collection =
    R"({"ambient":{"gram":[[1,3,3],[0,1,3],[0,0,1]]},"vectors":[[1,0,0],[0,1,0],[0,0,1]]})";

/// Vector-level oracle: mutate the standard basis by hand and take the Gram matrix.
IntMatrix gram_after_left_mutation_1(const IntMatrix& g) {
  auto n = g.rows();
  auto e = [&](std::size_t i) { return unit_vector<Integer>(n, i); };
  auto pair = [&](const IntVector& v, const IntVector& w) { return dot(v, g * w); };
  auto a = e(0);
  auto b = e(1);
  // L(a, b) = (b - <a,b> a, a)
  std::vector<IntVector> vs{b - pair(a, b) * a, a};
  for (std::size_t i = 2; i < n; ++i) vs.push_back(e(i));
  return IntMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return pair(vs[i], vs[j]); });
}

}  // namespace

TEST(Cli, ClassifyExamples) {
  auto r = run({"classify", "--file", demo("markov_333.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Type1");
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["epsilon"], 1);
  auto id = run({"classify", "--inline", R"({"gram":[[1,0],[0,1]]})"});
  ASSERT_EQ(id.code, 0);
  EXPECT_EQ(Json::parse(id.out)["verdict"], "DecomposableRational");
  auto bad = run({"classify", "--inline", "{not json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("malformed JSON"), std::string::npos);
  EXPECT_EQ(run({"classify", "--inline", R"({"gram":[[2,0],[0,1]]})"}).code, 1);
  EXPECT_EQ(run({"classify"}).code, 1);
  EXPECT_EQ(run({"classify", "--file", "/nonexistent/x.json"}).code, 1);
}

TEST(Cli, MutateEmptyWordIsIdentity) {
  auto r = run({"mutate", "--file", demo("p2_twists.json"), "--word", ""});
  ASSERT_EQ(r.code, 0) << r.err;
  auto out = Json::parse(r.out);
  std::ifstream in(demo("p2_twists.json"));
  auto input = collection_from_json(Json::parse(in));
  EXPECT_EQ(collection_from_json(out), input);
}

TEST(Cli, MutateLeftRightIsIdentity) {
  auto r = run({"mutate", "--file", demo("p2_twists.json"), "--word", "L1 R1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(demo("p2_twists.json"));
  EXPECT_EQ(collection_from_json(Json::parse(r.out)), collection_from_json(Json::parse(in)));
}

TEST(Cli, MutateTwistBasisOfP2) {
  auto twists = IntMatrix::generate(3, 3, [](std::size_t i, std::size_t j) {
    return j < i ? Integer(0) : to_integer(binom_oracle(2 + static_cast<long>(j - i), 2));
  });
  auto expected = gram_after_left_mutation_1(twists);
  EXPECT_EQ(expected, int_matrix({{1, -3, -15}, {0, 1, 6}, {0, 0, 1}}));
  auto r = run({"mutate", "--file", demo("p2_twists.json"), "--word", "L1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(int_matrix_from_json(j["gram"]), expected);
  EXPECT_EQ(j["word"], "L1");
}

TEST(Cli, MutateOnMarkovForm) {
  auto r = run({"mutate", "--inline", markov_collection, "--word", "L1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(int_matrix_from_json(Json::parse(r.out)["gram"]), int_matrix({{1, -3, -6}, {0, 1, 3}, {0, 0, 1}}));
}

TEST(Cli, MutateRejectsBadWords) {
  EXPECT_EQ(run({"mutate", "--file", demo("p2_twists.json"), "--word", "L7"}).code, 1);
  EXPECT_EQ(run({"mutate", "--file", demo("p2_twists.json"), "--word", "Q1"}).code, 1);
}

TEST(Cli, K0GramAdams) {
  auto r = run({"k0", "gram", "-n", "3", "--basis", "adams"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto g = rat_matrix_from_json(Json::parse(r.out)["gram"]);
  auto printed = semiortho::testing::rat_matrix({{6, 11, 6, 1}, {-11, -12, -3, 0}, {6, 3, 0, 0}, {-1, 0, 0, 0}});
  EXPECT_EQ(g, Rational(1) / Rational(6) * printed);
  auto pretty = run({"k0", "gram", "-n", "2", "--basis", "adams", "--format", "pretty"});
  ASSERT_EQ(pretty.code, 0);
  EXPECT_NE(pretty.out.find("3/2"), std::string::npos);
  EXPECT_NE(pretty.out.find("-3/2"), std::string::npos);
  EXPECT_EQ(run({"k0", "gram", "-n", "3", "--basis", "xi"}).code, 1);
  EXPECT_EQ(run({"k0", "gram", "-n", "2", "--basis", "chern"}).code, 1);
}

TEST(Cli, K0RankAndClassify) {
  auto r = run({"k0", "rank", "-n", "2", "--adams", "2", "1/2", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["rank"], "2/1");
  EXPECT_EQ(j["integral"], false);
  auto n = Json::parse(run({"k0", "rank", "-n", "2", "--nabla", "1", "0", "1"}).out);
  EXPECT_EQ(n["rank"], "1/1");
  EXPECT_EQ(n["integral"], true);
  EXPECT_EQ(run({"k0", "rank", "-n", "2", "--adams", "1"}).code, 1);
  auto c = Json::parse(run({"k0", "classify", "-n", "4", "--basis", "twists"}).out);
  EXPECT_EQ(c["verdict"], "Type1");
  EXPECT_EQ(c["n"], 4);
}

TEST(Cli, MarkovCommands) {
  auto r = run({"markov", "reduce", "3", "3", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto trace = trace_from_json(Json::parse(r.out));
  EXPECT_EQ(trace.end, (MarkovTriple{3, 3, 3}));
  replay_trace(trace);
  EXPECT_EQ(run({"markov", "reduce", "-3", "3", "-6"}).code, 0);
  EXPECT_EQ(run({"markov", "reduce", "1", "1", "1"}).code, 1);
  EXPECT_EQ(run({"markov", "reduce", "0", "0", "0"}).code, 1);
  auto check = Json::parse(run({"markov", "check", "2", "0", "0"}).out);
  EXPECT_EQ(check["trace"], -1);
  EXPECT_EQ(check["kind"], "MinusCase");
  EXPECT_EQ(check["is_markov"], false);
  EXPECT_EQ(run({"markov", "check", "1", "2"}).code, 1);
}

TEST(Cli, OrbitAndNodeCap) {
  auto r = run({"orbit", "--inline", markov_collection, "--height", "50", "--max-nodes", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rep = orbit_report_from_json(Json::parse(r.out));
  EXPECT_GE(rep.orbit_size, 1u);
  ::setenv("SEMIORTHO_MAX_NODES", "3", 1);
  auto capped = orbit_report_from_json(
      Json::parse(run({"orbit", "--inline", markov_collection, "--height", "1000", "--max-nodes", "100"}).out));
  ::unsetenv("SEMIORTHO_MAX_NODES");
  EXPECT_EQ(capped.orbit_size, 3u);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(run({"orbit", "--inline", markov_collection, "--height", "-1"}).code, 1);
}

TEST(Cli, VerifyBraidPasses) {
  auto r = run({"verify", "--suite", "braid"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["passed"], true);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"k0", "gram", "-n", "x"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputRoundTripsAndIsDeterministic) {
  std::vector<std::vector<std::string>> cmds{
      {"classify", "--file", demo("markov_333.json")},
      {"classify", "--file", demo("hyperbolic.json")},
      {"mutate", "--file", demo("p2_twists.json"), "--word", "L1 L2 R1"},
      {"k0", "gram", "-n", "4", "--basis", "twists"},
      {"k0", "classify", "-n", "3", "--basis", "binomial"},
      {"markov", "reduce", "3", "6", "15"},
      {"orbit", "--file", demo("p2_twists.json"), "--height", "40", "--max-nodes", "400", "--threads", "3"},
  };
  for (const auto& cmd : cmds) {
    auto a = run(cmd);
    auto b = run(cmd);
    ASSERT_EQ(a.code, 0) << cmd.front() << ": " << a.err;
    EXPECT_EQ(a.out, b.out);
    auto j = Json::parse(a.out);
    Json back;
    if (cmd.front() == "classify" || (cmd.front() == "k0" && cmd[1] == "classify")) {
      back = report_to_json(report_from_json(j));
      if (j.contains("basis")) back["basis"] = j["basis"];
    } else if (cmd.front() == "mutate") {
      back = collection_to_json(collection_from_json(j));
      back["word"] = j["word"];
    } else if (cmd.front() == "k0") {
      back = Json{{"n", j["n"]}, {"basis", j["basis"]}, {"gram", matrix_to_json(rat_matrix_from_json(j["gram"]))}};
    } else if (cmd.front() == "markov") {
      back = trace_to_json(trace_from_json(j));
    } else {
      back = orbit_report_to_json(orbit_report_from_json(j));
    }
    EXPECT_EQ(back, j) << cmd.front();
  }
  // Thread count does not change the orbit output.
  auto one = run({"orbit", "--file", demo("p2_twists.json"), "--height", "40", "--max-nodes", "400", "--threads", "1"});
  auto four = run({"orbit", "--file", demo("p2_twists.json"), "--height", "40", "--max-nodes", "400", "--threads", "4"});
  EXPECT_EQ(one.out, four.out);
}
