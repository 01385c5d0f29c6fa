#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hnl/error.hpp"
#include "hnl/tools/cli.hpp"
#include "hnl/tools/op_expr.hpp"
#include "hnl/parse.hpp"
#include "hnl/wronskian.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, bool as_json = true) {
  if (as_json) {
    args.push_back("--format");
    args.push_back("json");
  }
  std::ostringstream out, err;
  const int code = hnl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

hnl::Polynomial P(const char* s) { return hnl::parse_poly(s, 1); }

}  // namespace

TEST(Commands, Sl2WronskianValue) {
  const auto r = run({"wronskian", "--args", "-2x,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["value"], "2");
  const auto text = run({"wronskian", "--args", "-2x,1"}, false);
  EXPECT_NE(text.out.find("value: 2"), std::string::npos);
}

TEST(Commands, JacobiOfClassicalWronskian) {
  const auto r = run({"jacobi", "--op", "W[0,1,2]", "--deg", "6"});
  EXPECT_EQ(r.code, 0);
  const auto j = r.report();
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_TRUE(j["report"]["pass"]);
  EXPECT_EQ(j["report"]["soundness_bound"], 4);
  EXPECT_EQ(j["report"]["test_degree"], 6);
  EXPECT_TRUE(j["report"]["bound_met"]);
  EXPECT_EQ(j["mode"], "exhaustive");
}

TEST(Commands, JetJacobiTupleCount) {
  const auto r = run({"jet-jacobi", "--n", "2", "--k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["report"]["tuples_checked"], 6);
}

TEST(Commands, FailedCheckCarriesWitness) {
  const auto r = run({"box", "--n", "1", "--k", "1", "--check", "leibniz"});
  EXPECT_EQ(r.code, 1);
  const auto j = r.report();
  EXPECT_FALSE(j["report"]["pass"]);
  EXPECT_FALSE(j["report"]["witness"]["args"].empty());
  const auto f = run({"finite", "--algebra", "file", "--file", HNL_FIXTURE_DIR "/threshold_counterexample.json",
                      "--check", "jacobi"});
  EXPECT_EQ(f.code, 1);
  EXPECT_EQ(f.report()["runs"][0]["witness"]["args"], json({"x", "y", "z"}));
}

TEST(Commands, SampleModeIsLabelled) {
  const auto r = run({"jacobi", "--op", "W[0,1,2]", "--sample", "5", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["mode"], "sample");
}

TEST(Commands, OnlyWronskianReportsRatio) {
  const auto r = run({"only-wronskian", "--N", "4", "--p", "2", "--weights", "1,z,z^2,z^3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report()["ratio"], "2");
}

TEST(Commands, ValuesWithoutChecks) {
  EXPECT_EQ(run({"witt", "--indices", "2,-3"}).report()["value"], "-5");
  EXPECT_EQ(run({"dim-jets", "--n", "2", "--k", "1"}).code, 0);
  EXPECT_EQ(run({"nambu", "--n", "2", "--args", "x,y"}).report()["value"], "1");
  EXPECT_EQ(run({"box", "--n", "2", "--k", "1", "--args", "x,y,x*y"}).report()["value"], "-x*y");
}

TEST(ExitCodes, ConfigErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"jacobi"}).code, 2);
  EXPECT_EQ(run({"nosuch"}).code, 2);
  EXPECT_EQ(run({"jacobi", "--op", "W[0,1"}).code, 2);
  EXPECT_EQ(run({"wronskian", "--args", "x,"}).code, 2);
  EXPECT_EQ(run({"jacobi", "--op", "W[0,1,2]", "--budget", "0"}).code, 2);
  EXPECT_EQ(run({"jacobi", "--op", "W[0,1,2]", "--budget", "ten"}).code, 2);
  EXPECT_EQ(run({"jacobi", "--op", "W[0,1,2]", "--format", "yaml"}, false).code, 2);
}

TEST(ExitCodes, BudgetRefusal) {
  const auto r = run({"jacobi", "--op", "W[0,1,2]", "--deg", "6", "--budget", "10"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.report()["error"], "budget");
  EXPECT_EQ(r.report()["required"], 21);
  ::setenv("HNL_BUDGET", "10", 1);
  EXPECT_EQ(run({"jacobi", "--op", "W[0,1,2]", "--deg", "6"}).code, 3);
  EXPECT_EQ(run({"jacobi", "--op", "W[0,1,2]", "--deg", "6", "--budget", "100"}).code, 0);
  ::unsetenv("HNL_BUDGET");
}

TEST(Determinism, IdenticalJson) {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"delta-identities", "--k", "3", "--l", "2", "--seed", "4"},
        std::vector<std::string>{"finite", "--algebra", "random", "--N", "3", "--r", "4", "--seed", "2", "--count", "3",
                                 "--check", "jacobi"},
        std::vector<std::string>{"conformal", "--N", "3", "--seed", "9"},
        std::vector<std::string>{"jacobi", "--op", "W[0,1,2]", "--sample", "4", "--seed", "1", "--threads", "2"}}) {
    const auto a = run(cmd), b = run(cmd);
    EXPECT_EQ(a.out, b.out);
  }
  std::vector<std::string> threaded{"jacobi", "--op", "W[0,1,3]", "--deg", "4"};
  const auto one = run(threaded);
  threaded.insert(threaded.end(), {"--threads", "3"});
  EXPECT_EQ(one.out, run(threaded).out);
}

TEST(Batch, EmptyManifestWarns) {
  const auto p = temp_file("hnl_empty.manifest", "# nothing\n\n");
  const auto r = run({"batch", "--manifest", p.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["total"], 0);
  EXPECT_NE(r.err.find("contains no checks"), std::string::npos);
}

TEST(Batch, ExpectedFailureMatches) {
  const std::string fixture = HNL_FIXTURE_DIR "/threshold_counterexample.json";
  const auto p = temp_file("hnl_fixture.manifest", "wronskian --args \"-2x,1\"\nexpect-fail finite --algebra file --file '" +
                                                        fixture + "' --check jacobi\n");
  const auto r = run({"batch", "--manifest", p.string()});
  EXPECT_EQ(r.code, 0);
  const auto j = r.report();
  EXPECT_EQ(j["total"], 2);
  EXPECT_EQ(j["entries"][1]["exit_code"], 1);
  EXPECT_TRUE(j["entries"][1]["matched"]);

  const auto q = temp_file("hnl_unexpected.manifest", "expect-fail wronskian --args \"-2x,1\"\n");
  EXPECT_EQ(run({"batch", "--manifest", q.string()}).code, 1);
}

TEST(Batch, Errors) {
  EXPECT_EQ(run({"batch", "--manifest", "/nonexistent/manifest"}).code, 2);
  const auto p = temp_file("hnl_nested.manifest", "batch --manifest x\n");
  EXPECT_EQ(run({"batch", "--manifest", p.string()}).code, 2);
}

// The shipped manifest encodes the behaviour claimed for each check. The only
// lines that do not match are the exact-Wronskian claim beyond N = 2, p = 1
// and the square-zero claim for odd-arity brackets on seven elements.
TEST(Batch, ShippedManifest) {
  const auto r = run({"batch", "--manifest", HNL_SOURCE_DIR "/tools/acceptance.manifest"});
  const auto j = r.report();
  EXPECT_GT(j["total"].get<int>(), 40);
  std::set<std::string> mismatched;
  for (const auto& e : j["entries"]) {
    if (!e["matched"]) mismatched.insert(e["command"].get<std::string>().substr(0, 28));
  }
  const std::set<std::string> known{"only-wronskian --N 2 --p 2 -", "only-wronskian --N 2 --p 3 -",
                                    "only-wronskian --N 4 --p 2 -", "only-wronskian --N 4 --p 3 -",
                                    "koszul --op \"W[0,1,2]\" --bas", "koszul --op \"box(2,1)\" --bas"};
  EXPECT_EQ(mismatched, known);
  EXPECT_EQ(r.code, 1);
}

TEST(SplitCommandLine, Quotes) {
  using hnl::cli::split_command_line;
  EXPECT_EQ(split_command_line("a  \"b c\" 'd\"e' f"), (std::vector<std::string>{"a", "b c", "d\"e", "f"}));
  EXPECT_EQ(split_command_line("x \"\""), (std::vector<std::string>{"x", ""}));
  EXPECT_TRUE(split_command_line("   ").empty());
  EXPECT_THROW(split_command_line("a \"b"), hnl::DomainError);
}

TEST(OpExpr, Atoms) {
  using hnl::cli::parse_op_expr;
  const std::vector<hnl::Polynomial> args{P("1"), P("x"), P("x^2")};
  EXPECT_EQ(parse_op_expr("W[0,1,2]")(args), hnl::wronskian(args));
  EXPECT_EQ(parse_op_expr("D[2]")({P("x^3")}), P("6x"));
  EXPECT_EQ(parse_op_expr("id")({P("x")}), P("x"));
  EXPECT_EQ(parse_op_expr("box(1,1)").arity(), 2u);
  EXPECT_EQ(parse_op_expr("nambu3").arity(), 3u);
  EXPECT_EQ(parse_op_expr("nambu(2)").arity(), 2u);
}

TEST(OpExpr, Combinations) {
  using hnl::cli::parse_op_expr;
  const std::vector<hnl::Polynomial> pair{P("x"), P("x^3")};
  // D0 ^ D1 is the classical 2-Wronskian.
  EXPECT_EQ(parse_op_expr("D[0]^D[1]")(pair), parse_op_expr("W[0,1]")(pair));
  EXPECT_EQ(parse_op_expr("2*W[0,1] - W[0,1]")(pair), parse_op_expr("W[0,1]")(pair));
  EXPECT_EQ(parse_op_expr("-1/2*(W[0,1] + W[0,2])")(pair),
            hnl::make_rational(-1, 2) * (hnl::generalized_wronskian({0, 1}, pair) + hnl::generalized_wronskian({0, 2}, pair)));
  EXPECT_EQ(parse_op_expr("wedge(D[0], D[1])")(pair), parse_op_expr("W[0,1]")(pair));
  EXPECT_EQ(parse_op_expr("act(W[0,1], W[0,1])").arity(), 3u);
  EXPECT_EQ(parse_op_expr("rn(W[0,1], W[0,1,2])").arity(), 4u);
  EXPECT_EQ(parse_op_expr("inner(W[0,1,2]; 1)")(pair), hnl::wronskian(std::vector<hnl::Polynomial>{P("1"), P("x"), P("x^3")}));
}

TEST(OpExpr, Errors) {
  using hnl::cli::parse_op_expr;
  try {
    parse_op_expr("W[0,1] + foo");
    FAIL();
  } catch (const hnl::ParseError& e) {
    EXPECT_EQ(e.position(), 9u);
  }
  EXPECT_THROW(parse_op_expr("W[0,1"), hnl::ParseError);
  EXPECT_THROW(parse_op_expr("W[0,1] extra"), hnl::ParseError);
  EXPECT_THROW(parse_op_expr("1/0*W[0,1]"), hnl::ParseError);
  EXPECT_THROW(parse_op_expr("W[0,1] + box(2,1)"), hnl::Error);
  EXPECT_THROW(parse_op_expr("inner(W[0,1]; 1, x, x^2)"), hnl::DomainError);
}
