#include <asq2/cli.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace asq2::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { ::unsetenv("ASQ2_CONFIG"); }
  void TearDown() override { ::unsetenv("ASQ2_CONFIG"); }

  std::string write_config(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("asq2_cli_test_" + name + ".cfg");
    std::ofstream(path) << body;
    return path.string();
  }
};

TEST_F(Cli, SolveGoldenJson) {
  const Result r = run_cli({"solve", "x", "T + 1 + x*y", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            R"({"kind":"finite","roots":["y","x + y + 1/T*x*y"],"central_roots":[],"locus":null,)"
            R"("case":"mu-artin-schreier","reductions":[]})"
            "\n");
}

TEST_F(Cli, SolveGoldenText) {
  const Result r = run_cli({"solve", "T*x", "T^3 + T^2 + T^2*x*y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "kind: finite\n"
            "roots[0]: T*y\n"
            "roots[1]: T*x + T*y + x*y\n"
            "central_roots: []\n"
            "locus: null\n"
            "case: mu-artin-schreier\n"
            "reductions[0].kind: scale-by-trace\n"
            "reductions[0].factor: T\n");
}

TEST_F(Cli, SolveLocusGolden) {
  EXPECT_EQ(run_cli({"--json", "solve", "1", "T"}).out,
            R"({"kind":"central-plus-locus","roots":[],"central_roots":[],)"
            R"("locus":{"trace":"1","norm":"T","status":"witness","witness":"x"},"case":"mu-one","reductions":[]})"
            "\n");
  EXPECT_EQ(run_cli({"solve", "0", "T^2", "--json"}).out,
            R"({"kind":"central-plus-locus","roots":[],"central_roots":["T"],)"
            R"("locus":{"trace":"0","norm":"T^2","status":"none-within-bound","bound":3},"case":"mu-zero","reductions":[]})"
            "\n");
  EXPECT_EQ(run_cli({"solve", "0", "T^2 + T", "--json"}).out,
            R"({"kind":"central-plus-locus","roots":[],"central_roots":[],)"
            R"("locus":{"trace":"0","norm":"T^2 + T","status":"witness","witness":"x*y"},"case":"mu-zero","reductions":[]})"
            "\n");
}

TEST_F(Cli, JsonSchemaIsStable) {
  const std::vector<std::pair<std::string, std::string>> inputs = {
      {"x", "0"}, {"y", "y"}, {"1", "T"}, {"0", "T^2"}, {"T", "T^3"}, {"x + T*y", "T*x*y"}, {"0", "y"}};
  for (const auto& [mu, nu] : inputs) {
    const Result r = run_cli({"solve", mu, nu, "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"kind", "roots", "central_roots", "locus", "case", "reductions"}));
    EXPECT_TRUE(j["kind"] == "finite" || j["kind"] == "central-plus-locus");
    EXPECT_TRUE(j["roots"].is_array());
    EXPECT_TRUE(j["central_roots"].is_array());
    EXPECT_TRUE(j["case"].is_string());
    EXPECT_TRUE(j["reductions"].is_array());
    if (j["kind"] == "finite") {
      EXPECT_TRUE(j["locus"].is_null());
    } else {
      const Json& l = j["locus"];
      ASSERT_TRUE(l.is_object());
      EXPECT_TRUE(l["trace"].is_string());
      EXPECT_TRUE(l["norm"].is_string());
      EXPECT_TRUE(l["status"] == "witness" ? l["witness"].is_string() : l["bound"].is_number_integer());
    }
  }
}

TEST_F(Cli, OutputIsDeterministic) {
  const Result a = run_cli({"solve", "x + T*y", "T*x*y + 1", "--json"});
  const Result b = run_cli({"solve", "x + T*y", "T*x*y + 1", "--json"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, Classify) {
  EXPECT_EQ(run_cli({"classify", "y", "--json"}).out, "{\"class\":\"square-central\"}\n");
  EXPECT_EQ(run_cli({"classify", "T*x + y", "--json"}).out, "{\"class\":\"general\",\"eta\":\"T\"}\n");
  EXPECT_EQ(run_cli({"classify", "T"}).out, "class: central\n");
  EXPECT_EQ(run_cli({"classify", "0"}).out, "class: zero\n");
}

TEST_F(Cli, Complement) {
  EXPECT_EQ(run_cli({"complement", "x*y", "--json"}).out, "{\"complement\":\"x\"}\n");
  EXPECT_EQ(run_cli({"complement", "x"}).code, kUsage);
}

TEST_F(Cli, Oracle) {
  const Result r = run_cli({"oracle", "x", "T + 1 + x*y", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"bound\":1,\"brute_roots\":[\"y\"],\"agree\":true}\n");
  EXPECT_EQ(run_cli({"oracle", "1", "T"}).out, 
            "bound: 1\nbrute_roots[0]: x\nbrute_roots[1]: 1 + x\nbrute_roots[2]: T + x + x*y\n"
            "brute_roots[3]: T + x + y + x*y\nbrute_roots[4]: T + 1 + x + x*y\n"
            "brute_roots[5]: T + 1 + x + y + x*y\nagree: true\n");
}

TEST_F(Cli, Selftest) {
  const Result r = run_cli({"selftest", "--json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GE(j["suites"].size(), 9u);
}

TEST_F(Cli, ExitCodeUsage) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"solve", "x"}).code, kUsage);
  EXPECT_EQ(run_cli({"solve", "x", "(T"}).code, kUsage);
  const Result unknown = run_cli({"classify", "z"});
  EXPECT_EQ(unknown.code, kUsage);
  EXPECT_NE(unknown.err.find("unknown symbol"), std::string::npos);
  EXPECT_EQ(run_cli({"--config", "/nonexistent/asq2.cfg", "classify", "x"}).code, kUsage);
  EXPECT_EQ(run_cli({"--config", write_config("badkey", "gamma = 1\n"), "classify", "x"}).code, kUsage);
  EXPECT_EQ(run_cli({"--config", write_config("badint", "witness_bound = three\n"), "classify", "x"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST_F(Cli, ExitCodeSplitAlgebra) {
  const Result r = run_cli({"--config", write_config("split", "alpha = T\nbeta = T\n"), "solve", "1", "T"});
  EXPECT_EQ(r.code, kNotDivision);
  EXPECT_NE(r.err.find("preflight"), std::string::npos);
  EXPECT_EQ(run_cli({"--config", write_config("split2", "alpha = T^2 + T\n"), "classify", "x"}).code, kNotDivision);
}

TEST_F(Cli, ExitCodeNotDivisionFromData) {
  // [T, T^3) is split since T^3 = N(T*x), but with witness_bound = 0 the
  // preflight only tries q in {0, 1} and lets it through. T*x + y has norm
  // T^3 + T^3 = 0, so inverting it is detected at run time.
  const std::string cfg = write_config("bound0", "witness_bound = 0\nalpha = T\nbeta = T^3\n");
  const Result r = run_cli({"--config", cfg, "solve", "1", "1/(T*x + y)"});
  EXPECT_EQ(r.code, kNotDivision) << r.out << r.err;
}

TEST_F(Cli, ConfigFromEnvironmentAndFile) {
  const std::string cfg = write_config("gf4", "# GF(4) instance\nk = 2\nfq_modulus = g^2+g+1\n");
  ::setenv("ASQ2_CONFIG", cfg.c_str(), 1);
  const Result r = run_cli({"solve", "y", "0", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["roots"], Json::parse(R"(["0","y"])"));
  // beta defaulted to T + g, so y^2 = T + g.
  EXPECT_EQ(run_cli({"oracle", "0", "T + g"}).code, 0);
  ::unsetenv("ASQ2_CONFIG");
  EXPECT_EQ(run_cli({"--config", cfg, "classify", "g*x"}).out, "class: general\neta: g\n");
}

TEST(Config, ParsesAllKeys) {
  std::istringstream in(
      "k = 3\nfq_modulus = g^3 + g + 1\nalpha = T\nbeta = T + 1\n"
      "witness_bound = 2\noracle_bound = 0\ndivisor_budget = 100\n\n# comment\n");
  const Config c = parse_config(in);
  EXPECT_EQ(c.k, 3u);
  EXPECT_EQ(c.fq_modulus, "g^3 + g + 1");
  EXPECT_EQ(c.beta, "T + 1");
  EXPECT_EQ(c.witness_bound, 2);
  EXPECT_EQ(c.oracle_bound, 0);
  EXPECT_EQ(c.divisor_budget, 100u);
  std::istringstream bad("oracle_bound = 4\n");
  EXPECT_THROW(parse_config(bad), ConfigError);
  std::istringstream noeq("k 2\n");
  EXPECT_THROW(parse_config(noeq), ConfigError);
}

TEST(Config, DefaultBeta) {
  EXPECT_EQ(default_beta(FqField::standard(1)), "T + 1");
  EXPECT_EQ(default_beta(FqField::standard(2)), "T + g");
  Config c;
  c.k = 2;
  c.fq_modulus = "g^2 + 1";
  EXPECT_THROW(make_algebra(c), ConfigError);
}

}  // namespace
}  // namespace asq2::cli
