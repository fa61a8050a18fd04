#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

  namespace fs = std::filesystem;
  using quandelier::cli::run;

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result cli(std::vector<std::string> args,
             std::optional<std::string> env = std::nullopt) {
    args.insert(args.begin(), "quandelier");
    std::ostringstream out, err;
    int code = run(args, out, err, env);
    return {code, out.str(), err.str()};
  }

  fs::path data(std::string const& name) {
    return fs::path(QUANDELIER_CLI_DATA) / name;
  }

  std::string d(std::string const& name) {
    return data(name).string();
  }

  class TempDir {
   public:
    TempDir() {
      path_ = fs::temp_directory_path()
              / ("quandelier-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())
                 + "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
      fs::create_directories(path_);
    }
    ~TempDir() {
      std::error_code ec;
      fs::remove_all(path_, ec);
    }
    std::string file(std::string const& name, std::string const& content) const {
      fs::path p = path_ / name;
      std::ofstream(p) << content;
      return p.string();
    }

   private:
    fs::path path_;
  };

  TEST(Cli, ValidateReportsComponents) {
    auto r = cli({"validate", d("q22.q")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "ok n=4 components=2 connected=false\n");
  }

  TEST(Cli, ValidateReportsEachAxiom) {
    EXPECT_EQ(cli({"validate", d("bad_q1.q")}).out, "Q1 violated at a=1\n");
    EXPECT_EQ(cli({"validate", d("bad_q2.q")}).out,
              "Q2 violated at a=1 a'=2 b=2\n");
    TempDir tmp;
    // columns (2 3), (1 3) and the identity: bijections, not automorphisms
    auto r = cli({"validate", tmp.file("q3.q", "quandle 3\n1 3 1\n3 2 2\n2 1 3\n")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("Q3 violated at a=", 0), 0u);
  }

  TEST(Cli, ParseErrorsExitThree) {
    EXPECT_EQ(cli({"validate", d("bad_header.q")}).code, 3);
    EXPECT_EQ(cli({"validate", d("no-such-file.q")}).code, 3);
    EXPECT_EQ(cli({"frobnicate"}).code, 3);
    EXPECT_EQ(cli({"pi1", d("d3.q"), "--budget", "x"}).code, 3);
    EXPECT_EQ(cli({"h2c", d("d3.q"), "--coeff", "Z0"}).code, 3);
  }

  TEST(Cli, HelpExitsZero) {
    auto r = cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("pi1"), std::string::npos);
  }

  TEST(Cli, Pi1PerBasepoint) {
    auto r = cli({"pi1", d("s4.q"), "--base", "1", "--base", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "pi1 order=2 ab=rank 0 torsion 2\n"
                     "pi1 order=2 ab=rank 0 torsion 2\n");
  }

  TEST(Cli, BudgetFromEnvironmentAndFlag) {
    EXPECT_EQ(cli({"pi1", d("s5.q")}).code, 0);
    auto env = cli({"pi1", d("s5.q")}, "50");
    EXPECT_EQ(env.code, 2);
    EXPECT_EQ(env.out.find("unknown(budget)") != std::string::npos, true);
    // the flag wins over the environment
    EXPECT_EQ(cli({"pi1", d("s5.q"), "--budget", "100000"}, "50").code, 0);
    EXPECT_EQ(cli({"--budget", "50", "pi1", d("s5.q")}).code, 2);
  }

  TEST(Cli, H2cPerComponent) {
    auto r = cli({"h2c", d("q22.q"), "--coeff", "Z2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "component 1: classes=4\ncomponent 2: classes=4\n");
  }

  TEST(Cli, H2cVerifyAgreesWithBruteForce) {
    auto r = cli({"h2c", d("d4.q"), "--coeff", "Z2", "--verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("brute-force="), std::string::npos);
    EXPECT_EQ(r.out.find("unknown"), std::string::npos);
  }

  TEST(Cli, UniversalCoverOutputParses) {
    auto r = cli({"cover", d("s4.q"), "--universal"});
    ASSERT_EQ(r.code, 0);
    TempDir tmp;
    std::string q = r.out.substr(0, r.out.find("map"));
    std::string m = r.out.substr(r.out.find("map"));
    auto        cq = tmp.file("cover.q", q);
    auto        cm = tmp.file("cover.map", m);
    auto        v  = cli({"validate", cq});
    EXPECT_EQ(v.out, "ok n=12 components=1 connected=true\n");
    EXPECT_EQ(cli({"cover", d("s4.q"), "--check", cm, "--source", cq}).out,
              "covering=true\n");
  }

  TEST(Cli, CheckRejectsMalformedMaps) {
    TempDir tmp;
    auto    short_map = tmp.file("short.map", "map 2\n1 2\n");
    EXPECT_EQ(cli({"cover", d("d4.q"), "--check", short_map, "--source",
                   d("d8.q")})
                  .code,
              3);
  }

  TEST(Cli, ExtensionRoundTrip) {
    TempDir tmp;
    auto    bundle = cli({"ext", d("s4.q"), "--from-cocycle",
                          d("s4_coboundary.cocycle")});
    ASSERT_EQ(bundle.code, 0);
    auto b = tmp.file("e.ext", bundle.out);
    EXPECT_EQ(cli({"ext", d("s4.q"), "--equiv", b, d("s4_trivial.ext")}).out,
              "equivalent=true\n");
    auto back = cli({"ext", d("s4.q"), "--extract", b});
    ASSERT_EQ(back.code, 0);
    auto c = tmp.file("back.cocycle", back.out);
    auto again = cli({"ext", d("s4.q"), "--from-cocycle", c});
    EXPECT_EQ(again.out, bundle.out);
  }

  TEST(Cli, RejectsNonCocycle) {
    TempDir tmp;
    auto    f = tmp.file("bad.cocycle",
                         "cocycle 3\n1 0 0\n0 0 0\n0 0 0\n");
    auto    r = cli({"ext", d("d3.q"), "--from-cocycle", f});
    EXPECT_NE(r.code, 0);
    EXPECT_FALSE(r.err.empty());
  }

}  // namespace
