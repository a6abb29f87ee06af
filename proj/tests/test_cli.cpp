#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "latmorph/io.hpp"
#include "latmorph/json_codec.hpp"
#include "latmorph/regression_pack.hpp"

namespace fs = std::filesystem;
using namespace latmorph;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("latmorph_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    write_text_file(p, text);
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CheckPassesAndFails) {
  const auto cross = file("cross.txt", ".#.\n#o#\n.#.\n");
  const auto square = file("square.txt", "###\n#o#\n###\n");
  const auto diamond = file("diamond.txt", "..#..\n.###.\n##o##\n.###.\n..#..\n");
  const auto pixels = file("pixels.txt", "######\n######\n######\n######\n######\n######\n");
  EXPECT_EQ(run({"check", "--se1", cross, "--se2", diamond, "--pixels", pixels}).code, cli::kExitPass);
  const auto r = run({"check", "--se1", cross, "--se2", square, "--pixels", pixels});
  EXPECT_EQ(r.code, cli::kExitFalse);
  EXPECT_EQ(Json::parse(r.out)["verdict"], false);
  EXPECT_EQ(run({"check-whole-space", "--se1", cross, "--se2", square}).code, cli::kExitFalse);
}

TEST_F(Cli, PositiveOnlyColumnReportsNegativeCounterexample) {
  const auto b1 = file("b1.txt", "o\n#\n");
  const auto b2 = file("b2.txt", "#\n#\n.\no\n#\n");
  const auto p = file("p.json", "[[0,0],[0,1],[0,3]]");
  EXPECT_EQ(run({"check", "--se1", b1, "--se2", b2, "--pixels", p, "--sign", "pos"}).code, cli::kExitPass);
  const auto r = run({"check", "--se1", b1, "--se2", b2, "--pixels", p, "--sign", "neg"});
  ASSERT_EQ(r.code, cli::kExitFalse);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["counterexample"]["x"].dump(), "[0,3]");
  EXPECT_EQ(j["counterexample"]["b2"].dump(), "[0,2]");
}

TEST_F(Cli, DiagonalPairDependsOnScope) {
  const auto b1 = file("b1.txt", "..#\n...\no..\n");
  const auto b2 = file("b2.txt", "..#\n...\no.#\n...\n#..\n");
  const auto p = file("p.txt", "#####\n#####\n#####\n");
  EXPECT_EQ(run({"check-whole-space", "--se1", b1, "--se2", b2}).code, cli::kExitPass);
  EXPECT_EQ(run({"check", "--se1", b1, "--se2", b2, "--pixels", p}).code, cli::kExitFalse);
}

TEST_F(Cli, WeakCheckAndOracle) {
  const auto b1 = file("b1.txt", "o#\n");
  const auto b2 = file("b2.txt", "o##\n");
  const auto p = file("p.txt", "####\n");
  EXPECT_EQ(run({"weak-check", "--se1", b1, "--se2", b2}).code, cli::kExitPass);
  const auto r = run({"oracle", "--se1", b1, "--se2", b2, "--pixels", p, "--jobs", "2"});
  EXPECT_EQ(r.code, cli::kExitPass);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["agrees"], true);
}

TEST_F(Cli, OracleCap) {
  const auto b = file("b.txt", "o\n");
  const auto p = file("p.txt", "######\n######\n######\n######\n");
  const auto r = run({"oracle", "--se1", b, "--se2", b, "--pixels", p});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
  EXPECT_EQ(run({"oracle", "--se1", b, "--se2", b, "--pixels", p, "--cap", "41"}).code, cli::kExitUsage);
}

TEST_F(Cli, BuildAndVerifySequence) {
  const auto recipe = file("r.json", R"({"kind":"square-iteration","params":{"n":3}})");
  const auto r = run({"build", "--recipe", recipe});
  ASSERT_EQ(r.code, cli::kExitPass);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["sequence"].size(), 4U);
  EXPECT_EQ(run({"verify-seq", "--recipe", recipe, "--pixels", file("p.txt", "###\n###\n")}).code, cli::kExitPass);
  const auto cross = file("cross.txt", ".#.\n#o#\n.#.\n");
  const auto square = file("square.txt", "###\n#o#\n###\n");
  EXPECT_EQ(run({"verify-seq", "--se", cross, "--se", square}).code, cli::kExitFalse);
  EXPECT_EQ(run({"verify-seq", "--se", cross}).code, cli::kExitUsage);
}

TEST_F(Cli, GranulometryWritesOutputs) {
  const auto img = file("g.pgm", "P2\n4 4\n9\n0 1 2 3\n4 5 6 7\n8 9 0 1\n2 3 4 5\n");
  const auto recipe = file("r.json", R"({"kind":"square-iteration","params":{"n":2}})");
  const fs::path out = dir_ / "out";
  const auto r = run({"granulometry", "--image", img, "--recipe", recipe, "--out", out.string()});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  EXPECT_EQ(r.out.rfind("step,zero_pixels\n", 0), 0U);
  for (const char* f : {"step_0.pgm", "step_2.pgm", "step_1_zero.grid", "curve.csv", "report.json"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  EXPECT_EQ(read_text_file(out / "curve.csv"), r.out);
}

TEST_F(Cli, GranulometryRefusesThenForces) {
  const auto img = file("g.grid", "1 1 1 1 1\n1 0 1 1 1\n1 1 1 1 1\n1 1 1 0 1\n1 1 1 1 1\n");
  const auto cross = file("cross.txt", ".#.\n#o#\n.#.\n");
  const auto square = file("square.txt", "###\n#o#\n###\n");
  const auto refused = run({"granulometry", "--image", img, "--se", cross, "--se", square});
  EXPECT_EQ(refused.code, cli::kExitRefused);
  EXPECT_NE(refused.err.find("refused"), std::string::npos);
  EXPECT_EQ(run({"granulometry", "--image", img, "--se", cross, "--se", square, "--force"}).code, cli::kExitPass);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check", "--se1", "/nonexistent"}).code, cli::kExitUsage);
  const auto bad = file("bad.txt", "#.#\n");
  EXPECT_EQ(run({"check-whole-space", "--se1", bad, "--se2", bad}).code, cli::kExitUsage);
  const auto o = file("o.txt", "o\n");
  EXPECT_EQ(run({"check", "--se1", o, "--se2", o, "--pixels", o, "--sign", "sideways"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitPass);
}

TEST_F(Cli, ExamplesPassAndList) {
  const auto r = run({"examples"});
  EXPECT_EQ(r.code, cli::kExitPass) << r.out;
  const auto l = run({"examples", "--list"});
  EXPECT_EQ(l.code, cli::kExitPass);
  std::size_t ce = 0, seq = 0;
  std::istringstream in(l.out);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("counterexample ", 0) == 0) ++ce;
    if (line.rfind("sequence ", 0) == 0) ++seq;
  }
  EXPECT_EQ(ce, 7U);
  EXPECT_EQ(seq, 7U);
}

TEST_F(Cli, CorruptedFixtureShowsDiff) {
  Json pack = embedded_pack();
  std::string& grid = pack["counterexamples"][0]["expect"]["grids"]["opening_b1"].get_ref<std::string&>();
  grid[0] = '1';
  const auto f = file("pack.json", pack.dump(1));
  const auto r = run({"examples", "--fixtures", f});
  EXPECT_EQ(r.code, cli::kExitFalse);
  EXPECT_NE(r.out.find("opening_b1: pixel (0, 5) expected 1, got 0"), std::string::npos) << r.out;
}

TEST_F(Cli, OutputIsDeterministic) {
  const auto b1 = file("b1.txt", ".#.\n#o#\n.#.\n");
  const auto b2 = file("b2.txt", "###\n#o#\n###\n");
  const auto p = file("p.txt", "#####\n#####\n#####\n#####\n");
  const auto o1 = run({"oracle", "--se1", b1, "--se2", b2, "--pixels", p, "--jobs", "1"});
  const auto o4 = run({"oracle", "--se1", b1, "--se2", b2, "--pixels", p, "--jobs", "4"});
  EXPECT_EQ(o1.code, cli::kExitFalse);
  EXPECT_EQ(o1.out, o4.out);
  const auto a = run({"check", "--se1", b1, "--se2", b2, "--pixels", p});
  const auto b = run({"--isa", "scalar", "check", "--se1", b1, "--se2", b2, "--pixels", p});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"audit"}).out, run({"audit"}).out);
}

TEST_F(Cli, OutFileMatchesStdout) {
  const auto b1 = file("b1.txt", "o#\n");
  const auto b2 = file("b2.txt", "#o#\n");
  const auto stdout_run = run({"check-whole-space", "--se1", b1, "--se2", b2});
  const auto path = (dir_ / "report.json").string();
  EXPECT_EQ(run({"check-whole-space", "--se1", b1, "--se2", b2, "--out", path}).code, stdout_run.code);
  EXPECT_EQ(read_text_file(path), stdout_run.out);
}
