#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

// Runs tptlmon with `args`; stderr is discarded.
Outcome tptlmon(const std::string& args) {
  const std::string cmd = std::string(TPTLMON_PATH) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tptlmon_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    std::ofstream(path("ex1.csv")) << "time,a,b\n0,0,0\n0.3,0,0\n0.7,1,1\n1.0,1,0\n1.1,1,1\n"
                                      "1.5,0,1\n1.9,0,1\n";
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* const kExample1 = "'G x.(F ((x <= 1 -> a) /\\ y.(F (y <= 1 -> !b))))'";

}  // namespace

TEST_F(Cli, CheckExample1IsUnsat) {
  const Outcome r = tptlmon(std::string("check --spec ") + kExample1 + " --trace " + path("ex1.csv") +
                        " --oracle --table " + path("t.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(last_line(r.out), "RESULT: UNSAT");
  std::ifstream table(path("t.json"));
  std::stringstream got;
  got << table.rdbuf();
  std::ifstream golden(std::string(TPTL_GOLDEN_DIR) + "/example1_table.json");
  std::stringstream want;
  want << golden.rdbuf();
  EXPECT_EQ(got.str(), want.str());
}

TEST_F(Cli, CheckTrueIsSat) {
  const Outcome r = tptlmon("check --spec true --trace " + path("ex1.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "RESULT: SAT");
}

TEST_F(Cli, SpecFileAndJson) {
  std::ofstream(path("spec.tptl")) << "F (a /\\ b)\n";
  std::ofstream(path("t.json")) << R"([{"time":0,"state":["a"]},{"time":1,"state":["a","b"]}])";
  const Outcome r = tptlmon("check --spec-file " + path("spec.tptl") + " --trace " + path("t.json") +
                        " --format json");
  EXPECT_EQ(r.code, 0);
}

TEST_F(Cli, PredicateMap) {
  std::ofstream(path("sig.csv")) << "time,speed\n5,10\n6,60\n";
  std::ofstream(path("map.txt")) << "fast := speed > 50\n";
  const Outcome r = tptlmon("check --spec 'x.F (fast /\\ x <= 1)' --trace " + path("sig.csv") +
                        " --map " + path("map.txt") + " --normalize");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(tptlmon("check --spec 'F fast' --trace " + path("sig.csv") + " --map " + path("map.txt")).code, 2);
}

TEST_F(Cli, Errors) {
  EXPECT_EQ(tptlmon("check --spec 'x.(a U y.(b /\\ x <= 2))' --trace " + path("ex1.csv")).code, 2);
  EXPECT_EQ(tptlmon("check --spec 'a U' --trace " + path("ex1.csv")).code, 2);
  EXPECT_EQ(tptlmon("check --spec a --trace " + path("missing.csv")).code, 2);
  EXPECT_EQ(tptlmon("check --trace " + path("ex1.csv")).code, 2);
  EXPECT_EQ(tptlmon("check --spec a --spec-file x --trace " + path("ex1.csv")).code, 2);
  EXPECT_EQ(tptlmon("nonsense").code, 2);
  EXPECT_EQ(tptlmon("").code, 2);
}

TEST_F(Cli, NonEncapsulatedMessageNamesNode) {
  const std::string cmd = std::string(TPTLMON_PATH) + " check --spec 'x.(a U y.(b /\\ x <= 2))' --trace " +
                          path("ex1.csv") + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_TRUE(pipe);
  std::string out;
  char buf[512];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  pclose(pipe);
  EXPECT_NE(out.find("x <= 2"), std::string::npos) << out;
}

TEST_F(Cli, TranslateMtl) {
  Outcome r = tptlmon("translate-mtl --spec 'a U[1,2] b'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x1.(a U (x1 >= 1 /\\ x1 <= 2 /\\ b))\n");
  EXPECT_EQ(tptlmon("translate-mtl --spec 'F[0,5] a'").out, "x1.(true U (x1 >= 0 /\\ x1 <= 5 /\\ a))\n");
  EXPECT_EQ(tptlmon("translate-mtl --spec 'a U b'").out, "a U b\n");
  EXPECT_EQ(tptlmon("translate-mtl --spec 'a U[2,1] b'").code, 2);
}

TEST_F(Cli, GenTraceIsDeterministic) {
  EXPECT_EQ(tptlmon("gen-trace --len 30 --aps a,b --seed 9 --out " + path("1.csv")).code, 0);
  EXPECT_EQ(tptlmon("gen-trace --len 30 --aps a,b --seed 9 --out " + path("2.csv")).code, 0);
  std::ifstream a(path("1.csv")), b(path("2.csv"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(sa.str().substr(0, 9), "time,a,b\n");
  EXPECT_NE(tptlmon("gen-trace --len 30 --aps 3 --seed 10").out, tptlmon("gen-trace --len 30 --aps 3 --seed 9").out);
}

TEST_F(Cli, Bench) {
  const Outcome r = tptlmon("bench --group ur --ops 4 --vars 2 --len 40,80 --runs 3 --out " + path("b.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("T(80)/T(40)"), std::string::npos);
  std::ifstream csv(path("b.csv"));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "group,ops,vars,trace_len,runs,mean_s,var_s");
  EXPECT_EQ(tptlmon("bench --group ea --ops 2 --vars 4 --len 10").code, 2);
  EXPECT_EQ(tptlmon("bench --group zz --len 10").code, 2);
}

TEST_F(Cli, BenchAllConfigurations) {
  const Outcome r = tptlmon("bench --all --len 1000 --runs 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n') >= 19, true);
}
