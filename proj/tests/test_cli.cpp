// Runs the hcube executable and checks exit codes and reports.

#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HCUBE_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json report(const Run& r) { return nlohmann::json::parse(r.out); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hcube_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenIsDeterministic) {
  ASSERT_EQ(run("gen --domain Dn --n 2 --r 3 --scheme random --seed 9 --out " + path("a.txt")).code, 0);
  ASSERT_EQ(run("gen --domain Dn --n 2 --r 3 --scheme random --seed 9 --out " + path("b.txt")).code, 0);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
  ASSERT_EQ(run("gen --domain Dn --n 2 --r 3 --scheme constant --out " + path("c.txt")).code, 0);
  EXPECT_NE(slurp(path("c.txt")).find("colors 16\n0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"), std::string::npos);
  EXPECT_EQ(run("gen --domain Qn --n 2").code, 2);
  EXPECT_EQ(run("gen --domain Dn --n 0").code, 2);
}

TEST_F(Cli, DetectExitCodes) {
  run("gen --domain Dn --n 2 --r 1 --scheme constant --out " + path("d2.txt"));
  const auto found = run("detect " + path("d2.txt") + " --structure corner");
  ASSERT_EQ(found.code, 0);
  const auto j = report(found);
  EXPECT_EQ(j["outcome"], "found");
  EXPECT_EQ(j["witness"]["color"], 0);

  run("gen --domain Dn --n 1 --r 1 --scheme constant --out " + path("d1.txt"));
  const auto none = run("detect " + path("d1.txt") + " --structure corner");
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(report(none)["outcome"], "none");

  std::string text = slurp(path("d2.txt"));
  std::ofstream(path("trunc.txt")) << text.substr(0, text.size() - 6);
  EXPECT_EQ(run("detect " + path("trunc.txt")).code, 2);
  EXPECT_EQ(run("detect " + path("missing.txt")).code, 2);
  EXPECT_EQ(run("detect " + path("d2.txt") + " --structure hjline3").code, 2);

  run("gen --domain alph4 --n 2 --r 1 --scheme constant --out " + path("a4.txt"));
  EXPECT_EQ(run("detect " + path("a4.txt") + " --structure hjline4").code, 0);
  run("gen --domain grid --A 1 2 3 --B 1 2 3 --r 1 --scheme constant --out " + path("g.txt"));
  EXPECT_EQ(run("detect " + path("g.txt") + " --structure corner").code, 0);
  run("gen --domain segments --n 3 --r 1 --scheme constant --out " + path("s.txt"));
  EXPECT_EQ(run("detect " + path("s.txt") + " --structure coplanar6").code, 0);
}

TEST_F(Cli, Extract) {
  run("gen --domain Dn --n 3 --r 1 --scheme constant --out " + path("d3.txt"));
  const auto greedy = run("extract " + path("d3.txt") + " --r 1 --m 1 --mode greedy");
  ASSERT_EQ(greedy.code, 0);
  EXPECT_TRUE(report(greedy)["trace"].contains("witness"));

  run("gen --domain grid --A 1 2 3 4 --B 1 2 3 4 --r 1 --scheme constant --out " + path("g.txt"));
  const auto grid = run("extract " + path("g.txt"));
  ASSERT_EQ(grid.code, 0);
  EXPECT_GT(report(grid)["trace"]["witness"]["d"].get<int>(), 0);

  run("gen --domain Dn --n 4 --r 2 --scheme random --seed 1 --out " + path("d4.txt"));
  const auto faithful = run("extract " + path("d4.txt") + " --m 1 --mode faithful");
  EXPECT_EQ(faithful.code, 1);
  const auto jf = report(faithful);
  EXPECT_EQ(jf["trace"]["failure"]["code"], "GuaranteeViolated");
  const std::string msg = jf["trace"]["failure"]["message"];
  EXPECT_NE(msg.find('/'), std::string::npos);
  EXPECT_EQ(run("extract " + path("d4.txt") + " --mode sloppy").code, 2);
}

TEST_F(Cli, Gp) {
  const auto ok = run("gp --N 27000 --r 1");
  ASSERT_EQ(ok.code, 0);
  const auto j = report(ok);
  EXPECT_EQ(j["n_achieved"], 3);
  const auto& terms = j["witness"]["terms"];
  ASSERT_EQ(terms.size(), 3u);
  for (const auto& t : terms) EXPECT_LE(std::stoll(t.get<std::string>()), 27000);
  EXPECT_EQ(run("gp --N 7").code, 2);
  EXPECT_EQ(run("gp --N 5000 --r 2 --seed 3").out, run("gp --N 5000 --r 2 --seed 3").out);

  run("gen --domain interval --N 300 --r 1 --scheme constant --out " + path("i.txt"));
  const auto from_file = run("gp --coloring " + path("i.txt"));
  EXPECT_EQ(from_file.code, 0);
  EXPECT_EQ(report(from_file)["n_achieved"], 2);
}

TEST_F(Cli, SearchAndCertificateReplay) {
  const auto s = run("search --domain Dn --n 1 --r 2 --target corner --certificate " + path("cert.txt"));
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(report(s)["outcome"]["status"], "AvoidanceFound");
  EXPECT_EQ(run("detect " + path("cert.txt") + " --structure corner").code, 1);

  const auto s2 = run("search --domain Dn --n 2 --r 2 --target corner --certificate " + path("cert2.txt"));
  if (s2.code == 0) {
    EXPECT_EQ(run("detect " + path("cert2.txt") + " --structure corner").code, 1);
  } else {
    EXPECT_EQ(s2.code, 1);
  }
  EXPECT_EQ(run("search --domain Dn --n 2 --r 2 --target corner --budget 0").code, 3);
  EXPECT_EQ(run("search --domain alph3 --n 2 --target coplanar6").code, 2);
  EXPECT_EQ(run("ramsey --r 1 --target corner --n-max 3").code, 0);
}

TEST_F(Cli, TimingIsOptIn) {
  EXPECT_FALSE(report(run("gp --N 300 --r 1")).contains("wall_time_us"));
  EXPECT_TRUE(report(run("--timing gp --N 300 --r 1")).contains("wall_time_us"));
}
