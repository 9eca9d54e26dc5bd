#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eqdom/report.hpp"

using eqdom::json;

namespace {

struct run_result {
  std::string out;
  std::string err;
  int status = -1;
  std::vector<json> reports;
};

std::string sample(const std::string& name) { return std::string(EQDOM_SAMPLES) + "/" + name; }

run_result run(const std::string& args) {
  const std::string err_path = testing::TempDir() + "eqdom_cli_stderr.txt";
  const std::string cmd = std::string(EQDOM_CLI) + " " + args + " 2>" + err_path;
  run_result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, k);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream e(err_path);
  std::ostringstream ss;
  ss << e.rdbuf();
  r.err = ss.str();
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    r.reports.push_back(json::parse(line));
    EXPECT_FALSE(eqdom::schema_problem(r.reports.back())) << line;
  }
  return r;
}

}  // namespace

TEST(Cli, Recognize) {
  auto c4 = run("recognize --class B " + sample("c4.txt"));
  EXPECT_EQ(c4.status, 0);
  ASSERT_EQ(c4.reports.size(), 1u);
  EXPECT_EQ(c4.reports[0]["member"], true);
  EXPECT_EQ(c4.reports[0]["class"], "B");

  auto p6 = run("recognize --class Cgb " + sample("p6.txt"));
  EXPECT_EQ(p6.status, 0);
  ASSERT_EQ(p6.reports.size(), 1u);
  EXPECT_EQ(p6.reports[0]["member"], false);
  EXPECT_EQ(p6.reports[0]["certificate"]["kind"], "violated_condition");
  EXPECT_EQ(p6.reports[0]["stats"]["elapsed_ms"], 0);

  auto bad = run("recognize --class B " + sample("malformed.txt"));
  EXPECT_EQ(bad.status, 2);
  EXPECT_TRUE(bad.reports.empty());
  EXPECT_NE(bad.err.find("ParseError"), std::string::npos);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos);

  EXPECT_EQ(run("recognize --class X " + sample("c4.txt")).status, 2);
  EXPECT_EQ(run("recognize --class B /nonexistent/file").status, 2);
}

TEST(Cli, Oracle) {
  auto r = run("oracle " + sample("k2.txt") + " " + sample("c4.txt"));
  EXPECT_EQ(r.status, 0);
  ASSERT_EQ(r.reports.size(), 2u);
  EXPECT_EQ(r.reports[0]["details"]["gamma"]["value"], 1);
  EXPECT_EQ(r.reports[1]["details"]["gamma"]["value"], 2);
  EXPECT_EQ(r.reports[1]["details"]["beta"]["value"], 2);
  EXPECT_EQ(r.reports[1]["details"]["alpha"]["value"], 2);
  EXPECT_EQ(r.reports[1]["member"], true);

  auto big = run("oracle " + sample("p30.txt"));
  EXPECT_EQ(big.status, 2);
  EXPECT_NE(big.err.find("SizeCapExceeded"), std::string::npos);
  auto capped = run("oracle --cap 30 " + sample("p30.txt"));
  EXPECT_EQ(capped.status, 0);
  ASSERT_EQ(capped.reports.size(), 1u);
  EXPECT_EQ(capped.reports[0]["details"]["gamma"]["value"], 10);
}

TEST(Cli, Tree) {
  auto a = run("tree gen --steps 5 --seed 7");
  auto b = run("tree gen --steps 5 --seed 7");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  ASSERT_EQ(a.reports.size(), 1u);
  EXPECT_EQ(a.reports[0]["member"], true);

  auto p7 = run("tree check " + sample("p7.txt"));
  EXPECT_EQ(p7.status, 0);
  ASSERT_EQ(p7.reports.size(), 1u);
  EXPECT_EQ(p7.reports[0]["member"], true);
  EXPECT_EQ(p7.reports[0]["class"], "Tmax");

  auto p6 = run("tree deconstruct " + sample("p6.txt"));
  EXPECT_EQ(p6.status, 0);
  ASSERT_EQ(p6.reports.size(), 1u);
  EXPECT_EQ(p6.reports[0]["member"], false);

  EXPECT_EQ(run("tree check " + sample("c4.txt")).status, 2);
}

TEST(Cli, Grid) {
  auto r = run("grid --exact " + sample("hash.grid") + " " + sample("plus.grid") + " " + sample("comb.grid"));
  EXPECT_EQ(r.status, 0);
  ASSERT_EQ(r.reports.size(), 3u);
  for (const auto& j : r.reports) EXPECT_EQ(j["member"], true);
  EXPECT_EQ(r.reports[0]["details"]["patrolling"]["value"], 2);

  auto dec = run("grid " + sample("decimal.grid"));
  EXPECT_EQ(dec.status, 0);
  ASSERT_EQ(dec.reports.size(), 1u);

  auto bad = run("grid " + sample("overlap.grid"));
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("CollinearOverlap"), std::string::npos);
  EXPECT_NE(bad.err.find("line 1"), std::string::npos);
}

TEST(Cli, Bench) {
  auto one = run("bench --sizes 16");
  EXPECT_EQ(one.status, 0);
  ASSERT_EQ(one.reports.size(), 1u);
  EXPECT_EQ(one.reports[0]["member"], true);
  EXPECT_EQ(one.reports[0]["stats"]["pair_checks"], 14);

  auto three = run("bench --sizes 16,64,256");
  ASSERT_EQ(three.reports.size(), 3u);
  for (std::size_t i = 1; i < 3; ++i) {
    const double ratio = three.reports[i]["stats"]["pair_checks"].get<double>() /
                         three.reports[i - 1]["stats"]["pair_checks"].get<double>();
    EXPECT_GE(ratio, 8.0);
    EXPECT_LE(ratio, 32.0);
  }

  auto small = run("bench --sizes 8");
  EXPECT_EQ(small.status, 2);
  EXPECT_NE(small.err.find("TooSmall"), std::string::npos);
}

TEST(Cli, JobsKeepInputOrder) {
  const std::string files = sample("c4.txt") + " " + sample("p6.txt") + " " + sample("p7.txt") + " " + sample("k2.txt");
  auto serial = run("recognize --class Cgb " + files);
  auto parallel = run("recognize --class Cgb --jobs 3 " + files);
  EXPECT_EQ(serial.status, 0);
  EXPECT_EQ(serial.out, parallel.out);
  ASSERT_EQ(serial.reports.size(), 4u);
  EXPECT_EQ(serial.reports[1]["member"], false);
}
