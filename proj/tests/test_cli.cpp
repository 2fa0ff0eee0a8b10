#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

const std::string cli = THETALAB_CLI;
const std::string data = THETALAB_EXAMPLES;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string file(const std::string& name) { return "'" + data + "/" + name + "'"; }

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "thetalab_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST(Cli, CheckThetaOnCycle) {
  auto r = run("check-theta " + file("cycle.txt") + " --a 1 --b 1 --c 1");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["schema"], "thetalab.report/1");
  EXPECT_EQ(j["command"], "check-theta");
  EXPECT_EQ(j["result"]["found"], false);
}

TEST(Cli, CheckThetaOnK23) {
  auto r = run("check-theta " + file("k23.txt") + " --a 4 --b 4 --c 4");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["result"]["found"], true);
  EXPECT_FALSE(j["certificates"].empty());
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run("check-theta " + file("malformed.txt") + " --a 1 --b 1 --c 1").code, 3);
  EXPECT_EQ(run("check-theta " + file("missing.txt") + " --a 1 --b 1 --c 1").code, 3);
  EXPECT_EQ(run("no-such-command").code, 3);
  EXPECT_EQ(run("find-pattern " + file("w5.txt") + " --pattern X --t 3").code, 3);
}

TEST(Cli, Bond3OnK4Star) {
  auto r = run("bond3 " + file("k4.txt") + " --edges 0 1 2");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["result"]["bond"], true);
  EXPECT_EQ(j["result"]["t"], 7);
}

TEST(Cli, OutputIsByteIdentical) {
  std::string args = "find-pattern " + file("w5.txt") + " --pattern W --t 5";
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto p = run("gen-phi --r 3 --s 4 --seed 5"), q = run("gen-phi --r 3 --s 4 --seed 5");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, q.out);
}

TEST(Cli, VerifyRoundTrip) {
  std::string rep = tmp("omega.json");
  auto r = run("--report '" + rep + "' omega " + file("w5.txt") + " --circlet \"1,2,3,4\"");
  ASSERT_TRUE(r.code == 0 || r.code == 1) << r.code;
  auto v = run("verify " + file("w5.txt") + " '" + rep + "'");
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(parse(v)["result"]["valid"], true);

  std::string gp = tmp("phi.json");
  ASSERT_EQ(run("--report '" + gp + "' gen-phi --r 3 --s 4 --seed 2").code, 0);
  EXPECT_EQ(run("verify '" + gp + "'").code, 0);
}

TEST(Cli, VerifyDetectsTampering) {
  std::string rep = tmp("theta.json");
  ASSERT_EQ(run("--report '" + rep + "' check-theta " + file("k23.txt") + " --a 4 --b 4 --c 4").code, 0);
  nlohmann::json j;
  std::ifstream(rep) >> j;
  ASSERT_FALSE(j["certificates"].empty());
  j["certificates"][0]["thresholds"] = {100, 100, 100};
  std::ofstream(rep) << j.dump(2);
  auto v = run("verify " + file("k23.txt") + " '" + rep + "'");
  EXPECT_EQ(v.code, 1);
}

TEST(Cli, BudgetEnvironment) {
  std::string args = "check-theta " + file("petersen.txt") + " --a 3 --b 3 --c 3";
  auto r = run(args, "THETALAB_BUDGET=5");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(parse(r)["result"]["status"], "unknown");
  EXPECT_EQ(run(args, "THETALAB_BUDGET=abc").code, 3);
}

TEST(Cli, DecomposeAndClassify) {
  auto d = run("decompose " + file("w5.txt") + " --mode chain --edge 1 2");
  EXPECT_EQ(d.code, 0);
  auto c = run("classify " + file("cycle.txt") + " --variant 12t --t 2");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(parse(c)["result"]["outcome"], "in_class");
}
