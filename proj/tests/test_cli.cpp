#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::vector<json> lines;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(YBPA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf;
  size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::istringstream is(r.out);
  for (std::string line; std::getline(is, line);)
    if (!line.empty() && line[0] == '{') r.lines.push_back(json::parse(line));
  return r;
}

std::string tangle(const std::string& name) { return std::string(YBPA_SOURCE_DIR) + "/tangles/" + name; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ybpa-cli-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST(Cli, TangleExamples) {
  auto id = cli("tangle " + tangle("identity.tangle"));
  ASSERT_EQ(id.code, 0);
  ASSERT_EQ(id.lines.size(), 1u);
  EXPECT_EQ(id.lines[0]["terms"], json({{"1", "1"}}));
  EXPECT_EQ(id.lines[0]["strands"], 2);

  auto capped = cli("tangle " + tangle("capped_s.tangle"));
  ASSERT_EQ(capped.code, 0);
  EXPECT_TRUE(capped.lines[0]["terms"].empty());
  EXPECT_EQ(capped.lines[0]["element"], "0");

  auto loop = cli("tangle " + tangle("loop.tangle"));
  ASSERT_EQ(loop.code, 0);
  EXPECT_EQ(loop.lines[0]["terms"], json({{"1", "delta"}}));
  auto tl = cli("tangle " + tangle("loop.tangle") + " --algebra TL --param delta=5/2");
  EXPECT_EQ(tl.lines[0]["terms"], json({{"1", "5/2"}}));
  EXPECT_EQ(tl.lines[0]["algebra"], "TL");
  // FC loops weigh gamma^2.
  auto fc = cli("tangle " + tangle("loop.tangle") + " --algebra FC --param gamma=3");
  EXPECT_EQ(fc.lines[0]["terms"], json({{"1", "9"}}));
}

TEST(Cli, TanglePayloadConstants) {
  TempDir dir;
  fs::path f = dir.path / "k.tangle";
  std::ofstream(f) << "strands 2\nbox 1 k*e + s\n";
  auto r = cli("tangle " + f.string() + " --param k=7/3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.lines[0]["terms"], json({{"e1", "7/3"}, {"s1", "1"}}));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("dims --mode fast").code, 2);
  EXPECT_EQ(cli("dims --param eps=2").code, 2);
  EXPECT_EQ(cli("dims --param delta").code, 2);
  EXPECT_EQ(cli("dims --param frob=1").code, 2);
  EXPECT_EQ(cli("dims --algebra Temperley").code, 2);
  EXPECT_EQ(cli("verify-baxter --algebra BMW --param tau=2").code, 2);
  EXPECT_EQ(cli("transfer --mode randomized --algebra Liu --n 4").code, 2);
  EXPECT_EQ(cli("tangle /nonexistent/file").code, 2);
  TempDir dir;
  fs::path bad = dir.path / "bad.tangle";
  std::ofstream(bad) << "strands 2\nbox 2 s\n";
  EXPECT_EQ(cli("tangle " + bad.string()).code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, ReportShape) {
  auto r = cli("dims --algebra TL,FC --n 3");
  ASSERT_EQ(r.code, 0);
  ASSERT_EQ(r.lines.size(), 7u);
  for (size_t i = 0; i + 1 < r.lines.size(); ++i) {
    const auto& e = r.lines[i];
    EXPECT_EQ(e["type"], "check");
    EXPECT_EQ(e["status"], "pass");
    EXPECT_EQ(e["residual"], 0.0);
    EXPECT_TRUE(e.contains("id") && e.contains("seconds") && e.contains("algebra"));
  }
  EXPECT_EQ(r.lines[2]["id"], "dims/TL/n=3");
  const auto& s = r.lines.back();
  EXPECT_EQ(s["type"], "summary");
  EXPECT_EQ(s["status"], "pass");
  EXPECT_EQ(s["checks"], 6);
  EXPECT_EQ(s["config"]["algebra"], json({"TL", "FC"}));
  EXPECT_EQ(s["config"]["n"], 3);
  EXPECT_TRUE(s.contains("version"));
}

TEST(Cli, FailingCheckExitsOne) {
  // gamma = 1 puts delta on the pole of the FC Baxterisation.
  auto r = cli("verify-baxter --algebra FC --param gamma=1");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.lines.back()["status"], "fail");
  EXPECT_FALSE(r.lines.back()["failed"].empty());
}

TEST(Cli, ConfigFileAndPrecedence) {
  TempDir dir;
  fs::path cfg = dir.path / "run.toml";
  std::ofstream(cfg) << "algebra = [\"TL\"]\nn = 4\nparam = [\"delta=3\"]\n";
  auto r = cli("dims --config " + cfg.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.lines.back()["checks"], 4);
  EXPECT_EQ(r.lines.back()["config"]["params"]["delta"], "3");
  auto o = cli("dims --config " + cfg.string() + " --n 2");
  EXPECT_EQ(o.lines.back()["checks"], 2);
  std::ofstream(dir.path / "bad.toml") << "nonsense_key = 1\n";
  EXPECT_EQ(cli("dims --config " + (dir.path / "bad.toml").string()).code, 2);
}

TEST(Cli, ReproducibleWithoutTiming) {
  std::string args = "transfer --mode randomized --algebra TL --n 3 --samples 3 --seed 11 --no-timing";
  auto a = cli(args), b = cli(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed=11"), std::string::npos);
  EXPECT_EQ(a.out.find("seconds"), std::string::npos);
  auto c = cli("transfer --mode randomized --algebra TL --n 3 --samples 3 --seed 12 --no-timing");
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, CacheDirectoryAndOutFile) {
  TempDir dir;
  std::string cache = (dir.path / "cache").string(), out = (dir.path / "r.jsonl").string();
  auto first = cli("dims --algebra Liu --n 3 --no-timing --cache-dir " + cache + " --out " + out);
  ASSERT_EQ(first.code, 0);
  EXPECT_TRUE(first.out.empty());
  std::ifstream in(out);
  std::string report((std::istreambuf_iterator<char>(in)), {});
  int files = 0;
  for (auto& e : fs::directory_iterator(cache)) files += e.path().extension() == ".json";
  EXPECT_EQ(files, 4);
  // Second run reads the cache and reports the same thing.
  auto second = cli("dims --algebra Liu --n 3 --no-timing --cache-dir " + cache);
  EXPECT_EQ(second.out, report);
}
