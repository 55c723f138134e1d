#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SHORTCYCLE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("shortcycle_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("girth") {
  auto r = run("girth " + write_temp("tri", "digraph 3 3\n0 1\n1 2\n2 0\n"));
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["girth"] == 3);
  CHECK(j["certificate"]["vertices"] == nlohmann::json({0, 1, 2}));

  auto dag = run("girth " + write_temp("dag", "digraph 3 2\n0 1\n1 2\n"));
  REQUIRE(dag.status == 0);
  CHECK(nlohmann::json::parse(dag.out)["girth"] == "inf");
}

TEST_CASE("input errors exit 2") {
  CHECK(run("girth " + write_temp("bad", "digraf 3 0\n")).status == 2);
  CHECK(run("peel " + write_temp("sink", "digraph 2 1\n0 1\n")).status == 2);
  CHECK(run("girth /nonexistent/file").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("rainbow " + write_temp("short", "rainbow 3 2\n0-1\n1-2\n")).status == 2);
}

TEST_CASE("caps exit 3") {
  CHECK(run("verify --n 9 --generator labeled").status == 3);
}

TEST_CASE("verify and peel succeed") {
  auto v = run("verify --n 4 --checks two-phi,two-psi-strict");
  REQUIRE(v.status == 0);
  auto j = nlohmann::json::parse(v.out);
  CHECK(j["theorem_violations"] == 0);

  auto p = run("peel " + write_temp("bt", "digraph 3 6\n0 1\n1 0\n1 2\n2 1\n0 2\n2 0\n"));
  REQUIRE(p.status == 0);
  auto pj = nlohmann::json::parse(p.out);
  CHECK(pj["certificate"]["length"] == 2);
  CHECK(pj["trace"]["steps"][0]["removed"] == 0);
}

TEST_CASE("rainbow oracle") {
  auto none = run("rainbow --oracle " + write_temp("one", "rainbow 3 1\n0-1\n"));
  REQUIRE(none.status == 0);
  CHECK(nlohmann::json::parse(none.out)["rg"] == "inf");

  auto four = write_temp("four", "rainbow 4 4\n0-1\n0-2,1-2\n0-3,1-3\n2-3\n");
  auto r = run("rainbow " + four);
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["certificate"]["length"] <= 3);
  CHECK(nlohmann::json::parse(run("rainbow --oracle " + four).out)["rg"] == 3);
}

TEST_CASE("output is byte-stable across runs") {
  const std::string args = "verify --generator rainbow:200 --n 8 --n-min 4 --seed 17";
  auto a = run(args);
  auto b = run(args + " --jobs 3");
  REQUIRE(a.status == 0);
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  ja.erase("config");
  jb.erase("config");
  CHECK(ja == jb);
  CHECK(run(args).out == a.out);
}
