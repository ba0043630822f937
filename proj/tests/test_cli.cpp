#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int exit_code;
  std::string output;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(GRED_CHECK_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

fs::path temp_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "gredcheck-cli-tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

nlohmann::json load_json(const fs::path& p) {
  return nlohmann::json::parse(slurp(p));
}

}  // namespace

TEST_CASE("catalog list names every entry") {
  CmdResult r = run_cli("catalog list");
  CHECK(r.exit_code == 0);
  for (const char* name : {"sl2_k2", "sl2_k3", "sl2_k4", "so2_2v", "so3_2v",
                           "su2_quat"}) {
    CHECK(r.output.find(name) != std::string::npos);
  }
}

TEST_CASE("catalog run reports the split-form rank defect") {
  fs::path json = temp_dir() / "so3.json";
  CmdResult r =
      run_cli("--json " + json.string() + " catalog run so3_2v");
  CHECK(r.exit_code == 0);
  auto j = load_json(json);
  CHECK(j["g_reduced"]["value"] == "proved_no");
  CHECK(j["g_reduced"]["rule"] == "Q4-serre-necessary");
  CHECK(j["g_saturated"]["value"] == "proved_yes");
}

TEST_CASE("catalog run decides coreducedness by the radical reference") {
  fs::path json = temp_dir() / "k3.json";
  CmdResult r =
      run_cli("--json " + json.string() + " catalog run sl2_k3");
  CHECK(r.exit_code == 0);
  auto j = load_json(json);
  CHECK(j["g_reduced"]["value"] == "proved_yes");
  CHECK(j["g_reduced"]["rule"] == "Q0-radical-reference");
}

TEST_CASE("catalog run with --problem selects a bundled variant") {
  fs::path json = temp_dir() / "planes.json";
  CmdResult r = run_cli("--json " + json.string() +
                        " catalog run sl2_k4 --problem two_planes");
  CHECK(r.exit_code == 0);
  auto j = load_json(json);
  CHECK(j["g_saturated"]["value"] == "proved_no");
  CHECK(j["real"]["almost_k_reduced"]["value"] == "proved_no");
}

TEST_CASE("run a problem file with --check saturated") {
  fs::path prob = temp_dir() / "so2.prob";
  CmdResult ex = run_cli("catalog export so2_2v -o " + prob.string());
  REQUIRE(ex.exit_code == 0);
  fs::path json = temp_dir() / "so2.json";
  // global flags are accepted after the subcommand as well
  CmdResult r = run_cli("run " + prob.string() + " --check saturated --json " +
                        json.string());
  CHECK(r.exit_code == 0);
  auto j = load_json(json);
  CHECK(j["g_saturated"]["value"] == "proved_no");
  CHECK(j["g_saturated"]["rule"] == "R1-direct");
  CHECK(j["g_reduced"]["rule"] == "skipped");
  // the separating generator appears in the evidence
  bool found = false;
  for (const auto& e : j["g_saturated"]["evidence"]) {
    if (e["kind"] == "nonmember" && e["poly"] == "p1*q1") found = true;
  }
  CHECK(found);
}

TEST_CASE("a file without an ideal section exits with 2") {
  fs::path prob = temp_dir() / "empty.prob";
  spit(prob, "ring x y\n# nothing else\n");
  CmdResult r = run_cli("run " + prob.string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("a tiny budget exits with 3 and reports unknowns") {
  fs::path prob = temp_dir() / "sl2k4.prob";
  REQUIRE(run_cli("catalog export sl2_k4 -o " + prob.string()).exit_code == 0);
  fs::path json = temp_dir() / "sl2k4.json";
  CmdResult r = run_cli("--budget 10 --json " + json.string() + " run " +
                        prob.string());
  CHECK(r.exit_code == 3);
  auto j = load_json(json);
  CHECK(j["budget_exhausted"] == true);
  CHECK(j["g_saturated"]["value"] == "unknown");
  CHECK(j["g_reduced"]["value"] == "unknown");
}

TEST_CASE("export round-trips byte for byte") {
  fs::path a = temp_dir() / "k3_a.prob";
  fs::path b = temp_dir() / "k3_b.prob";
  REQUIRE(run_cli("catalog export sl2_k3 -o " + a.string()).exit_code == 0);
  // run the exported file, then re-export and compare bytes
  CmdResult r = run_cli("run " + a.string());
  CHECK(r.exit_code == 0);
  REQUIRE(run_cli("catalog export sl2_k3 -o " + b.string()).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("identical runs produce identical JSON apart from timings") {
  fs::path j1 = temp_dir() / "det1.json";
  fs::path j2 = temp_dir() / "det2.json";
  REQUIRE(run_cli("--all-rules --json " + j1.string() +
                  " catalog run sl2_k4").exit_code == 0);
  REQUIRE(run_cli("--all-rules --json " + j2.string() +
                  " catalog run sl2_k4").exit_code == 0);
  auto a = load_json(j1);
  auto b = load_json(j2);
  a.erase("timings");
  b.erase("timings");
  CHECK(a == b);
}

TEST_CASE("direct engine subcommands") {
  fs::path in = temp_dir() / "gb.in";
  spit(in, "ring x y\nideal I\n  x^2 - 1\n  x^3 - 1\nend\n");

  CmdResult gb = run_cli("--order lex gb " + in.string());
  CHECK(gb.exit_code == 0);
  CHECK(gb.output.find("x - 1") != std::string::npos);

  // x is pinned to 1 while y stays free
  CmdResult dim = run_cli("dim " + in.string());
  CHECK(dim.exit_code == 0);
  CHECK(dim.output.find("dim = 1") != std::string::npos);

  CmdResult mem = run_cli("member " + in.string() + " --poly \"x - 1\"");
  CHECK(mem.exit_code == 0);
  CHECK(mem.output.find("true") != std::string::npos);

  fs::path in2 = temp_dir() / "rad.in";
  spit(in2, "ring x y\nideal I\n  x^2\nend\n");
  CmdResult rad = run_cli("radmember " + in2.string() + " --poly x");
  CHECK(rad.exit_code == 0);
  CHECK(rad.output.find("true") != std::string::npos);
  CmdResult mem2 = run_cli("member " + in2.string() + " --poly x");
  CHECK(mem2.exit_code == 0);
  CHECK(mem2.output.find("false") != std::string::npos);

  // budget exhaustion surfaces as exit code 3 here too
  fs::path hard = temp_dir() / "hard.in";
  spit(hard,
       "ring x y z\nideal I\n  x^2 - y*z\n  y^3 - x*z + 1\n  z^2*x - y\nend\n");
  CmdResult over = run_cli("--budget 3 gb " + hard.string());
  CHECK(over.exit_code == 3);
}

TEST_CASE("errors exit with 2") {
  CHECK(run_cli("catalog run nosuch_entry").exit_code == 2);
  CHECK(run_cli("run /nonexistent/path.prob").exit_code == 2);
  fs::path in = temp_dir() / "badpoly.in";
  spit(in, "ring x\nideal I\n  x\nend\n");
  CHECK(run_cli("member " + in.string() + " --poly \"y + 1\"").exit_code == 2);
}
