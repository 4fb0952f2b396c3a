#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args, bool merge_stderr = true) {
  std::string cmd = std::string(FUSIONKIT_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  Run r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("table output") {
  Run t1 = run("table table1 --format csv");
  CHECK(t1.code == 0);
  CHECK(has(t1, "E_8,28,"));
  CHECK(has(t1, ",1240,2^3 5^1 31^1,"));
  CHECK(has(t1, ",63136,2^5 1973^1,ok"));
  Run d9 = run("table table4 --graph D_9 --group --format md");
  CHECK(d9.code == 0);
  CHECK(has(d9, "8 193 | 622"));
  CHECK(has(d9, "\\|E\\|"));
  Run e21 = run("table table5 --graph E_21");
  CHECK(has(e21, "24(18+10√3+√(6(97+56√3)))"));
  CHECK(has(e21, "480701952"));
  Run js = run("table table3 --format json");
  CHECK(js.code == 0);
  CHECK_NOTHROW(nlohmann::json::parse(js.out));
  // D_9^t data is missing its conjugate companions and disagrees on r_O, so strict mode fails
  Run strict = run("table table5 --strict");
  CHECK(strict.code == 1);
  CHECK(has(strict, "unavailable"));
  CHECK(run("table table1 --strict").code == 0);
  CHECK(run("table table9").code != 0);
}

TEST_CASE("check suites") {
  Run d = run("check discriminant");
  CHECK(d.code == 0);
  CHECK(has(d, "PASS sl2 A_11: D = 10567230160896"));
  CHECK(!has(d, "FAIL"));
  Run f = run("check formulas --algebra sl3 --graph A_3");
  CHECK(f.code == 0);
  CHECK(has(f, "PASS sl3 A_3"));
  CHECK(has(f, "d_H"));
  Run q = run("check rigidity -q");
  CHECK(q.code == 0);
  CHECK(!has(q, "PASS "));
  CHECK(run("check trig").code == 0);
  CHECK(run("check nosuch").code != 0);
}

TEST_CASE("split") {
  Run d6 = run("split D_6");
  CHECK(d6.code == 0);
  CHECK(has(d6, "r_O = 12"));
  CHECK(has(d6, "blocks {1×8, 2×1}"));
  CHECK(has(d6, "verify_splitting: ok"));
  Run tight = run("split E_9 --algebra sl3 --budget 100");
  CHECK(tight.code == 2);
  CHECK(has(tight, "budget exhausted"));
  CHECK(has(tight, "residual"));
}

TEST_CASE("split JSON is deterministic and round-trips") {
  auto dir = std::filesystem::temp_directory_path();
  std::string a = (dir / "fk_cli_a.json").string(), b = (dir / "fk_cli_b.json").string();
  REQUIRE(run("split E_6 --out " + a).code == 0);
  REQUIRE(run("split E_6 --out " + b).code == 0);
  std::string sa = slurp(a);
  CHECK(sa == slurp(b));
  auto j = nlohmann::json::parse(sa);
  CHECK(j["r_O"] == 12);
  CHECK(j["family"].size() == 12);
  CHECK(j.dump(1) + "\n" == sa);
  Run out = run("split E_6 --out -", false);
  CHECK(out.out == sa);
}

TEST_CASE("graph show") {
  Run g = run("graph show E_5 --algebra sl3 --qdims");
  CHECK(g.code == 0);
  CHECK(has(g, "r_E=12"));
  Run j = run("graph show E_6 --json");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["name"] == "E_6");
  Run missing = run("graph show E_9/3 --algebra sl3");
  CHECK(missing.code != 0);
  CHECK(has(missing, "graph data unavailable"));
}
