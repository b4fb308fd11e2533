#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AXIAL_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / "axial_cli_test";
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli: make then analyze U_3") {
  TempDir t;
  REQUIRE(run("make U --n 3 --lambda 3 --out " + t.file("u3.json")).code == 0);
  const Run r = run("analyze " + t.file("u3.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "all 3 basis axes verified; flexible; Frobenius OK"));

  REQUIRE(run("make U --n 4 --lambda 1/3 --field Fp:7 --out " + t.file("u4.json")).code == 0);
  CHECK(contains(run("analyze " + t.file("u4.json")).out, "all 4 basis axes verified; flexible; Frobenius OK"));
}

TEST_CASE("cli: idempotent count of the exceptional algebra over F_7") {
  TempDir t;
  REQUIRE(run("make exc3 --field Fp:7 --lambda 3 --out " + t.file("e.json")).code == 0);
  const Run r = run("analyze --idempotents " + t.file("e.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "idempotents: 16 (exhaustive search)"));
  CHECK(contains(r.out, "closed-form list agrees with the search"));

  const Run j = run("analyze --idempotents --json " + t.file("e.json"));
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["idempotents"]["count"] == 16);
  CHECK(doc["idempotents"]["case"] == "NoncommExc3");
  CHECK(run("analyze --idempotents --json " + t.file("e.json")).out == j.out);
}

TEST_CASE("cli: corrupted tables exit 1 with a witness") {
  TempDir t;
  REQUIRE(run("make exc3 --field Fp:7 --lambda 3 --out " + t.file("e.json")).code == 0);
  std::string text = slurp(t.file("e.json"));
  const std::string row = R"([[[0,"1"]],[[2,"3"]],[[2,"3"]]])";
  REQUIRE(contains(text, row));
  text.replace(text.find(row), row.size(), R"([[[0,"1"]],[[2,"3"]],[[2,"4"]]])");
  std::ofstream(t.file("bad.json")) << text;
  Run r = run("analyze " + t.file("bad.json"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "VIOLATION: flexible law fails on (a, a, b)"));

  // Flexible, but the generators break fusion.
  REQUIRE(run("make B --lambda 2 --phi 3/2 --out " + t.file("b.json")).code == 0);
  r = run("analyze " + t.file("b.json"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "fusion rules fail"));
}

TEST_CASE("cli: input errors exit 2") {
  TempDir t;
  CHECK(run("analyze " + t.file("missing.json")).code == 2);
  CHECK(run("make Z").code == 2);
  CHECK(run("make U --lambda 1").code == 2);
  CHECK(run("frobenius").code == 2);
  std::ofstream(t.file("syntax.json")) << "{\"field\": {\"kind\": \"Q\"},\n \"dim\": 1 \"basis\": [\"e\"]}";
  Run r = run("analyze " + t.file("syntax.json"));
  CHECK(r.code == 2);
  CHECK(contains(r.out, "line 2, column 17"));
  std::ofstream(t.file("extra.json"))
      << R"({"field":{"kind":"Q"},"dim":1,"basis":["e"],"table":[[[[0,"1"]]]],"comment":"x"})";
  r = run("analyze " + t.file("extra.json"));
  CHECK(r.code == 2);
  CHECK(contains(r.out, "unknown field \"comment\""));
}

TEST_CASE("cli: make output is canonical and deterministic") {
  TempDir t;
  const Run a = run("make B --lambda 1/2 --phi 2");
  CHECK(a.code == 0);
  CHECK(run("make B --lambda 1/2 --phi 2").out == a.out);
  std::ofstream(t.file("b.json")) << a.out;
  CHECK(run("analyze " + t.file("b.json")).code == 0);
}

TEST_CASE("cli: decompose, frobenius, graph, idempotents") {
  TempDir t;
  REQUIRE(run("make B --field Fp:7 --lambda 2 --phi 1 --out " + t.file("b21.json")).code == 0);
  Run r = run("decompose " + t.file("b21.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "component 0: type {2}"));

  r = run("frobenius --json " + t.file("b21.json"));
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["frobenius"]["cases"][0] == "CaseII_lambda");

  r = run("idempotents " + t.file("b21.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "idempotents: 8"));

  REQUIRE(run("make B --lambda 1/2 --phi 2 --out " + t.file("bh.json")).code == 0);
  r = run("graph --max-depth 2 " + t.file("bh.json"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph axial {", 0) == 0);
  r = run("graph --max-depth 2 --out " + t.file("g.dot") + " " + t.file("bh.json"));
  CHECK(r.out.empty());
  CHECK(contains(slurp(t.file("g.dot")), "v0 -- v1"));
}
