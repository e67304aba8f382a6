#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "affsym/cache.hpp"
#include "affsym/report.hpp"

using namespace affsym;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(AFFSYM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

json load_schema(const std::string& name) {
  std::ifstream in(std::string(AFFSYM_SCHEMA_DIR) + "/" + name);
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("single assf rows") {
  auto r = run_cli("assf --family B --n 3 --word 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "F[0] = m[1]\n");

  auto id = run_cli("assf --family B --n 3 --word \"\"");
  CHECK(id.exit_code == 0);
  CHECK(id.out == "F[] = 1\n");

  auto commas = run_cli("assf --family B --n 3 --word 2,0");
  CHECK(commas.out.find("2*m[1,1]") != std::string::npos);
}

TEST_CASE("byte identical reruns") {
  auto a = run_cli("assf --family B --n 3 --all --dual");
  auto b = run_cli("assf --family B --n 3 --all --dual");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  auto c = run_cli("zdump --family B --n 3");
  auto d = run_cli("zdump --family B --n 3");
  CHECK(c.out == d.out);
}

TEST_CASE("json output matches the shipped schemas") {
  auto r = run_cli("assf --family B --n 3 --all --dual --format json");
  REQUIRE(r.exit_code == 0);
  json out = json::parse(r.out);
  std::string err;
  CHECK(json_matches_schema(out, load_schema("assf_rows.schema.json"), &err));
  CAPTURE(err);
  json sf_schema = load_schema("symfunc.schema.json");
  REQUIRE(out["rows"].is_array());
  CHECK(out["rows"].size() == 9);
  for (auto& row : out["rows"]) {
    CHECK(json_matches_schema(row["assf"], sf_schema, &err));
    CHECK(json_matches_schema(row["dual"], sf_schema, &err));
  }

  auto v = run_cli("verify relations --family B --n 3 --format json");
  REQUIRE(v.exit_code == 0);
  json rep = json::parse(v.out);
  CHECK(json_matches_schema(rep, load_schema("verify_report.schema.json"), &err));
}

TEST_CASE("exit code contract") {
  // 0: pass
  CHECK(run_cli("verify typefree --family B --n 3").exit_code == 0);
  // 1: check failure (bare A_{s_2} is not in the subalgebra)
  auto fail = run_cli("verify membership --element 2 --family B --n 3");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);
  CHECK(fail.out.find("witness") != std::string::npos);
  // 2: usage errors
  CHECK(run_cli("verify nosuchsuite --family B --n 3").exit_code == 2);
  CHECK(run_cli("assf --family B --n 3 --word 9").exit_code == 2);
  CHECK(run_cli("assf --family E --n 3 --word 0").exit_code != 0);
  CHECK(run_cli("assf --family A --n 2 --word 0 --dual").exit_code == 2);
  CHECK(run_cli("pieri --family D --n 4 --i 3 --word \"\"").exit_code == 2);
}

TEST_CASE("pieri expansions") {
  auto r = run_cli("pieri --family B --n 3 --i 1 --word 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2 * xi[2 0]\n");

  auto rho = run_cli("pieri --family D --n 4 --i 3 --word \"\" --rho1");
  CHECK(rho.exit_code == 0);
  CHECK(rho.out == "xi[4 2 0]\n");

  auto id = run_cli("pieri --family B --n 3 --i 1 --word \"\"");
  CHECK(id.out == "xi[0]\n");
}

TEST_CASE("zdump format") {
  auto r = run_cli("zdump --family B --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("length\tword\tcc\tc\n", 0) == 0);
  CHECK(r.out.find("1\t2\t2\t1\n") != std::string::npos);  // s_2 has cc = 2
}

TEST_CASE("grassmannian cache roundtrip") {
  auto dir = std::filesystem::temp_directory_path() / "affsym_cache_test";
  std::filesystem::remove_all(dir);
  std::string flags = "grassmannian --family B --n 3 --max-length 4 --cache-dir " + dir.string();
  auto first = run_cli(flags);
  CHECK(first.exit_code == 0);
  CHECK(std::filesystem::exists(dir / grassmannian_cache_filename(Family::B, 3, 4)));
  auto second = run_cli(flags);
  CHECK(first.out == second.out);
  CHECK(first.out.rfind("B 3 4\n", 0) == 0);

  // library-level load agrees
  WeylGroup W(build_cartan(Family::B, 3));
  auto words = load_grassmannian_cache((dir / grassmannian_cache_filename(Family::B, 3, 4)).string(),
                                       Family::B, 3, 4);
  REQUIRE(words.has_value());
  auto direct = W.grassmannian_elements(4);
  for (int l = 0; l <= 4; ++l) {
    REQUIRE((*words)[l].size() == direct[l].size());
    for (size_t i = 0; i < direct[l].size(); ++i)
      CHECK((*words)[l][i] == W.canonical_word(direct[l][i]));
  }
  // a mismatched header is rejected
  CHECK(!load_grassmannian_cache((dir / grassmannian_cache_filename(Family::B, 3, 4)).string(),
                                 Family::B, 3, 5)
             .has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("degree warning is soft") {
  auto r = run_cli("assf --family B --n 3 --word 0 --max-degree 9");
  CHECK(r.exit_code == 0);  // warning goes to stderr, computation proceeds
}
