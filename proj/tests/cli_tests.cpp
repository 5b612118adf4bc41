#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "modrep/cli.hpp"

using namespace modrep;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("decompose prints the expected factors") {
  CliRun r = run({"decompose", "--p", "5", "--r", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("V3 + V1(1)") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("decompose reports out-of-range inputs without failing") {
  CliRun r = run({"decompose", "--p", "3", "--r", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("OUT-OF-RANGE") != std::string::npos);

  // Same applies when the exponent exceeds the label range entirely.
  CliRun s = run({"decompose", "--p", "5", "--r", "7,1"});
  CHECK(s.code == 0);
  CHECK(s.out.find("OUT-OF-RANGE") != std::string::npos);

  // With the oracle enabled the module is still analyzed.
  CliRun t = run({"decompose", "--p", "3", "--r", "2,2", "--oracle", "--json"});
  CHECK(t.code == 0);
  json doc = json::parse(t.out);
  bool saw_oracle = false;
  for (const auto& c : doc["checks"])
    if (c["name"].get<std::string>().find("oracle") != std::string::npos)
      saw_oracle = true;
  CHECK(saw_oracle);
}

TEST_CASE("decompose --oracle cross-checks the closed form") {
  CliRun r = run({"decompose", "--p", "7", "--r", "3,2,1", "--k", "2",
                  "--oracle", "--json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["command"] == "decompose");
  CHECK(doc["params"]["p"] == 7);
  for (const auto& c : doc["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("sl2 mode forgets twists") {
  CliRun r = run({"decompose", "--p", "5", "--r", "2,1", "--group", "sl2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("V3 + V1") != std::string::npos);
  CHECK(r.out.find("V1(1)") == std::string::npos);
}

TEST_CASE("json reports follow the documented shape") {
  CliRun r = run({"verify", "--suite", "characters", "--p-list", "3", "--json",
                  "--seed", "9"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc.contains("command"));
  REQUIRE(doc.contains("params"));
  REQUIRE(doc.contains("checks"));
  REQUIRE(doc.contains("meta"));
  CHECK(doc["command"] == "verify");
  CHECK(doc["meta"]["seed"] == 9);
  CHECK(doc["meta"]["elapsed_ms"] == 0);
  CHECK(doc["meta"].contains("version"));
  REQUIRE(!doc["checks"].empty());
  std::string prev;
  for (const auto& c : doc["checks"]) {
    REQUIRE(c.contains("name"));
    REQUIRE(c.contains("status"));
    REQUIRE(c.contains("detail"));
    std::string name = c["name"].get<std::string>();
    CHECK(prev <= name);  // sorted by name
    prev = name;
  }
  // Timing goes to stderr, never into the payload.
  CHECK(r.err.find("checks in") != std::string::npos);
}

TEST_CASE("verification suites succeed on the default grid") {
  for (const std::string& suite :
       {std::string("pairs"), std::string("socle"), std::string("serre")}) {
    CliRun r = run({"verify", "--suite", suite, "--p-list", "2,3,5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  CliRun t = run({"verify", "--suite", "triples", "--p-list", "5"});
  CHECK(t.code == 0);
  CliRun d = run({"verify", "--suite", "distinction", "--p-list", "3,5"});
  CHECK(d.code == 0);
}

TEST_CASE("conjecture command reports isomorphism evidence") {
  CliRun r = run({"conjecture", "--p-list", "3,5", "--json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  bool saw_witness = false;
  for (const auto& c : doc["checks"]) {
    std::string name = c["name"].get<std::string>();
    if (name.find("/dim") != std::string::npos ||
        name.find("/char") != std::string::npos)
      CHECK(c["status"] == "pass");
    if (c.contains("witness")) saw_witness = true;
  }
  CHECK(saw_witness);
}

TEST_CASE("distinguish answers on single cells") {
  CliRun yes = run({"distinguish", "--p", "3", "--r1", "1", "--r2", "1",
                    "--k", "1"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("distinguished") != std::string::npos);

  CliRun no = run({"distinguish", "--p", "5", "--r1", "2", "--r2", "1"});
  CHECK(no.code == 0);
  CHECK(no.out.find("FAIL") == std::string::npos);

  CliRun oor = run({"distinguish", "--p", "3", "--r1", "2", "--r2", "2"});
  CHECK(oor.code == 0);
  CHECK(oor.out.find("OUT-OF-RANGE") != std::string::npos);
}

TEST_CASE("identical seeds give identical bytes") {
  std::vector<std::string> args = {"verify", "--suite", "pairs", "--p-list",
                                   "3,5", "--json", "--seed", "11"};
  CliRun a = run(args);
  CliRun b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  CliRun c = run({"conjecture", "--p-list", "3", "--json", "--seed", "5"});
  CliRun d = run({"conjecture", "--p-list", "3", "--json", "--seed", "5"});
  CHECK(c.out == d.out);
}

TEST_CASE("--out mirrors the json payload to a file") {
  std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "modrep_cli_out_test.json";
  std::filesystem::remove(tmp);

  CliRun json_run = run({"decompose", "--p", "5", "--r", "2,2", "--json",
                         "--out", tmp.string()});
  CHECK(json_run.code == 0);
  CHECK(slurp(tmp) == json_run.out);

  // Text mode on stdout still writes machine-readable JSON to the file.
  std::filesystem::remove(tmp);
  CliRun text_run = run({"decompose", "--p", "5", "--r", "2,2", "--out",
                         tmp.string()});
  CHECK(text_run.code == 0);
  CHECK(slurp(tmp) == json_run.out);
  std::filesystem::remove(tmp);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"decompose", "--p", "5"}).code == 2);            // missing --r
  CHECK(run({"decompose", "--p", "4", "--r", "1,1"}).code == 2);  // composite
  CHECK(run({"decompose", "--p", "5", "--r", "1"}).code == 2);    // arity
  CHECK(run({"decompose", "--p", "5", "--r", "1,1,1,1"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"distinguish", "--p", "9", "--r1", "1", "--r2", "1"}).code == 2);
  CliRun r = run({"decompose", "--p", "4", "--r", "1,1"});
  CHECK(r.err.find("usage error") != std::string::npos);
}

TEST_CASE("help is not an error") {
  CHECK(run({"--help"}).code == 0);
  CliRun r = run({"--help"});
  CHECK(r.out.find("decompose") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}
