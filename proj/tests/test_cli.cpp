// End-to-end checks of the CLI surface: exit codes, JSON shapes, and schema
// round trips (every emitted document validates against its shipped schema).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(SPEXTRAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json load_schema(const std::string& name) {
  std::ifstream in(std::string(SPEXTRAL_SCHEMA_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

bool type_matches(const json& value, const std::string& type) {
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "array") return value.is_array();
  if (type == "object") return value.is_object();
  return false;
}

// Minimal structural validator for the shipped schemas: checks required
// fields, field types, and array item types.
void validate(const json& doc, const json& schema) {
  REQUIRE(doc.is_object());
  for (const auto& req : schema.at("required")) {
    INFO("missing field " << req.get<std::string>());
    REQUIRE(doc.contains(req.get<std::string>()));
  }
  for (const auto& [key, spec] : schema.at("properties").items()) {
    if (!doc.contains(key)) continue;
    INFO("field " << key);
    CHECK(type_matches(doc.at(key), spec.at("type").get<std::string>()));
    if (spec.contains("items") && doc.at(key).is_array())
      for (const auto& item : doc.at(key))
        CHECK(type_matches(item, spec.at("items").at("type").get<std::string>()));
  }
  for (const auto& [key, value] : doc.items()) {
    INFO("undocumented field " << key);
    CHECK(schema.at("properties").contains(key));
  }
}

}  // namespace

TEST_CASE("construct emits graph6") {
  RunResult r = run_cli("construct --family split --n 2 --h 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "A_\n");
  CHECK(run_cli("construct --family split --n 10 --h 3").exit_code == 0);
  CHECK(run_cli("construct --family clique-join-cliques --n 28 --k 1 --l 4 --r 0").exit_code == 0);
}

TEST_CASE("rho output and schema") {
  RunResult r = run_cli("rho --g6 Bw");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  validate(j, load_schema("rho.json"));
  CHECK(j["rho"].get<double>() == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(j["schema"] == "spextral/1");
}

TEST_CASE("bound output and schema") {
  RunResult r = run_cli("bound --g6 Bw");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  validate(j, load_schema("bound.json"));
  CHECK(j["ok"].get<bool>());
}

TEST_CASE("turan output and schema") {
  RunResult r = run_cli("turan --pattern 2S3 --n 7");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  validate(j, load_schema("turan.json"));
  CHECK(j["value"] == 21);
  CHECK(j["case"] == "n<k(l+1)");
  CHECK(j["guaranteed"] == true);

  json j2 = json::parse(run_cli("turan --pattern 1S3+1P4 --n 28").out);
  validate(j2, load_schema("turan.json"));
  CHECK(j2["value"] == 54);
}

TEST_CASE("predict output and schema") {
  RunResult r = run_cli("predict --pattern 1S3+1P4 --n 28");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  validate(j, load_schema("predict.json"));
  REQUIRE(j["families"].is_array());
  CHECK(j["families"][0]["kind"] == "split");
  CHECK(j["families"][0].contains("graph6"));
}

TEST_CASE("free output and schema") {
  RunResult k5 = run_cli("free --pattern 1S3 --g6 D~{");  // K5
  REQUIRE(k5.exit_code == 0);
  json j = json::parse(k5.out);
  validate(j, load_schema("free.json"));
  CHECK(j["free"] == false);
  CHECK(j.contains("embedding"));

  json j2 = json::parse(run_cli("free --pattern 2S3 --g6 Bw").out);
  CHECK(j2["free"] == true);
  CHECK(!j2.contains("embedding"));
}

TEST_CASE("levelsets and claims schemas") {
  RunResult split = run_cli("construct --family split --n 40 --h 2");
  std::string g6 = split.out.substr(0, split.out.size() - 1);
  json ls = json::parse(run_cli("levelsets --g6 " + g6 + " --k 1 --l 4").out);
  validate(ls, load_schema("levelsets.json"));
  CHECK(ls["h"] == 2);
  CHECK(ls["t"] == 26);
  json cl = json::parse(run_cli("claims --g6 " + g6 + " --k 1 --l 4").out);
  validate(cl, load_schema("claims.json"));
  CHECK(cl["A"] == true);
}

TEST_CASE("search commands and schema") {
  json j = json::parse(run_cli("search-ex --pattern 2S3 --n 7").out);
  validate(j, load_schema("search_report.json"));
  CHECK(j["best"] == 21);
  CHECK(j["objective"] == "edges");

  json sp = json::parse(run_cli("search-sp --pattern 2P2 --n 6 --jobs 2").out);
  validate(sp, load_schema("search_report.json"));
  CHECK(sp["objective"] == "rho");
}

TEST_CASE("exit codes") {
  CHECK(run_cli("construct --family split --n 5 --h 9").exit_code == 2);   // argument error
  CHECK(run_cli("rho --g6 'B'").exit_code == 2);                           // parse error
  CHECK(run_cli("turan --pattern 2P2 --n 9").exit_code == 2);              // unsupported pattern
  CHECK(run_cli("search-ex --pattern 2S3 --n 10").exit_code == 2);         // gated
  CHECK(run_cli("rho --g6 Bw --tol -1").exit_code == 2);
}
