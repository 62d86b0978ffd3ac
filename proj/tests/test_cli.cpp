#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "drgcay/families.hpp"
#include "drgcay/records.hpp"

using namespace drgcay;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("drgcay_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

void check_record_schema(const Json& j) {
  for (const char* key : {"schema", "group", "set", "hypothesis_met", "special_s", "drg", "array", "witness", "family",
                          "all_labels", "certificate"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["group"].is_string());
  CHECK(j["set"].is_array());
  CHECK(j["drg"].is_boolean());
  CHECK(j["certificate"].is_string());
  if (j["drg"].get<bool>()) {
    CHECK(j["array"].is_array());
    CHECK(j["array"].size() == 2);
    CHECK(j["witness"].is_null());
  } else {
    CHECK(j["array"].is_null());
    CHECK(j["witness"].is_object());
  }
  CHECK((j["family"].is_null() || j["family"].is_string()));
}

}  // namespace

TEST_CASE("construct") {
  auto r = run({"construct", "--family", "cycle", "--params", "7"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  const auto g = read_edge_list(in);
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 7);

  r = run({"construct", "--family", "folded-cube", "--params", "6", "--as-cayley", "--jsonl"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["group"] == "Z2xZ2xZ2xZ4");
  CHECK(j["set"].size() == 6);
  CHECK(j["special_s"].size() >= 1);
  CHECK(j["family"] == "FoldedCube(6)");

  r = run({"construct", "--family", "folded-cube", "--params", "6", "--as-cayley"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Z2xZ2xZ2xZ4") != std::string::npos);
  CHECK(r.out.find("special s=") != std::string::npos);

  r = run({"construct", "--family", "doob", "--params", "1,1"});
  CHECK(r.code == 0);
  std::istringstream din(r.out);
  const auto d = read_edge_list(din);
  CHECK(d.vertex_count() == 64);
  CHECK(d.edge_count() == 64 * 9 / 2);
}

TEST_CASE("construct round trip through a file") {
  for (auto [family, params] : {std::pair{"hamming", "3,3"}, {"shrikhande", ""}, {"k66-6k2", ""}}) {
    const auto path = scratch(std::string(family) + ".edges");
    std::vector<std::string> args{"construct", "--family", family, "--out", path.string()};
    if (*params) args.insert(args.begin() + 3, {"--params", params});
    const auto r = run(args);
    REQUIRE(r.code == 0);
    std::ifstream f(path);
    CHECK(read_edge_list(f) == construct(parse_family(family, params)));
    const auto c = run({"check", "--edges", path.string(), "--jsonl"});
    CHECK(c.code == 0);
    CHECK(Json::parse(c.out)["drg"] == true);
  }
}

TEST_CASE("check") {
  auto r = run({"check", "--group", "Z6", "--set", "1,5,3", "--jsonl"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["drg"] == true);
  CHECK(j["array"] == Json::parse("[[3,2],[1,3]]"));
  CHECK(j["three_term_recurrence"] == true);
  CHECK(j["vertices"] == 6);

  r = run({"check", "--group", "Z8", "--set", "1,7,4", "--jsonl"});
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["drg"] == false);
  CHECK(j["witness"]["distance"] == 2);
  CHECK(j["witness"]["x"] == "0");
  CHECK(j["witness"]["y"] == "2");

  r = run({"check", "--group", "Z8", "--set", "1,7,4"});
  CHECK(r.out.find("not distance-regular: c2(0,2)=1") != std::string::npos);

  r = run({"check", "--group", "Z6", "--set", "1,3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("inverse-closed") != std::string::npos);
}

TEST_CASE("classify") {
  auto r = run({"classify", "--group", "Z6xZ2", "--set", "(1,0),(5,0),(2,1),(4,1),(0,1)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("K6,6-6K2") != std::string::npos);
  const auto path = scratch("classify.json");
  r = run({"classify", "--group", "Z6", "--set", "1,5,3", "--out", path.string()});
  CHECK(r.code == 0);
  const auto j = Json::parse(slurp(path));
  check_record_schema(j);
  CHECK(j["family"] == "K3,3");
  r = run({"classify", "--group", "Z2xZ2xZ2", "--set", "(1,0,0),(0,1,0),(0,0,1)", "--node-budget", "1"});
  CHECK(r.code == 3);
}

TEST_CASE("lemmas") {
  auto r = run({"lemmas", "--max-order", "8"});
  CHECK(r.code == 0);
  r = run({"lemmas", "--group", "Z6", "--set", "1,5,2,4", "--jsonl"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"failed\":0") != std::string::npos);
}

TEST_CASE("survey") {
  const auto out = scratch("survey.jsonl");
  const auto csv = scratch("survey.csv");
  const auto summary = scratch("summary.json");
  auto r = run({"survey", "--max-order", "12", "--out", out.string(), "--csv", csv.string(), "--summary",
                summary.string()});
  CHECK(r.code == 0);
  const auto lines = json_lines(slurp(out));
  CHECK(lines.size() == 202);
  for (const auto& j : lines) check_record_schema(j);
  CHECK(slurp(csv).rfind("order,group,", 0) == 0);
  const auto s = Json::parse(slurp(summary));
  CHECK(s["theorem_holds"] == true);

  const auto a = run({"survey", "--max-order", "10", "--jsonl", "--workers", "1"});
  const auto b = run({"survey", "--max-order", "10", "--jsonl", "--workers", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage and validation errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"survey", "--max-order", "x"}).code == 1);
  CHECK(run({"check", "--group", "Z6"}).code == 1);
  CHECK(run({"construct", "--family", "petersen"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  auto r = run({"construct", "--family", "hamming", "--params", "0,2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("d >= 1") != std::string::npos);
  CHECK(run({"check", "--group", "Z6", "--set", "2,4"}).code == 2);
  CHECK(run({"check", "--group", "Q8", "--set", "1"}).code == 2);
  CHECK(run({"check", "--edges", scratch("missing.edges").string()}).code == 2);
}
