#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "io.hpp"

using namespace quadpow;
using quadpow::io::Json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
  Json json() const { return Json::parse(out); }
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
  const fs::path dir = fs::temp_directory_path() / "quadpow_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const std::string& value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    setenv(name, value.c_str(), 1);
  }
  ~ScopedEnv() {
    if (old_)
      setenv(name_, old_->c_str(), 1);
    else
      unsetenv(name_);
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace

TEST_CASE("theta report") {
  const Run r = run({"theta", "--e", "12", "--d", "72"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["schema"] == "quadpow/1");
  CHECK(j["tool_version"] == cli::kToolVersion);
  CHECK(j["command"] == "theta");
  CHECK(j["theta"] == 19);
  CHECK(j.contains("t"));
  CHECK(j["timing_ms"].is_number());
  CHECK(j["inputs_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("digests depend on inputs, not on timing") {
  const Json a = run({"theta", "--e", "8", "--d", "72"}).json();
  const Json b = run({"theta", "--e", "8", "--d", "72"}).json();
  const Json c = run({"theta", "--e", "9", "--d", "72"}).json();
  CHECK(a["inputs_digest"] == b["inputs_digest"]);
  CHECK(a["inputs_digest"] != c["inputs_digest"]);
  CHECK(a["theta"] == 18);
  CHECK(c["theta"] == 18);
}

TEST_CASE("verify passes on a catalog entry and on an identity file") {
  Run r = run({"verify", "pythagorean"});
  CHECK(r.code == 0);
  CHECK(r.json()["verdict"] == "pass");
  CHECK(r.json()["residual"].is_null());

  const std::string path = write("pythagorean.json", io::to_json(catalog("pythagorean")).dump(2));
  r = run({"verify", path});
  CHECK(r.code == 0);
  CHECK(r.json()["verdict"] == "pass");
}

TEST_CASE("verify reports the residual of a corrupted identity") {
  PowerIdentity id = catalog("pythagorean");
  id.terms[2].form.coeff(2) = Scalar(2L);
  const std::string path = write("corrupted.json", io::to_json(id).dump(2));
  const Run r = run({"verify", path});
  CHECK(r.code == 1);
  const Json j = r.json();
  CHECK(j["verdict"] == "fail");
  REQUIRE(j["residual"].is_object());
  CHECK(j["residual"]["degree"] == 4);
}

TEST_CASE("malformed JSON gets a line and column") {
  const std::string path = write("bad_json.json", "{\"d\": 2,\n \"terms\": [ {\"lambda\": 1,, }]}");
  const Run r = run({"verify", path});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find(path + ":2:26:") != std::string::npos);
}

TEST_CASE("scalar grammar errors point into the string") {
  const std::string text =
      "{\"d\": 2,\n"
      " \"terms\": [\n"
      "  {\"lambda\": \"1\", \"form\": {\"degree\": 2, \"coeffs\": [\"1\", \"0\", \"-1\"]}},\n"
      "  {\"lambda\": \"1\", \"form\": {\"degree\": 2, \"coeffs\": [\"0\", \"2*(3\", \"0\"]}}\n"
      " ]}\n";
  const std::string path = write("bad_scalar.json", text);
  const Run r = run({"verify", path});
  CHECK(r.code == 2);
  // the string "2*(3" opens at column 57 of line 4; the parser stops after its last character
  const std::size_t open = std::string("  {\"lambda\": \"1\", \"form\": {\"degree\": 2, \"coeffs\": [\"0\", ").size() + 1;
  CHECK(open == 57);
  CHECK(r.err.find(path + ":4:" + std::to_string(open + 1 + 4) + ":") != std::string::npos);
  CHECK(r.err.find("/terms/1/form/coeffs/1") != std::string::npos);
}

TEST_CASE("schema errors name the offending value") {
  std::string path = write("bad_degree.json", R"({"d": 2, "terms": [{"lambda": "1", "form": {"degree": 3, "coeffs": ["1", "0", "1"]}}]})");
  Run r = run({"verify", path});
  CHECK(r.code == 2);
  CHECK(r.err.find(":1:55:") != std::string::npos);
  CHECK(r.err.find("degree 3 needs 4 coefficients") != std::string::npos);

  path = write("missing_terms.json", R"({"d": 2})");
  r = run({"verify", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("missing \"terms\"") != std::string::npos);

  r = run({"verify", "no-such-entry"});
  CHECK(r.code == 2);
  r = run({"construct", "--recipe", "nonsense"});
  CHECK(r.code == 2);
  r = run({"theta", "--e", "x", "--d", "2"});
  CHECK(r.code == 2);
  r = run({});
  CHECK(r.code == 2);
}

TEST_CASE("catalog listing and whole-corpus verification") {
  const Json names = run({"catalog", "--list"}).json()["names"];
  std::set<std::string> seen;
  for (const auto& n : names) CHECK(seen.insert(n.get<std::string>()).second);
  CHECK(seen.size() == catalog_names().size());

  const Run r = run({"verify", "--all", "--jobs", "3"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["verdict"] == "pass");
  CHECK(j["count"] == catalog_names().size());
}

TEST_CASE("identity JSON round trips exactly") {
  for (const auto& name : catalog_names()) {
    const CatalogEntry& e = catalog_entry(name);
    std::vector<PowerIdentity> all{e.identity};
    all.insert(all.end(), e.related.begin(), e.related.end());
    for (const auto& id : all) {
      const io::Source src = io::Source::from_text(name, io::to_json(id).dump(1));
      CHECK_MESSAGE(io::same_identity(io::identity_from(src, ""), id), name);
    }
  }
}

TEST_CASE("bundled corpus matches the built-in catalog") {
  for (const auto& name : catalog_names()) {
    const fs::path p = fs::path(cli::catalog_dir()) / (name + ".json");
    REQUIRE_MESSAGE(fs::exists(p), p.string());
    const io::Source src = io::Source::from_file(p.string());
    CHECK_MESSAGE(src.doc == cli::entry_json(catalog_entry(name)), name);
  }
}

TEST_CASE("catalog directory override") {
  const fs::path dir = scratch("override");
  fs::remove_all(dir);
  fs::create_directories(dir);
  Json doc = cli::entry_json(catalog_entry("cubic"));
  doc["name"] = "mine";
  std::ofstream(dir / "mine.json") << doc.dump(2);
  ScopedEnv env("QUADPOW_CATALOG_DIR", dir.string());
  Run r = run({"verify", "--all"});
  CHECK(r.code == 0);
  CHECK(r.json()["count"] == 1);
  CHECK(r.json()["results"][0]["name"] == "mine");
  r = run({"verify", "mine"});
  CHECK(r.code == 0);
}

TEST_CASE("construct emits metadata and a verified identity") {
  const Run r = run({"construct", "--recipe", "psi-even", "--s", "4"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["verdict"] == "pass");
  CHECK(j["metadata"]["term_count"] == 6);
  CHECK(j["metadata"].size() == 3);
  CHECK(j["metadata"].contains("recipe"));
  CHECK(j["metadata"].contains("description"));
  const io::Source src = io::Source::from_text("construct", j["identity"].dump());
  CHECK(verify_identity(io::identity_from(src, "")).pass);
}

TEST_CASE("tame and wild sweeps") {
  Run r = run({"tame", "--d-range", "4:6", "--jobs", "2"});
  REQUIRE(r.code == 0);
  const Json reps = r.json()["reports"];
  REQUIRE(reps.size() == 3);
  CHECK(reps[0]["realized"] == 3);
  CHECK(reps[1]["realized"] == 1);
  CHECK(reps[2]["realized"] == 0);

  r = run({"wild", "--d", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["solutions"].size() == 2);
  r = run({"wild", "--d-range", "9:7"});
  CHECK(r.code == 2);
}

TEST_CASE("sylvester, representations, kernel and diagonalize") {
  Run r = run({"sylvester", "tame43"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["rank"] == 2);
  for (const auto& d : r.json()["decompositions"]) CHECK(d["verified"] == true);

  r = run({"representations", "tame43"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["count"] == 1);

  r = run({"kernel", "quarcube"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["dependent"] == true);
  CHECK(r.json()["kernel"].size() == 1);

  const std::string path = write("pair.json", R"({"forms": [{"degree": 2, "coeffs": ["1", "1", "0"]},
                                                           {"degree": 2, "coeffs": ["1", "0", "-3"]}]})");
  r = run({"diagonalize", path});
  CHECK(r.code == 0);
  CHECK(r.json()["verified"] == true);
}

TEST_CASE("klein output formats") {
  Run r = run({"klein", "quintic"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["label"] == "cube");
  CHECK(r.json()["points"].size() == 8);

  r = run({"klein", "quartic", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,z");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);

  const std::string out = scratch("klein.json").string();
  r = run({"--out", out, "klein", "icosa14"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  CHECK(Json::parse(f)["label"] == "icosahedron");
}

TEST_CASE("position index") {
  const std::string text = "{\n  \"a\": [1, {\"b/c\": \"x\"}],\n  \"d\": true\n}";
  const io::PositionIndex idx(text);
  CHECK(idx.find("")->line == 1);
  CHECK(idx.find("/a")->line == 2);
  CHECK(idx.find("/a")->column == 8);
  CHECK(idx.find("/a/1/b~1c")->column == 20);
  CHECK(idx.find("/d")->line == 3);
  CHECK_FALSE(idx.find("/zz").has_value());
}
