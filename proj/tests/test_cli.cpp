#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "actionlab/cli.hpp"

using namespace actionlab;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("actionlab_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("alpha of the Heisenberg group") {
  auto r = call({"alpha", "--family", "heisenberg", "3"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["alpha"] == 3);
  CHECK(j["version"] == kVersion);
  CHECK(j["input"]["args"].size() == 4);
}

TEST_CASE("cohomology with oracle") {
  auto r = call({"cohomology", "--p", "2", "--a", "1", "--b", "1", "--d", "2", "--k", "2", "--oracle"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["rank"] == 3);
  CHECK(j["oracle"]["agrees"] == true);
  auto cap = call({"cohomology", "--p", "2", "--a", "2", "--b", "1", "--d", "2", "--k", "3", "--oracle"});
  CHECK(cap.code == 3);
  CHECK(cap.err.find("OracleCapExceeded") != std::string::npos);
}

TEST_CASE("roots verification") {
  auto r = call({"roots", "--n", "1", "--verify", "60"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["verify"]["holds"] == true);
  auto s = call({"roots", "--n", "2", "--k", "12", "--exps", "1,5"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["search"]["a"].is_number());
  CHECK(call({"roots", "--n", "2", "--k", "12", "--exps", "1"}).code == 1);
}

TEST_CASE("spec files and other verbs") {
  auto spec = temp_file("v4.json", R"J({"type":"cayley","table":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]})J");
  auto r = call({"subgroups", "--spec", spec, "--members"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["count"] == 5);
  CHECK(j["input"]["spec"]["type"] == "cayley");

  auto perm = temp_file("s3.json", R"J({"type":"permutation","degree":3,"generators":["(1 2 3)","(1 2)"]})J");
  auto a = call({"analyze", "--spec", perm});
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["alpha"]["index"] == 2);

  auto e = call({"extension", "--family", "extraspecial", "5", "25", "--mnas"});
  CHECK(e.code == 0);
  CHECK(json::parse(e.out)["holds"] == true);

  auto sp = call({"spectral", "--p", "3", "--r", "6", "--t", "3", "--d", "2", "--d2-killed"});
  CHECK(sp.code == 0);
  auto sj = json::parse(sp.out);
  CHECK(sj["obstruction"]["verdict"] == "obstructed");
  CHECK(sj["log_p_sizes"][0][4] == 30);
  CHECK(sj["row_labels"][0] == "j=0");

  auto data = temp_file("surf.json", R"J([{"rotation":"1/4","selfint":2}])J");
  auto g = call({"gsignature", "--data", data, "--sigma", "4"});
  CHECK(g.code == 0);
  CHECK(call({"gsignature", "--data", data, "--sigma", "3"}).code == 2);
  auto empty = temp_file("none.json", "[]");
  CHECK(call({"gsignature", "--data", empty, "--sigma", "1"}).code == 2);

  auto c = call({"corpus", "--max-order", "16"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["count"].get<int>() > 10);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 1);
  CHECK(call({"alpha"}).code == 1);
  CHECK(call({"alpha", "--family", "nosuch", "2"}).code == 1);
  CHECK(call({"alpha", "--family", "cyclic", "x"}).code == 1);
  CHECK(call({"alpha", "--family", "cyclic", "3", "--spec", "f.json"}).code == 1);
  CHECK(call({"spectral", "--p", "2", "--r", "1", "--t", "1", "--d", "2"}).code == 1);
  CHECK(call({"spectral", "--p", "2", "--r", "2", "--t", "1", "--d", "2", "--torsion", "weird"}).code == 1);
  CHECK(call({"alpha", "--spec", "/nonexistent/file.json"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("text output") {
  auto r = call({"--text", "alpha", "--family", "cyclic", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha: 1\n") != std::string::npos);
  auto s = call({"alpha", "--family", "cyclic", "6", "--text"});
  CHECK(s.out.find("alpha: 1\n") != std::string::npos);
}

TEST_CASE("identical inputs give identical bytes") {
  auto data = temp_file("sym.json", R"J([{"rotation":"1/3","selfint":3},{"rotation":"2/3","selfint":-3}])J");
  std::vector<std::vector<std::string>> cmds = {
      {"analyze", "--family", "heisenberg", "3"},
      {"alpha", "--family", "dihedral", "8"},
      {"subgroups", "--family", "quaternion", "16"},
      {"extension", "--family", "heisenberg", "4"},
      {"cohomology", "--p", "3", "--a", "1", "--b", "2", "--d", "2", "--k", "2", "--oracle"},
      {"spectral", "--p", "2", "--r", "3", "--t", "1", "--d", "3", "--cyclic-a", "2"},
      {"gsignature", "--data", data, "--sigma", "0", "--sign-balance", "2"},
      {"roots", "--n", "2", "--k", "12", "--exps", "1,5", "--verify", "30"},
      {"corpus", "--max-order", "32"},
  };
  for (const auto& c : cmds) {
    auto a = call(c), b = call(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}
