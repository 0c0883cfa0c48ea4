#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = qhalf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::filesystem::path path;

  TempFile(const std::string& name, const std::string& contents) {
    path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << contents;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};

const char* kAbaSpec = R"({"kind":"piecewise","cuts":["0/1","1/1"],
  "pieces":[0,1,0],"cut_colours":[0,0],"alphabet":2})";
const char* kDenom2Spec = R"({"kind":"denom_mod","m":2,"residues":[0,1],"alphabet":2})";

}  // namespace

TEST_CASE("gen builds a truncation report") {
  RunResult r = run_cli({"halfgraph", "gen", "--support", "1,2,3"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["command"] == "halfgraph gen");
  CHECK(j["pass"] == true);
  CHECK(j["results"]["n"] == 3);
  CHECK(j["results"]["edge_count"] == 3);
  CHECK(j["results"]["graph"]["edges"] == Json::parse("[[0,4],[0,5],[1,5]]"));
  CHECK(j["results"]["graph"]["vertices"].size() == 6);
  CHECK(j["results"]["graph"]["vertices"][0]["q"] == "1/1");
  CHECK(j["results"]["graph"]["vertices"][0]["side"] == "+");
  CHECK(j["results"]["graph"]["vertices"][3]["side"] == "-");
}

TEST_CASE("gen accepts an evenly spaced grid") {
  RunResult r = run_cli({"halfgraph", "gen", "--support-grid", "0", "2", "5"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["results"]["n"] == 5);
  CHECK(j["results"]["edge_count"] == 10);
  CHECK(j["inputs"]["grid"] == Json::parse(R"(["0/1","2/1",5])"));

  CHECK(run_cli({"halfgraph", "gen", "--support-grid", "2", "2", "3"}).code == 2);
  CHECK(run_cli({"halfgraph", "gen"}).code == 2);
  CHECK(run_cli({"halfgraph", "gen", "--support", "1,2", "--support-grid", "0", "1", "2"})
            .code == 2);
  CHECK(run_cli({"halfgraph", "gen", "--support", "2,1"}).code == 2);
  CHECK(run_cli({"halfgraph", "gen", "--support", "1,,2"}).code == 2);
}

TEST_CASE("aut enumerate reports the group with axiom checks") {
  TempFile graph("qhalf_cli_tr3.json", "");
  REQUIRE(run_cli({"halfgraph", "gen", "--support", "0,1/2,1", "-o", graph.str()}).code == 0);

  RunResult r = run_cli({"aut", "enumerate", graph.str()});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["command"] == "aut enumerate");
  CHECK(j["results"]["group"]["order"] == 4);
  CHECK(j["results"]["group"]["degree"] == 6);
  CHECK(j["results"]["axioms_hold"] == true);
  CHECK(j["results"]["orbits"] == Json::parse("[[0,5],[1,4],[2,3]]"));
  CHECK(j["pass"] == true);

  RunResult s = run_cli({"aut", "enumerate", graph.str(), "--stabilizer", "2"});
  REQUIRE(s.code == 0);
  Json sj = s.json();
  CHECK(sj["results"]["stabilizer"]["vertex"] == 2);
  CHECK(sj["results"]["stabilizer"]["orbits"] == Json::parse("[[0,5],[1,4],[2],[3]]"));

  RunResult capped = run_cli({"aut", "enumerate", graph.str(), "--order-cap", "3"});
  CHECK(capped.code == 1);
  Json cj = capped.json();
  CHECK(cj["command"] == "aut enumerate");
  CHECK(cj["pass"] == false);
  CHECK(cj.contains("error"));
}

TEST_CASE("labelled graphs regenerate their edges when omitted") {
  TempFile graph("qhalf_cli_novedges.json", R"({"vertices":[
    {"q":"0/1","side":"+"},{"q":"1/1","side":"+"},
    {"q":"0/1","side":"-"},{"q":"1/1","side":"-"}]})");
  RunResult r = run_cli({"aut", "enumerate", graph.str()});
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["group"]["order"] == 4);
}

TEST_CASE("motion handles both moving and rigid graphs") {
  TempFile tr("qhalf_cli_tr4.json", "");
  REQUIRE(run_cli({"halfgraph", "gen", "--support", "0,1,2,3", "-o", tr.str()}).code == 0);
  RunResult r = run_cli({"motion", tr.str()});
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["motion"] == 2);
  CHECK(r.json()["results"]["group_order"] == 4);

  TempFile rigid("qhalf_cli_rigid.json",
                 R"({"n":7,"edges":[[0,1],[0,2],[2,3],[0,4],[4,5],[5,6]]})");
  RunResult m = run_cli({"motion", rigid.str()});
  REQUIRE(m.code == 0);
  CHECK(m.json()["results"]["motion"].is_null());
  CHECK(m.json()["pass"] == true);
}

TEST_CASE("distnum reports the least distinguishing colour count") {
  TempFile tr("qhalf_cli_tr3b.json", "");
  REQUIRE(run_cli({"halfgraph", "gen", "--support", "1,3/2,2", "-o", tr.str()}).code == 0);
  RunResult r = run_cli({"distnum", tr.str()});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["results"]["distinguishing_number"] == 2);
  CHECK(j["results"]["witness_colouring"].is_array());

  TempFile k4("qhalf_cli_k4.json",
              R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  RunResult full = run_cli({"distnum", k4.str()});
  REQUIRE(full.code == 0);
  CHECK(full.json()["results"]["distinguishing_number"] == 4);

  RunResult capped = run_cli({"distnum", k4.str(), "--max-colours", "3"});
  CHECK(capped.code == 1);
  CHECK(capped.json()["results"]["distinguishing_number"].is_null());
  CHECK(capped.json()["pass"] == false);
}

TEST_CASE("verify-colouring separates witnesses from failures") {
  TempFile tr("qhalf_cli_tr3c.json", "");
  REQUIRE(run_cli({"halfgraph", "gen", "--support", "0,1,2", "-o", tr.str()}).code == 0);

  RunResult good = run_cli({"verify-colouring", tr.str(), "--colours", "0,0,0,1,0,1"});
  REQUIRE(good.code == 0);
  CHECK(good.json()["results"]["distinguishing"] == true);
  CHECK(good.json()["results"]["preserving_nonidentity"] == 0);

  RunResult bad = run_cli({"verify-colouring", tr.str(), "--colours", "0,0,0,0,0,0"});
  REQUIRE(bad.code == 1);
  CHECK(bad.json()["results"]["distinguishing"] == false);
  CHECK(bad.json()["results"]["preserving_nonidentity"] == 3);

  CHECK(run_cli({"verify-colouring", tr.str(), "--colours", "0,1"}).code == 2);
}

TEST_CASE("check lemmas passes on a mixed support") {
  RunResult r = run_cli({"check", "lemmas", "--support", "0,1/2,1,2"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["command"] == "check lemmas");
  CHECK(j["results"]["bipartite"] == true);
  CHECK(j["results"]["nested_neighbourhoods"] == true);
  CHECK(j["results"]["minus_from_plus"] == true);
  CHECK(j["results"]["group_as_predicted"] == true);
  CHECK(j["results"]["group_order"] == 4);
  CHECK(j["pass"] == true);

  CHECK(run_cli({"check", "lemmas", "--support", "1,1"}).code == 2);
}

TEST_CASE("arc-witness transports the base arc") {
  RunResult up = run_cli({"arc-witness", "--to", "2,5,plus-to-minus"});
  REQUIRE(up.code == 0);
  Json j = up.json();
  CHECK(j["results"]["flavour"] == "up");
  CHECK(j["results"]["matches_target"] == true);
  CHECK(j["results"]["image_is_edge"] == true);
  CHECK(j["results"]["image"] == Json::parse(R"([["2/1","+"],["5/1","-"]])"));

  RunResult down = run_cli({"arc-witness", "--to", "5,2,minus-to-plus"});
  REQUIRE(down.code == 0);
  CHECK(down.json()["results"]["flavour"] == "down");
  CHECK(down.json()["results"]["matches_target"] == true);
  CHECK(down.json()["results"]["image_is_edge"] == true);

  CHECK(run_cli({"arc-witness", "--to", "2,5,minus-to-plus"}).code == 2);
  CHECK(run_cli({"arc-witness", "--to", "5,5,plus-to-minus"}).code == 2);
  CHECK(run_cli({"arc-witness", "--to", "2,5"}).code == 2);
  CHECK(run_cli({"arc-witness", "--to", "2,5,sideways"}).code == 2);
}

TEST_CASE("refute order mode emits a replayable transcript") {
  TempFile spec("qhalf_cli_aba.json", kAbaSpec);
  RunResult r = run_cli({"refute", "--spec", spec.str(), "--samples", "50"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["pass"] == true);
  CHECK(j["results"]["transcript"]["seed"] == Json::parse(R"(["1/2","2/3"])"));
  CHECK(j["results"]["transcript"]["region"]["interval"]["lower"] == "0/1");
  CHECK(j["results"]["transcript"]["region"]["interval"]["upper"] == "1/1");
  CHECK(j["results"]["transcript"]["report"]["pass"] == true);
  CHECK(j["results"]["transcript"]["report"]["queries"] == 200);

  RunResult again = run_cli({"refute", "--spec", spec.str(), "--samples", "50"});
  CHECK(again.out == r.out);
}

TEST_CASE("refute graph mode audits the lift") {
  TempFile cplus("qhalf_cli_cplus.json", kAbaSpec);
  TempFile cminus("qhalf_cli_cminus.json", kDenom2Spec);
  RunResult r = run_cli({"refute", "--cplus", cplus.str(), "--cminus", cminus.str(),
                         "--budget", "10000", "--samples", "50"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["results"]["refutation"]["pair_spec"]["alphabet"] == 4);
  CHECK(j["results"]["refutation"]["pass"] == true);
  CHECK(j["results"]["refutation"]["moved_points"].get<int>() >= 1);
  CHECK(j["results"]["transcript"]["report"]["pass"] == true);
  CHECK(j["pass"] == true);

  TempFile spec("qhalf_cli_spec.json", kAbaSpec);
  CHECK(run_cli({"refute", "--spec", spec.str(), "--cplus", cplus.str(),
                 "--cminus", cminus.str()})
            .code == 2);
  CHECK(run_cli({"refute", "--cplus", cplus.str()}).code == 2);
  CHECK(run_cli({"refute"}).code == 2);
}

TEST_CASE("refute reports sampling failures as check failures") {
  std::string residues = "[0";
  for (int i = 1; i < 50; ++i) residues += "," + std::to_string(i);
  residues += "]";
  TempFile spec("qhalf_cli_d50.json",
                R"({"kind":"denom_mod","m":50,"residues":)" + residues +
                    R"(,"alphabet":50})");
  RunResult r = run_cli({"refute", "--spec", spec.str(), "--budget", "20"});
  CHECK(r.code == 1);
  Json j = r.json();
  CHECK(j["command"] == "refute");
  CHECK(j["pass"] == false);
  CHECK(j.contains("error"));
}

TEST_CASE("the stamp is appended after the deterministic body") {
  RunResult plain = run_cli({"check", "lemmas", "--support", "0,1"});
  RunResult stamped = run_cli({"--stamp", "check", "lemmas", "--support", "0,1"});
  REQUIRE(plain.code == 0);
  REQUIRE(stamped.code == 0);
  Json pj = plain.json();
  Json sj = stamped.json();
  REQUIRE(sj.contains("stamp"));
  std::regex iso("^\\d{4}-\\d{2}-\\d{2}T\\d{2}:\\d{2}:\\d{2}Z$");
  CHECK(std::regex_match(sj["stamp"].get<std::string>(), iso));
  sj.erase("stamp");
  CHECK(pj == sj);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"aut", "enumerate"}).code == 2);
  CHECK(run_cli({"aut", "enumerate", "/nonexistent/graph.json"}).code == 2);
  CHECK(run_cli({"refute", "--spec", "/nonexistent/spec.json"}).code == 2);
  CHECK(run_cli({"distnum", "x.json", "--max-colours", "0"}).code == 2);

  TempFile bad("qhalf_cli_bad.json", "{ not json");
  CHECK(run_cli({"aut", "enumerate", bad.str()}).code == 2);
  TempFile wrong("qhalf_cli_wrong.json", R"({"kind":"mystery","alphabet":2})");
  CHECK(run_cli({"refute", "--spec", wrong.str()}).code == 2);

  TempFile spec("qhalf_cli_aba2.json", kAbaSpec);
  CHECK(run_cli({"refute", "--spec", spec.str(), "--samples", "1"}).code == 2);

  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}
