#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "acn/cli.hpp"
#include "acn/dsl.hpp"
#include "csv_reader.hpp"

using namespace acn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fixture_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "acn_cli_test";
    fs::create_directories(d);
    for (auto stage : {FigureStage::A, FigureStage::B, FigureStage::C, FigureStage::D}) {
      std::ofstream(d / (std::string("stage") + stage_letter(stage) + ".acn"))
          << serialize_system(figure_system(stage));
    }
    std::ofstream(d / "broken.acn") << "food: f1\nreaction R1: f1 -> d1 cat q7\n";
    return d;
  }();
  return dir;
}

std::string fixture(const char* name) { return (fixture_dir() / name).string(); }

bool single_error_line(const std::string& err) {
  return err.rfind("error:", 0) == 0 && err.find('\n') == err.size() - 1;
}

}  // namespace

TEST_CASE("analyze lists the maxRAF with and without stimuli") {
  const auto r = run({"analyze", fixture("stageD.acn")});
  CHECK(r.code == 0);
  CHECK(r.out.find("max RAF with stimuli: {R1, R2, R3}") != std::string::npos);
  CHECK(r.out.find("max RAF without stimuli: {R1, R2, R3}") != std::string::npos);
  CHECK(r.out.find("verdict: SELF_SUSTAINING") != std::string::npos);
}

TEST_CASE("classify prints the verdict") {
  CHECK(run({"classify", fixture("stageA.acn")}).out == "TRANSIENT\n");
  CHECK(run({"classify", fixture("stageC.acn")}).out == "TRANSIENT\n");
  CHECK(run({"classify", fixture("stageD.acn")}).out == "SELF_SUSTAINING\n");
}

TEST_CASE("grow reproduces the stage D scenario") {
  const auto r = run({"grow", fixture("stageD.acn"), "--stimulus", "s=0..3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("tick present fired\n0 f1,f2 -\n1 d1,f1,f2 R1\n", 0) == 0);
  CHECK(r.out.find("  d3 3\n") != std::string::npos);
  CHECK(r.out.find("self_sustaining_from: 2\n") != std::string::npos);

  const auto csv = run({"grow", fixture("stageD.acn"), "--stimulus", "s=0..3", "--csv"});
  const auto rows = testing::read_csv_strict(csv.out);
  CHECK(rows[0] == std::vector<std::string>{"tick", "present", "fired"});
  CHECK(rows[2] == std::vector<std::string>{"1", "d1,f1,f2", "R1"});
}

TEST_CASE("percolate emits a strict CSV table") {
  const auto r = run({"percolate", "--nodes", "5000", "--trials", "4", "--steps", "20", "--seed",
                      "0", "--csv"});
  REQUIRE(r.code == 0);
  const auto rows = testing::read_csv_strict(r.out);
  CHECK(rows.size() == 21);
  CHECK(rows[0] == std::vector<std::string>{"control", "observable", "trials"});
  CHECK(rows[1][2] == "4");
  CHECK(r.err.rfind("transition_estimate: ", 0) == 0);
}

TEST_CASE("structured output round-trips through a JSON parser") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"analyze", fixture("stageD.acn"), "--structured"},
           {"classify", fixture("stageA.acn"), "--structured"},
           {"grow", fixture("stageD.acn"), "--stimulus", "s=0..3", "--structured"},
           {"rafsweep", "--trials", "20", "--structured"},
           {"fixtures", "--structured"}}) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
  }
  const auto j = nlohmann::json::parse(
      run({"grow", fixture("stageD.acn"), "--stimulus", "s=0..3", "--structured"}).out);
  CHECK(j["self_sustaining_from"] == 2);
  CHECK(j["first_appearance"]["d2"] == 2);
  CHECK(j["input_digest"].get<std::string>().size() == 16);
}

TEST_CASE("fixtures write parseable files") {
  const auto dir = fs::temp_directory_path() / "acn_fixture_out";
  fs::remove_all(dir);
  const auto r = run({"fixtures", "--out-dir", dir.string()});
  CHECK(r.code == 0);
  CHECK(run({"classify", (dir / "stageA.acn").string()}).out == "TRANSIENT\n");
  CHECK(run({"classify", (dir / "stageD.acn").string()}).out == "SELF_SUSTAINING\n");

  const auto all = run({"fixtures"});
  CHECK(all.out.find("# stageB\n") != std::string::npos);
  const auto one = run({"fixtures", "--stage", "A"});
  CHECK(parse_system(one.out) == figure_system(FigureStage::A));
}

TEST_CASE("exit codes and diagnostics") {
  SUBCASE("input errors exit 1") {
    auto r = run({"classify", fixture("missing.acn")});
    CHECK(r.code == 1);
    CHECK(single_error_line(r.err));

    r = run({"analyze", fixture("broken.acn")});
    CHECK(r.code == 1);
    CHECK(single_error_line(r.err));
    CHECK(r.err.find("broken.acn:2:27: unknown element 'q7'") != std::string::npos);

    r = run({"grow", fixture("stageD.acn"), "--stimulus", "f1=0..3"});
    CHECK(r.code == 1);
    r = run({"rafsweep", "--p-list", "0,0.5,0.4"});
    CHECK(r.code == 1);
    r = run({"percolate", "--nodes", "1"});
    CHECK(r.code == 1);
    r = run({"fixtures", "--stage", "E"});
    CHECK(r.code == 1);
    CHECK(single_error_line(r.err));
  }
  SUBCASE("usage errors exit 2") {
    for (auto args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"classify"},
             {"percolate", "--nodes", "many"},
             {"percolate", "--criterion", "steepest"},
             {"rafsweep", "--p-list", "0,x"},
             {"grow", fixture("stageD.acn"), "--stimulus", "s:0-3"},
             {"classify", fixture("stageA.acn"), "--csv", "--structured"}}) {
      const auto r = run(args);
      CHECK(r.code == 2);
      CHECK(single_error_line(r.err));
    }
  }
  SUBCASE("help exits 0") { CHECK(run({"--help"}).code == 0); }
}

TEST_CASE("identical invocations give identical bytes") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"analyze", fixture("stageD.acn"), "--structured"},
           {"percolate", "--nodes", "3000", "--trials", "3", "--seed", "5"},
           {"rafsweep", "--trials", "30", "--seed", "2", "--csv"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("flag parsers") {
  CHECK(std::holds_alternative<MaxSlope>(cli::parse_criterion("max-slope")));
  CHECK(std::get<Crossing>(cli::parse_criterion("crossing:0.25")).threshold == 0.25);
  CHECK(cli::parse_p_list("0,0.5,1") == std::vector<double>{0.0, 0.5, 1.0});
  const auto [id, iv] = cli::parse_stimulus_flag("s=2..7");
  CHECK(id == "s");
  CHECK(iv == TickInterval{2, 7});
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::input_digest("") == "cbf29ce484222325");
}
