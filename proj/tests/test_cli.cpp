#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "splitegh/cli.hpp"

using namespace splitegh;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SPLITEGH_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_temp(const char* name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("hilbert") {
  auto r = run({"hilbert", data("pure_powers_222.prob")});
  CHECK(r.code == 0);
  CHECK(r.out == "1,3,3,1,0\n");
  CHECK(run({"hilbert", data("five_vars.prob"), "--maxdeg", "4"}).out == "1,5,8,3,0\n");
  auto j = nlohmann::json::parse(run({"hilbert", data("five_vars.prob"), "--json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["hilbert"] == nlohmann::json({1, 5, 8, 3, 0, 0, 0}));

  auto no_seq = write_temp("splitegh_noseq.prob", "vars: 2\nideal:\nx1^2\nx2^3\n");
  CHECK(run({"hilbert", no_seq}).code == 2);
  CHECK(run({"hilbert", no_seq, "--maxdeg", "4"}).out == "1,2,2,1,0\n");
}

TEST_CASE("egh") {
  auto r = run({"egh", data("five_vars.prob")});
  CHECK(r.code == 0);
  CHECK(r.out.find("x1*x4*x5\n") != std::string::npos);
  CHECK(r.out.find("H = 1,5,8,3,0 (matches input)\n") != std::string::npos);

  auto report = (std::filesystem::temp_directory_path() / "splitegh_report.json").string();
  auto rj = run({"egh", data("five_vars.prob"), "--report", report});
  CHECK(rj.code == 0);
  auto rep = nlohmann::json::parse(slurp(report));
  CHECK(rep["ok"] == true);
  CHECK(rep["hilbert_equal"] == true);
}

TEST_CASE("golden json") {
  for (auto [input, golden] : {std::pair{"five_vars.prob", "five_vars.json"}, std::pair{"six_vars.prob", "six_vars.json"}}) {
    auto r = run({"egh", data(input), "--json"});
    REQUIRE(r.code == 0);
    CHECK(r.out == slurp(std::string(SPLITEGH_GOLDEN_DIR) + "/" + golden));
    // and again, byte for byte
    CHECK(run({"egh", data(input), "--json"}).out == r.out);
  }
}

TEST_CASE("kk and lpp") {
  auto bad = run({"kk", "--hilbert", "1,3,7"});
  CHECK(bad.code == 1);
  CHECK(bad.out == "bound violated at d=1: 7 > 3\n");
  CHECK(run({"kk", "--hilbert", "1,5,8,3,0"}).code == 0);
  CHECK(run({"kk", "--hilbert", "1,x"}).code == 2);

  auto l = run({"lpp", "--hilbert", "1,5,8,3,0", "--powers", "2,2,2,2,2"});
  CHECK(l.code == 0);
  CHECK(l.out.find("x1*x4*x5\n") != std::string::npos);
  CHECK(run({"lpp", "--hilbert", "1,3,7", "--powers", "2,2,2"}).code == 1);
  auto lj = nlohmann::json::parse(run({"lpp", "--hilbert", "1,4,4,1,0", "--powers", "2,2,2,2", "--json"}).out);
  CHECK(lj["report"]["segments"][2] == nlohmann::json({"x1*x2", "x1*x3"}));
}

TEST_CASE("check-regseq and reduce") {
  CHECK(run({"check-regseq", data("five_vars.prob")}).code == 0);
  CHECK(run({"check-regseq", data("six_vars.prob")}).code == 0);
  auto bad = write_temp("splitegh_bad.prob", "vars: 2\nsequence:\n(x1)*(x2)\n(x2)*(x1 + x2)\n");
  auto r = run({"check-regseq", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("{1}") != std::string::npos);

  CHECK(run({"reduce", data("three_vars.prob"), "--poly", "x1^3 + x1^2*x2"}).out == "x1*x2*x3\n");
  CHECK(run({"reduce", data("three_vars.prob"), "--poly", "x1^2"}).out == "-x1*x2 - x1*x3\n");
  CHECK(run({"reduce", data("three_vars.prob"), "--poly", "x1^2 +"}).code == 2);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"hilbert", "/nonexistent/file.prob"}).code == 2);
  auto broken = write_temp("splitegh_broken.prob", "vars: 2\nideal:\nx1^2 +\n");
  auto r = run({"hilbert", broken, "--maxdeg", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3, column 6") != std::string::npos);
}
