#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "specfock/cli.hpp"

using namespace specfock;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("decomp") {
  auto r = run({"decomp", "--n", "2", "--l", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["columns"].size() == 1);
  CHECK(j["columns"][0]["label"] == "2");
  CHECK(j["columns"][0]["entries"][1]["partition"] == "1,1");
  CHECK(j["columns"][0]["entries"][1]["poly"] == "q");

  auto empty = nlohmann::json::parse(run({"decomp", "--n", "0", "--l", "3"}).out);
  REQUIRE(empty["columns"].size() == 1);
  CHECK(empty["columns"][0]["label"] == "");

  auto tex = run({"decomp", "--n", "3", "--l", "3", "--format", "latex"});
  CHECK(tex.out.find("{l|cc}") != std::string::npos);
  CHECK(tex.out.find("$(2,1)$ & $q$ & $1$") != std::string::npos);

  auto csv = run({"decomp", "--n", "2", "--l", "2", "--format", "csv"});
  CHECK(csv.out == "partition,2\n2,1\n\"1,1\",q\n");

  auto left = nlohmann::json::parse(run({"decomp", "--n", "2", "--l", "2", "--convention", "left"}).out);
  CHECK(left["columns"][0]["entries"][0]["poly"] == "q^-1");

  CHECK(run({"decomp", "--n", "-1"}).code == 2);
  CHECK(run({"decomp", "--n", "3", "--l", "1"}).code == 2);
  CHECK(run({"decomp", "--n", "3", "--format", "xml"}).code == 2);
  CHECK(run({"decomp"}).code == 2);
  CHECK(run({"decomp", "--n", "abc"}).code == 2);
}

TEST_CASE("tilt and picture") {
  auto r = run({"tilt", "--p", "3", "--m", "37", "--mode", "modified"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["entries"].dump() ==
        R"([{"weight":37,"poly":"1"},{"weight":33,"poly":"q^2"},{"weight":19,"poly":"q"},{"weight":15,"poly":"q^3"}])");
  auto one = nlohmann::ordered_json::parse(run({"tilt", "--p", "3", "--m", "1"}).out);
  CHECK(one["entries"].dump() == R"([{"weight":1,"poly":"1"}])");

  auto pic = run({"tilt", "--p", "3", "--m", "37", "--format", "picture-text"});
  REQUIRE(pic.code == 0);
  auto ls = lines(pic.out);
  REQUIRE(ls.size() > 2);
  CHECK(std::count(ls[1].begin(), ls[1].end(), 'o') == 4);
  CHECK(pic.out.find("p^1-1=2 p^2-1=8 p^3-1=26") != std::string::npos);
  CHECK(run({"picture", "--p", "3", "--m", "37"}).out == pic.out);
  auto svg = run({"picture", "--p", "3", "--m", "37", "--format", "svg"});
  CHECK(svg.out.rfind("<svg", 0) == 0);
  CHECK(svg.out == run({"tilt", "--p", "3", "--m", "37", "--format", "picture-svg"}).out);

  auto p2 = run({"tilt", "--p", "2", "--m", "5", "--mode", "modified"});
  CHECK(p2.code == 2);
  CHECK(p2.err.find("p != 2") != std::string::npos);
  CHECK(run({"tilt", "--p", "2", "--m", "5", "--mode", "quantum"}).code == 0);
  CHECK(run({"tilt", "--p", "9", "--m", "5"}).code == 2);
  CHECK(run({"tilt", "--p", "3", "--m", "-4"}).code == 2);
}

TEST_CASE("fock apply") {
  auto r = run({"fock", "apply", "--l", "3", "--ops", "f0 f1", "--start", ""});
  REQUIRE(r.code == 0);
  CHECK(r.out == "(1)|2>\n");
  auto e = run({"fock", "apply", "--l", "2", "--ops", "e1", "--start", "2,1", "--format", "json"});
  REQUIRE(e.code == 0);
  auto j = nlohmann::json::parse(e.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["partition"] == "2");
  CHECK(j[0]["coeff"] == "1");
  CHECK(j[1]["partition"] == "1,1");
  CHECK(j[1]["coeff"] == "q");
  auto dp = run({"fock", "apply", "--l", "2", "--ops", "f0 f1^2", "--format", "json"});
  CHECK(nlohmann::json::parse(dp.out)[0]["partition"] == "2,1");
  CHECK(run({"fock", "apply", "--l", "3", "--ops", "f0 e0", "--start", ""}).out == "(1)|>\n");

  CHECK(run({"fock", "apply", "--l", "3", "--ops", "f3"}).code == 2);
  CHECK(run({"fock", "apply", "--l", "3", "--ops", "g1"}).code == 2);
  CHECK(run({"fock", "apply", "--l", "3", "--ops", "e1^2"}).code == 2);
  CHECK(run({"fock", "apply", "--l", "3", "--ops", "f1", "--start", "1,2"}).code == 2);
  CHECK(run({"fock", "apply", "--l", "3", "--ops", "f1", "--start", "2,,1"}).code == 2);
  CHECK(run({"fock", "apply", "--l", "3", "--ops", "f1", "--start", "-1"}).code == 2);
  CHECK(run({"fock"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "thm1", "--max-n", "6", "--max-l", "4"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() > 1);
  CHECK(ls[0] == "suite,instance,expected,got,pass");
  for (std::size_t k = 1; k < ls.size(); ++k) CHECK(ls[k].substr(ls[k].size() - 2) == ",1");

  for (const char* suite : {"thm3", "duality", "eq13", "bridge"})
    CHECK_MESSAGE(run({"verify", suite, "--max-n", "6"}).code == 0, suite);
  CHECK(run({"verify", "erdmann", "--p", "3", "--max-m", "60"}).code == 0);
  CHECK(run({"verify", "erdmann", "--p", "4", "--max-m", "60", "--mode", "quantum"}).code == 0);
  CHECK(run({"verify", "hecke", "--max-rank", "3", "--seed", "7"}).code == 0);

  auto eq5 = run({"verify", "eq5", "--max-n", "4", "--max-l", "2"});
  CHECK(eq5.code == 1);
  CHECK(eq5.out.find("eq5,G(2) l=2,q,q^-1,0") != std::string::npos);
  CHECK(eq5.out.find("eq5,G(1) l=2,1,1,1") != std::string::npos);

  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"verify", "thm1", "--max-n", "99"}).code == 2);
  CHECK(run({"verify", "hecke", "--max-rank", "7"}).code == 2);
  CHECK(run({"verify", "erdmann", "--p", "2"}).code == 2);
  CHECK(run({"verify", "thm1", "--jobs", "0"}).code == 2);
}

TEST_CASE("deterministic across runs and worker counts") {
  auto a = run({"verify", "thm3", "--max-n", "7", "--jobs", "1"});
  auto b = run({"verify", "thm3", "--max-n", "7", "--jobs", "3"});
  CHECK(a.out == b.out);
  auto h1 = run({"verify", "hecke", "--max-rank", "3", "--seed", "11", "--jobs", "1"});
  auto h2 = run({"verify", "hecke", "--max-rank", "3", "--seed", "11", "--jobs", "2"});
  CHECK(h1.out == h2.out);
  CHECK(h1.out != run({"verify", "hecke", "--max-rank", "3", "--seed", "12"}).out);
  CHECK(run({"decomp", "--n", "6", "--l", "3"}).out == run({"decomp", "--n", "6", "--l", "3"}).out);
}

TEST_CASE("csv quoting") {
  std::vector<cli::VerifyRow> rows{{"(2,1) l=2", "a\"b", "x", false}};
  CHECK(cli::verify_csv("s", rows) == "suite,instance,expected,got,pass\ns,\"(2,1) l=2\",\"a\"\"b\",x,0\n");
}

TEST_CASE("help") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
