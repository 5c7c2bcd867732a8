// End-to-end tests driving the installed binary through a shell, checking
// exit codes and exact bytes on stdout.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd =
      std::string(SIMULPRIME_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, n);
  }
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  result.code = WEXITSTATUS(status);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("check maps verdicts to exit codes") {
  CHECK(run("check --form wilson --p 7").code == 0);
  CHECK(run("check --form wilson --p 8").code == 3);
  CHECK(run("check --form twin-a --p 4").code == 2);   // outside the domain
  CHECK(run("check --form nosuch --p 7").code == 2);
  CHECK(run("check --form named:quad --p 5").code == 0);
  CHECK(run("check --form quad --p 7").code == 3);
}

TEST_CASE("check emits the exact witness when it fits the cap") {
  const RunResult r = run("check --form quad --p 5 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(lines_of(r.out).at(0));
  CHECK(j["form"] == "quad");
  CHECK(j["verdict"] == true);
  CHECK(j["witness"] == "76020");
  CHECK(j["targets"] == nlohmann::json::array({"5", "7", "11", "13"}));

  // wilson at 23 must report exactly 22! + 1
  const RunResult w = run("check --form wilson --p 23 --format json");
  REQUIRE(w.code == 0);
  mpz_class expected;
  mpz_fac_ui(expected.get_mpz_t(), 22);
  expected += 1;
  const auto wj = nlohmann::json::parse(lines_of(w.out).at(0));
  CHECK(wj["witness"] == expected.get_str());
  CHECK(wj["residue"] == "0");
  CHECK(wj["modulus"] == "23");

  // beyond the cap the verdict stands but the witness is omitted
  const RunResult capped =
      run("check --form wilson --p 23 --witness-cap 10 --format json");
  REQUIRE(capped.code == 0);
  CHECK_FALSE(nlohmann::json::parse(lines_of(capped.out).at(0))
                  .contains("witness"));
}

TEST_CASE("scan lists exactly the verdict-true bases") {
  const RunResult r = run("scan --form twin-a --range 3..20 --format csv");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "p,targets,form,verdict,residue,modulus,reason");
  CHECK(lines[1] == "3,3;5,twin-a,true,0,15,ok");
  CHECK(lines[2] == "5,5;7,twin-a,true,0,35,ok");
  CHECK(lines[3] == "11,11;13,twin-a,true,0,143,ok");
  CHECK(lines[4] == "17,17;19,twin-a,true,0,323,ok");
}

TEST_CASE("scan output does not depend on the worker count") {
  const std::string base = "scan --form twin-b --range 3..500 --format json";
  const RunResult one = run(base + " --jobs 1");
  const RunResult eight = run(base + " --jobs 8");
  REQUIRE(one.code == 0);
  REQUIRE(eight.code == 0);
  CHECK(one.out == eight.out);
  CHECK_FALSE(one.out.empty());
}

TEST_CASE("scan hits survive a round trip through check") {
  const RunResult r = run("scan --form quad --range 3..110 --format json");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);  // 5, 11, 101
  for (const std::string& line : lines) {
    const auto j = nlohmann::json::parse(line);
    const std::string p = j["p"].get<std::string>();
    CHECK(run("check --form quad --p " + p).code == 0);
  }
}

TEST_CASE("verify agrees with the oracle end to end") {
  const RunResult r = run("verify --form twin-b --range 3..300");
  CHECK(r.code == 0);
  CHECK(r.out.find("mismatches  0") != std::string::npos);

  const RunResult j = run("verify --form twin-b --range 3..300 --format json");
  REQUIRE(j.code == 0);
  const auto report = nlohmann::json::parse(j.out);
  CHECK(report["ok"] == true);
  CHECK(report["checked"] == 149);  // odd bases in [3, 300]
  CHECK(report["mismatches"].empty());
}

TEST_CASE("the registry listing is complete and stable") {
  const RunResult r = run("list-criteria");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("simionov:k") != std::string::npos);
  CHECK(r.out.find("2 ≤ p, 1 ≤ k ≤ p") != std::string::npos);
  CHECK(r.out.find("Example 5") != std::string::npos);
  CHECK(r.out.find("General Theorem") != std::string::npos);

  const RunResult again = run("list-criteria");
  CHECK(again.out == r.out);

  const RunResult json = run("list-criteria --format json");
  REQUIRE(json.code == 0);
  bool saw_quad = false;
  for (const std::string& line : lines_of(json.out)) {
    const auto j = nlohmann::json::parse(line);
    if (j["id"] == "quad") {
      saw_quad = true;
      CHECK(j["pattern"] == "0,2,6,8");
      CHECK(j["source"] == "Example 5");
    }
  }
  CHECK(saw_quad);
}

TEST_CASE("bench times forms against the sieve") {
  const RunResult r =
      run("bench --forms clement,twin-a --range 3..400 --format csv");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "form,lo,hi,candidates,hits,form_ms,sieve_ms,ratio");
  CHECK(lines[1].rfind("clement,3,400,199,", 0) == 0);
  CHECK(lines[2].rfind("twin-a,3,400,199,", 0) == 0);

  CHECK(run("bench --forms twin-a --range 3..3").code == 0);
  CHECK(run("bench --forms nosuch --range 3..9").code == 2);
  CHECK(run("bench --forms twin-a --range 9..3").code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("").code == 2);                       // no subcommand
  CHECK(run("frobnicate").code == 2);             // unknown subcommand
  CHECK(run("check --form wilson").code == 2);    // --p missing
  CHECK(run("check --p 7").code == 2);            // --form missing
  CHECK(run("scan --form wilson --range 5").code == 2);      // not lo..hi
  CHECK(run("scan --form wilson --range 9..3").code == 2);   // hi < lo
  CHECK(run("scan --form wilson --range a..b").code == 2);
  CHECK(run("check --form wilson --p 7 --format yaml").code == 2);
  CHECK(run("check --form wilson --p -5").code == 2);
  CHECK(run("check --form simionov --p 7").code == 2);       // k missing
  CHECK(run("check --form T --p 5").code == 2);              // pattern missing
  CHECK(run("--help").code == 0);
  CHECK(run("check --help").code == 0);
}

TEST_CASE("combined forms work through the flags") {
  const std::string tuple = "--pattern 0,2,6,8";
  CHECK(run("check --form T " + tuple + " --p 5").code == 0);
  CHECK(run("check --form T " + tuple + " --p 7").code == 3);
  CHECK(run("check --form U:2 " + tuple + " --p 5").code == 0);
  CHECK(run("check --form V:3 " + tuple + " --p 5").code == 0);
  CHECK(run("check --form W " + tuple + " --p 5").code == 0);
  CHECK(run("check --form divisor " + tuple + " --d 77 --p 5").code == 0);
  CHECK(run("check --form divisor " + tuple + " --d 3 --p 5").code == 2);
  CHECK(run("check --form simionov --k 4 --p 7").code == 0);

  // scanning a combined form over a range
  const RunResult r =
      run("scan --form W " + tuple + " --range 3..110 --format json");
  REQUIRE(r.code == 0);
  std::vector<std::string> bases;
  for (const std::string& line : lines_of(r.out)) {
    bases.push_back(nlohmann::json::parse(line)["p"].get<std::string>());
  }
  CHECK(bases == std::vector<std::string>{"5", "11", "101"});
}
