#include "quadop/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace quadop;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content)
      : path("/tmp/quadop_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dims text output") {
  const Run r = run({"dims", "g4ass", "--max-arity", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "operad: g4ass\nP(1) = 1\nP(2) = 2\nP(3) = 9\nP(4) = 61\n");
  CHECK(r.err.empty());
}

TEST_CASE("identical invocations produce byte-identical output") {
  for (auto args : {std::vector<std::string>{"dims", "vinb"},
                    std::vector<std::string>{"series", "g5ass", "--format", "json"},
                    std::vector<std::string>{"dual", "lieadm"},
                    std::vector<std::string>{"koszul", "prelie"}}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("dual report for the alternating presentation") {
  const Run r = run({"dual", "lieadm"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "dual relations dim: 11"));
  CHECK(contains(r.out, "associativity: ok"));
  CHECK(contains(r.out, "abc=acb: ok"));
  CHECK(contains(r.out, "abc=bac: ok"));
  CHECK(contains(r.out, "result: ok"));
}

TEST_CASE("koszul verdicts and notes") {
  const Run pass = run({"koszul", "ass"});
  CHECK(pass.code == 0);
  CHECK(contains(pass.out, "verdict: PASS"));
  CHECK(contains(pass.out, "PASS does not prove Koszulity"));

  const Run g4 = run({"koszul", "g4ass"});
  CHECK(g4.code == 0);
  CHECK(contains(g4.out, "dual dims: 1 2 3 1"));
  CHECK(contains(g4.out, "cannot be a dimension coefficient"));
}

TEST_CASE("series verb emits the generating series") {
  const Run r = run({"series", "ass"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "g(x) = -x + x^2 - x^3 + x^4"));
}

TEST_CASE("expand-report lists per-arity statistics") {
  const Run r = run({"expand-report", "ass", "--max-arity", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "arity 3: free dim 12, spanning vectors 6, ideal dim 6, operad dim 6"));
  CHECK(contains(r.out, "arity 4: free dim 120"));
  CHECK(contains(r.out, "ideal dim 96, operad dim 24"));
}

TEST_CASE("json output round-trips") {
  const Run r = run({"dims", "g5ass", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "g5ass");
  CHECK(j["dims"]["3"] == 10);
  CHECK(j["dims"]["4"] == 81);
  CHECK(j["verdict"].is_null());
  CHECK(nlohmann::json::parse(j.dump()) == j);

  const Run s = run({"series", "g4ass", "--format", "json"});
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js["series"]["3"] == "-3/2");
  CHECK(js["series"]["4"] == "61/24");

  const Run k = run({"koszul", "g4ass", "--format", "json"});
  const auto jk = nlohmann::json::parse(k.out);
  CHECK(jk["verdict"] == "PASS");
  CHECK(jk["dual_dims"]["4"] == 1);
  CHECK(jk["notes"].size() == 3);
}

TEST_CASE("presentation files work as targets") {
  const TempFile file("ass.pres", "relation: 1 (1 (2 3)) - 1 ((1 2) 3)\n");
  const Run r = run({"dims", file.path, "--max-arity", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "P(4) = 24"));
  CHECK(contains(r.out, "closure: 1 parsed relations, input span dim 1, closed dim 6"));

  const Run dual = run({"dual", file.path});
  CHECK(dual.code == 0);
  CHECK(contains(dual.out, "dual relations dim: 6"));
}

TEST_CASE("structure-constant files drive the check verb") {
  const TempFile file("cross.alg",
                      "dim: 3\nc 1 2 3 = 1/2\nc 2 1 3 = -1/2\nc 2 3 1 = 1/2\n"
                      "c 3 2 1 = -1/2\nc 3 1 2 = 1/2\nc 1 3 2 = -1/2\n");
  const Run r = run({"check", file.path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "G1-associative: no"));
  CHECK(contains(r.out, "G5-associative: yes"));
  CHECK(contains(r.out, "G6-associative: yes"));
  CHECK(contains(r.out, "lie-admissible: yes"));
  CHECK(contains(r.out, "commutator satisfies Jacobi: yes"));

  const Run j = run({"check", file.path, "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["identities"][5]["name"] == "G6-associative");
  CHECK(parsed["identities"][5]["holds"] == true);
}

TEST_CASE("exit code 2 for malformed invocations and files") {
  CHECK(run({"frobnicate", "ass"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"dims"}).code == 2);

  const TempFile bad("bad.pres", "relation: 1 ((1 2) 3\n");
  const Run r = run({"dims", bad.path});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(contains(r.err, "parse error"));
}

TEST_CASE("exit code 3 for invalid inputs") {
  CHECK(run({"dims", "nosuchoperad"}).code == 3);
  CHECK(run({"dims", "ass", "--max-arity", "6"}).code == 3);
  CHECK(run({"dims", "ass", "--max-arity", "2"}).code == 3);
  CHECK(run({"dims", "ass", "--format", "yaml"}).code == 3);

  const TempFile bad("bad.alg", "dim: 11\n");
  CHECK(run({"check", bad.path}).code == 3);
}

TEST_CASE("warnings go to the error stream") {
  const TempFile file("zero.pres",
                      "relation: 1 ((1 2) 3) - 1 ((1 2) 3)\n"
                      "relation: 1 (1 (2 3)) - 1 ((1 2) 3)\n");
  const Run r = run({"dims", file.path});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "warning"));
  CHECK(contains(r.err, "line 1"));
  CHECK_FALSE(contains(r.out, "warning"));
}

TEST_CASE("help is available") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "dims"));
  CHECK(contains(r.out, "koszul"));
}
