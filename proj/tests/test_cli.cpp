#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "orbit/cli.hpp"
#include "orbit/presentation.hpp"

using namespace orbit;

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

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("presentation command") {
  const Run r = run({"presentation", "--group", "gn", "--n", "1", "--format", "text"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "generators: r(1,0)\n(no relators)\n");

  const Run zero = run({"presentation", "--n", "0"});
  CHECK(zero.code == kExitUsage);
  CHECK(zero.err.find("--n") != std::string::npos);
  CHECK(run({"presentation", "--n", "2", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"presentation"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);

  for (const std::string group : {"gn", "pn"}) {
    const Run j = run({"presentation", "--group", group, "--n", "3", "--format", "json"});
    CHECK(j.code == kExitOk);
    const Presentation expected = group == "gn" ? orbit_presentation(3) : artin_presentation(3);
    CHECK(parse_json(j.out) == expected);
    CHECK(nlohmann::json::parse(j.out)["schema_version"] == 1);
  }
  const Run gap = run({"presentation", "--n", "2", "--format", "gap"});
  CHECK(gap.out.find("FreeGroup(") != std::string::npos);
}

TEST_CASE("comb command") {
  const Run r = run({"comb", "--group", "gn", "--n", "2", "--word", "r(1,0) r(2,0)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "level 2: r(2,0)\nlevel 1: r(1,0)\n");
  const Run id = run({"comb", "--n", "2", "--word", "1"});
  CHECK(id.out == "level 2: 1\nlevel 1: 1\n");
  const Run j = run({"comb", "--n", "2", "--word", "r(1,0) r(2,0)", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["schema_version"] == 1);
  CHECK(parsed["levels"][0]["word"] == "r(2,0)");
  CHECK(run({"comb", "--n", "2", "--word", "r(3,0)"}).code == kExitUsage);
  CHECK(run({"comb", "--n", "2", "--word", "q(1)"}).code == kExitUsage);
  CHECK(run({"comb", "--n", "2", "--word", "r(1,0)", "--word-cap", "0"}).code == kExitUsage);

  const Run capped = run({"comb", "--n", "3", "--word-cap", "5", "--word",
                          "r(2,2) r(1,0) r(2,1) r(3,4) r(2,2)^-1 r(3,3) r(2,2) r(1,0) r(2,1) r(3,4)"});
  CHECK(capped.code == kExitWordSize);
  CHECK(capped.err.find("intermediate length") != std::string::npos);

  const Run printed = run({"comb", "--n", "3", "--relation-text", "as-printed", "--word", "r(2,2)^-1 r(3,4)"});
  CHECK(printed.code == kExitCheckFailed);
}

TEST_CASE("verify command") {
  const Run center = run({"verify", "--suite", "center", "--n", "3"});
  CHECK(center.code == kExitOk);
  CHECK(count(center.out, "commutes with Theta") == 9);
  CHECK(count(center.out, "FAIL") == 0);
  CHECK(center.out.find("all checks passed") != std::string::npos);

  const Run pn = run({"verify", "--suite", "center", "--group", "pn", "--n", "4"});
  CHECK(pn.code == kExitOk);

  const Run rel = run({"verify", "--suite", "relators", "--n", "3", "--samples", "20"});
  CHECK(rel.code == kExitOk);
  CHECK(rel.out.rfind("seed: 0\n", 0) == 0);
  CHECK(count(rel.out, "PASS relator") == orbit_presentation(3).relators.size());

  for (const std::string s : {"s2", "rp2"}) {
    CHECK(run({"verify", "--suite", "exactness", "--surface", s, "--n", "4"}).code == kExitOk);
    CHECK(run({"verify", "--suite", "quotient", "--surface", s, "--n", "4"}).code == kExitOk);
    CHECK(run({"verify", "--suite", "split", "--surface", s, "--n", "3"}).code == kExitOk);
  }
  const Run strict = run({"verify", "--suite", "exactness", "--surface", "s2", "--n", "3", "--strict-corollary"});
  CHECK(strict.code == kExitCheckFailed);
  CHECK(strict.out.find("FAIL strict corollary") != std::string::npos);

  CHECK(run({"verify", "--suite", "theta", "--n", "3", "--samples", "30"}).code == kExitOk);
  CHECK(run({"verify", "--suite", "nope", "--n", "3"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "exactness", "--surface", "s2", "--n", "2"}).code == kExitUsage);
}

TEST_CASE("randomized suites are reproducible from the seed") {
  for (const std::string suite : {"relators", "theta"}) {
    const std::vector<std::string> args{"verify", "--suite", suite, "--n", "3", "--seed", "12345", "--samples", "25"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("seed: 12345\n", 0) == 0);
  }
  const Run t1 = run({"verify", "--suite", "theta", "--n", "3", "--seed", "1", "--samples", "25"});
  const Run t2 = run({"verify", "--suite", "theta", "--n", "3", "--seed", "2", "--samples", "25"});
  CHECK(t1.out != t2.out);
}

TEST_CASE("abelianize command") {
  CHECK(run({"abelianize", "--n", "3"}).out == "Z^9\n");
  CHECK(run({"abelianize", "--n", "3", "--quotient"}).out == "Z^8 x Z/2\n");
  CHECK(run({"abelianize", "--group", "pn", "--n", "2", "--quotient"}).out == "Z/2\n");
  const Run j = run({"abelianize", "--n", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["free_rank"] == 4);
}

TEST_CASE("boundary command") {
  const Run s2 = run({"boundary", "--surface", "s2", "--n", "3", "--abelianized"});
  CHECK(s2.code == kExitOk);
  CHECK(s2.out.find("smith: (1,1,2)") != std::string::npos);
  CHECK(s2.out.find("cokernel: Z/2") != std::string::npos);
  CHECK(s2.out.find("-z0 -> (A(1,2)^-1 A(1,2)^-1; (1,1))") != std::string::npos);

  const Run rp2 = run({"boundary", "--surface", "rp2", "--n", "2", "--abelianized", "--format", "json"});
  const auto j = nlohmann::json::parse(rp2.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["smith"] == nlohmann::json::array({"1", "2"}));
  CHECK(j["images"].size() == 2);

  const Run strict = run({"boundary", "--surface", "s2", "--n", "3", "--strict-corollary"});
  CHECK(strict.code == kExitCheckFailed);
  CHECK(strict.out.find("differs") != std::string::npos);
  CHECK(run({"boundary", "--surface", "rp2", "--n", "3", "--strict-corollary"}).code == kExitOk);
  CHECK(run({"boundary", "--surface", "torus", "--n", "3"}).code == kExitUsage);
  CHECK(run({"boundary", "--n", "3"}).code == kExitUsage);
}
