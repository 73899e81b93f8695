#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "bvalg/cli.hpp"
#include "bvalg/fixtures.hpp"
#include "helpers.hpp"

using namespace bvalg;
using bvalg::testing::source_path;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Diagnostic> diagnostics_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.diagnostics;
  }
  return {};
}

std::vector<std::string> shipped_fixtures() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(source_path("fixtures")))
    out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}

TEST_SUITE("dsl-cli") {

TEST_CASE("the sphere presentation parses") {
  PresentationSource p =
      parse_presentation("field Q\nshift n=2\ngen a : 3\ngen b : 6\nbracket [a,a] = b\ntruncate 12");
  CHECK(p.shift == 2);
  CHECK(p.truncate == 12);
  CHECK(to_lie_presentation(p) == sphere_loop_lie(4, 2));
}

TEST_CASE("negative degrees") {
  auto d = diagnostics_of("field Q\ngen a : -1\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].line == 2);
  CHECK(d[0].message == "degree must be ≥ 0");
}

TEST_CASE("bracket degree mismatch") {
  auto d = diagnostics_of("field Q\nshift n=2\ngen a : 3\ngen b : 6\nbracket [a,b] = a\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].line == 5);
  CHECK(d[0].message == "bracket degree 9 expected, got 3");
}

TEST_CASE("bracket degree in a structure file") {
  auto d = diagnostics_of("field Q\nshift n=2\ngen a : 2\ngen b : 5\nbracket [a,b] = a\nbv a = 0\n");
  REQUIRE(d.size() == 1);
  CHECK(d[0].message == "bracket degree 8 expected, got 2");
}

TEST_CASE("malformed numbers and undeclared symbols are all reported") {
  auto d = diagnostics_of("field Q\ngen a : 2\nbracket [a,a] = 1/0*a\nbracket [a,c] = a\ngen b : x\n");
  REQUIRE(d.size() == 3);
  CHECK(d[0].line == 3);
  CHECK(d[0].message == "malformed number '1/0'");
  CHECK(d[1].line == 4);
  CHECK(d[1].message == "undeclared symbol 'c'");
  CHECK(d[2].line == 5);
}

TEST_CASE("duplicates and modes") {
  CHECK(diagnostics_of("gen a : 1\ngen a : 2\n").size() == 1);
  CHECK(diagnostics_of("shift n=2\ngen a : 2\ngen b : 3\ndiff d a = b\nbv a = b\n").size() == 1);
  CHECK(diagnostics_of("field F4\n").size() == 1);
  CHECK(diagnostics_of("# only a comment\n\n").empty());
}

TEST_CASE("element expressions") {
  FreeAlgebra alg(FieldSpec::rational(), {{"a", 2}, {"b", 5}});
  CHECK(alg.render(parse_element("a * a - 1/2*b + b", alg)) == "a^2 + 1/2*b");
  CHECK(parse_element("0", alg).is_zero());
  CHECK_THROWS_AS(parse_element("a +", alg), ParseError);
}

TEST_CASE("shipped fixtures round-trip") {
  auto files = shipped_fixtures();
  CHECK(files.size() >= 5);
  for (const auto& f : files) {
    CAPTURE(f);
    PresentationSource p = parse_presentation(bvalg::testing::slurp(f));
    std::string once = render_presentation(p);
    PresentationSource q = parse_presentation(once);
    CHECK(q == p);
    CHECK(render_presentation(q) == once);
  }
}

TEST_CASE("exit codes") {
  CHECK(cli({"ce-homology", source_path("fixtures/heisenberg.lie")}).code == 0);
  CHECK(cli({"check-bv", source_path("fixtures/bad-square.bv")}).code == 1);
  Run bad = cli({"check-lie", source_path("tests/data/bad-bracket.lie")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find(":5:") != std::string::npos);
  CHECK(cli({"check-lie", "/nonexistent.lie"}).code == 2);
  CHECK(cli({"fixture", "nope"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"descriptor", "--n", "3", "--field", "F2"}).code == 2);
}

TEST_CASE("heisenberg betti line") {
  Run r = cli({"ce-homology", source_path("fixtures/heisenberg.lie")});
  CHECK(r.out.find("betti: 1 2 2 1\n") != std::string::npos);
}

TEST_CASE("fixture reports") {
  Run s = cli({"fixture", "loopspace:2:4", "--verify", "--max-degree", "10"});
  CHECK(s.code == 0);
  CHECK(s.out.find("FAIL") == std::string::npos);

  Run f = cli({"fixture", "omega2-s3-f2", "--max-degree", "2", "--verify"});
  CHECK(f.code == 0);
  CHECK(f.out.find("BV(u1) = u1^2 (mod 2)\n") != std::string::npos);
  CHECK(f.out.find("coverage: 1/2") != std::string::npos);
}

TEST_CASE("values through the cli") {
  Run b = cli({"bracket", source_path("fixtures/omega2s4.lie"), "a", "a"});
  CHECK(b.out.find("{a,a} = b\n") != std::string::npos);
  Run v = cli({"free-bv", source_path("fixtures/omega2s4.lie"), "--apply", "a^3"});
  CHECK(v.out.find("BV(a^3) = 3*a*b\n") != std::string::npos);
}

TEST_CASE("json is byte-stable and carries certificates") {
  std::vector<std::string> args{"--format", "json", "check-bv", source_path("fixtures/bad-square.bv")};
  Run a = cli(args), b = cli(args);
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(!j["certificates"].empty());
  CHECK(j["coverage"].is_string());
  for (const auto& v : j["verdicts"])
    CHECK(v["checked"].is_string());
  CHECK(j.find("seconds") == j.end());
}

TEST_CASE("every failing exit carries a certificate") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "check-bv", source_path("fixtures/bad-square.bv")},
           {"--format", "json", "check-lie", source_path("tests/data/jacobi-fail.lie")}}) {
    Run r = cli(args);
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["certificates"].size() >= 1);
  }
}

TEST_CASE("json rendering of prime-field coefficients") {
  Run r = cli({"--format", "json", "fixture", "omega2-s3-f2", "--max-degree", "2"});
  auto j = nlohmann::json::parse(r.out);
  nlohmann::json expected = nlohmann::json::array({nlohmann::json::array({"u1^2", "1 (mod 2)"})});
  CHECK(j["values"][0]["value"] == expected);
  CHECK(j["betti"].empty());
}

}
