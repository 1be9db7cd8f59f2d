#include "cli.hpp"

#include "celint/ring_json.hpp"
#include "celint/verify.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace celint;

namespace {

const std::string fixtures = CELINT_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "celint");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return fixtures + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("celint_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

} // namespace

TEST_CASE("integrate") {
  auto r = run({"integrate", fixture("p2_line.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "[V] + (5/2)*h + 2*h^2\n");
  CHECK(r.err.empty());

  r = run({"integrate", fixture("flop.json"), "--eval", "m=-2", "--manifest", "toX"});
  CHECK(r.code == 0);
  CHECK(r.out == "[X] + D\n");

  r = run({"integrate", fixture("flop.json"), "--eval", "m=0", "--manifest", "viaX+"});
  CHECK(r.out == "[X] + 3*D + 8*L + 6*p\n");

  // over the cusp point at m=0: -1/5 + 1/5 + 1/10 + 1/15
  r = run({"degree", fixture("cusp.json"), "--select", "closed:E3", "--eval", "m=0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/6\n");
}

TEST_CASE("zeta") {
  auto r = run({"zeta", fixture("cusp.json"), "--degree"});
  CHECK(r.code == 0);
  CHECK(r.out == "(15+6*m)/(5+6*m)\npoles: -5/6\n");

  r = run({"zeta", fixture("cusp.json"), "--manifest", "P2"});
  CHECK(r.out.find("degree: (15+6*m)/(5+6*m)\n") != std::string::npos);

  r = run({"zeta", fixture("cusp.json"), "--degree", "--format", "json"});
  auto j = Json::parse(r.out);
  CHECK(j.at("degree") == "(15+6*m)/(5+6*m)");
  CHECK(j.at("poles") == Json::array({"-5/6"}));
}

TEST_CASE("other verbs") {
  CHECK(run({"csm", fixture("cuspidal_cubic_csm.json"), "--manifest", "P2"}).out == "3*h + 2*h^2\n");
  CHECK(run({"degree", fixture("cusp.json"), "--eval", "m=1"}).out == "21/11\n");
  CHECK(run({"degree", fixture("k3_blowup.json")}).out == "24\n");

  auto ix = run({"ix", fixture("cone_stringy.json")});
  CHECK(ix.out == "X\\v: 1\nv: 2\nintegral: 6\n");

  CHECK(run({"stringy", "--dim", "3", "--mult", "2"}).out == "1\n");
  CHECK(run({"stringy", "--dim", "3", "--mult", "2", "--flavor", "Omega"}).out == "1/3\n");
  auto s = run({"stringy", fixture("flop.json"), "--manifest", "toX"});
  CHECK(s.code == 1);
  CHECK(s.err.find("PreconditionViolated") != std::string::npos);

  auto ring = run({"ring", fixture("rings/quadric_cone.json")});
  CHECK(ring.code == 0);
  CHECK(ring.out.find("codim 1: D\n") != std::string::npos);
}

TEST_CASE("json output round-trips") {
  auto r = run({"integrate", fixture("flop.json"), "--manifest", "toX", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  auto ring = ring_from_json(read_json_file(fixture("rings/quadric_cone.json"))).ring;
  auto parsed = class_from_json(ring, j);
  auto text = run({"integrate", fixture("flop.json"), "--manifest", "toX"});
  CHECK(parsed.to_string() + "\n" == text.out);
  CHECK(class_from_json(ring, Json(j.at("class"))) == parsed);

  auto ring_json = run({"ring", fixture("cusp.json"), "--format", "json"});
  auto again = ring_from_json(Json::parse(ring_json.out)).ring;
  CHECK(again->size() == 6);
}

TEST_CASE("determinism") {
  auto a = run({"integrate", fixture("flop.json"), "--manifest", "toX"});
  auto b = run({"integrate", fixture("flop.json"), "--manifest", "toX"});
  CHECK(a.out == b.out);

  auto s1 = run({"verify", "--suite", "key", "--suite", "denloe", "--instances", "6", "--seed", "11", "--format", "json"});
  auto s2 = run({"verify", "--suite", "key", "--suite", "denloe", "--instances", "6", "--seed", "11", "--jobs", "3",
                 "--format", "json"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(Json::parse(s1.out).at("seed") == 11);
}

TEST_CASE("exit codes") {
  CHECK(run({"integrate", fixture("missing.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"integrate", fixture("p2_line.json"), "--eval", "x=1"}).code == 2);
  CHECK(run({"integrate", fixture("p2_line.json"), "--manifest", "nowhere"}).code == 2);
  CHECK(run({"integrate", fixture("p2_line.json"), "--select", "closed:Q"}).code == 2);

  auto pole = run({"integrate", fixture("cusp.json"), "--eval", "m=-1"});
  CHECK(pole.code == 1);
  CHECK(pole.err.find("PoleError") != std::string::npos);
  CHECK(run({"stringy", "--dim", "2", "--mult", "3"}).code == 1);

  auto bad = temp_file("bad_literal.json", R"({"ring": {"type": "literal", "dim": 1, "basis": [["[C]"], ["pt"]],
    "degree": {}, "chern": "[C]"}, "components": []})");
  auto lit = run({"integrate", bad});
  CHECK(lit.code == 2);
  CHECK(lit.err.find("PresentationError") != std::string::npos);

  auto failing = temp_file("failing_check.json", R"({"ring": {"type": "blowup_point", "base": ")" +
                                                      fixture("rings/k3_lattice.json") + R"("},
    "components": [{"name": "E", "class": "e", "mult": 1}], "checks": [{"kind": "can_degree", "chi": 23}]})");
  auto v = run({"verify", failing});
  CHECK(v.code == 3);
  CHECK(v.out.find("FAIL can_degree") != std::string::npos);
}

TEST_CASE("regime warning") {
  auto path = temp_file("outside.json", R"({"ring": {"type": "projective", "n": 2},
    "components": [{"name": "D", "class": "h", "mult": -2}]})");
  auto r = run({"integrate", path});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(r.out == "[V] + h - h^2\n");
}
