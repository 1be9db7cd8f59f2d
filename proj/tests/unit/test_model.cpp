#include "celint/catalog.hpp"
#include "celint/config_json.hpp"
#include "celint/errors.hpp"
#include "celint/model.hpp"

#include <doctest.h>

using namespace celint;

namespace {

const std::filesystem::path fixtures = CELINT_FIXTURE_DIR;

ChowClass cls(const RingPtr& r, const char* s) { return ChowClass::parse(r, s); }

std::vector<std::string> abc() { return {"A", "B", "C"}; }

std::map<Subset, Rational> cusp_chi() {
  // D, E1, E2, E3 -> bits 0..3
  return {{0, 6}, {1, 2}, {2, 2}, {4, 2}, {8, 2}, {1 | 8, 1}, {2 | 8, 1}, {4 | 8, 1}};
}

} // namespace

TEST_CASE("stratum selections") {
  auto whole = StratumSelection::whole(abc());
  CHECK(whole.strata().size() == 8);

  auto closed_a = StratumSelection::from_closed(abc(), std::vector<std::string>{"A"});
  CHECK(closed_a.strata() == std::set<Subset>{1, 3, 5, 7});
  CHECK(closed_a.complement().strata() == std::set<Subset>{0, 2, 4, 6});

  auto closed_b = StratumSelection::from_closed(abc(), singleton(1));
  CHECK((closed_a & closed_b).strata() == std::set<Subset>{3, 7});
  CHECK((closed_a | closed_b).strata().size() == 6);
  CHECK((closed_a - closed_b).strata() == std::set<Subset>{1, 5});
  CHECK(StratumSelection::from_closed(abc(), Subset{0}).empty());

  CHECK(closed_a.to_string() == "{A}, {A,B}, {A,C}, {A,B,C}");
  CHECK(StratumSelection(abc()).to_string() == "(empty)");

  auto other = StratumSelection::whole({"A", "B"});
  CHECK_THROWS_AS((void)(closed_a | other), UniverseMismatch);
  CHECK_THROWS_AS(StratumSelection::from_closed(abc(), std::vector<std::string>{"Z"}), ConfigError);
}

TEST_CASE("selections from text and json") {
  auto names = abc();
  CHECK(selection_from_text("whole", names) == StratumSelection::whole(names));
  CHECK(selection_from_text("none", names).empty());
  CHECK(selection_from_text("closed:A,B", names) == StratumSelection::from_closed(names, Subset{3}));
  CHECK(selection_from_text("strata:;A;A,C", names).strata() == std::set<Subset>{0, 1, 5});
  CHECK_THROWS_AS(selection_from_text("closed:Q", names), ConfigError);
  CHECK_THROWS_AS(selection_from_text("open:A", names), ConfigError);

  Json j = Json::parse(R"({"difference": [{"whole": true}, {"closed": ["C"]}]})");
  CHECK(selection_from_json(j, names).strata() == std::set<Subset>{0, 1, 2, 3});
  j = Json::parse(R"({"complement": {"strata": [[], ["A"]]}})");
  CHECK(selection_from_json(j, names).strata().size() == 6);
  CHECK_THROWS_AS(selection_from_json(Json::parse(R"({"whole": true, "closed": []})"), names), ConfigError);
}

TEST_CASE("Euler characteristics of open strata") {
  auto open = chi_mobius(cusp_chi(), 4);
  CHECK(open.at(0) == 1);
  CHECK(open.at(8) == -1);
  CHECK(open.at(1) == 1);
  CHECK(open.at(2) == 1);
  CHECK(open.at(1 | 8) == 1);
  Rational total;
  for (const auto& [s, chi] : open) total += chi;
  CHECK(total == 6);
  CHECK(chi_closed_from_open(open, 4) == cusp_chi());
}

TEST_CASE("configuration validation") {
  auto p2 = ring_projective(2);
  auto p3 = ring_projective(3);
  CHECK_THROWS_AS(NCConfig(p2, {{"D", cls(p2, "h^2"), Multiplicity::of(1)}}), NotADivisor);
  CHECK_THROWS_AS(NCConfig(p2, {{"D", cls(p3, "h"), Multiplicity::of(1)}}), RingMismatch);
  CHECK_THROWS_AS(NCConfig(p2, {{"D", cls(p2, "h"), Multiplicity::of(-1)}}), UndefinedMultiplicity);
  CHECK_THROWS_AS(NCConfig(p2, {{"D", cls(p2, "h"), Multiplicity::of(1)}, {"D", cls(p2, "h"), Multiplicity::of(1)}}),
                  ConfigError);
  CHECK_THROWS_AS(NCConfig(p2, {{"D", cls(p2, "m*h"), Multiplicity::of(1)}}), NotADivisor);

  NCConfig ok(p2, {{"D", cls(p2, "h"), Multiplicity::of(RationalFunction::parse("m"))}});
  CHECK(ok.regime() == Regime::LogTerminal);
  CHECK_THROWS_AS(ok.zeta_form(), MissingDecomposition);
  CHECK(ok.with_multiplicities({Multiplicity::of(-2)}).regime() == Regime::OutsideLogTerminal);
  CHECK(ok.evaluated(Rational(3)).components()[0].mult.value == RationalFunction(3));
}

TEST_CASE("blow-up transport of a line in the plane") {
  auto p2 = ring_projective(2);
  NCConfig config(p2, {{"D", cls(p2, "h"), Multiplicity::decomposed(1, 0)}});
  auto sel = StratumSelection::from_closed(config.names(), Subset{1});

  SUBCASE("point on the line") {
    auto t = blowup_transport(config, {1, "E", ""}, sel);
    REQUIRE(t.config.size() == 2);
    CHECK(t.config.names() == std::vector<std::string>{"E", "D"});
    const auto& e = t.config.components()[0];
    CHECK(e.cls.to_string() == "e");
    CHECK(*e.mult.a == 1);
    CHECK(*e.mult.k == 1);
    CHECK(t.config.components()[1].cls.to_string() == "h - e");
    CHECK(t.selection.strata() == std::set<Subset>{1, 2, 3});
  }
  SUBCASE("point off the line") {
    auto t = blowup_transport(config, {0, "E", ""}, sel);
    CHECK(t.config.components()[0].mult.value == RationalFunction(1));
    CHECK(t.config.components()[1].cls.to_string() == "h");
    CHECK(t.selection.strata() == std::set<Subset>{2});
    auto t_whole = blowup_transport(config, {0, "E", ""}, StratumSelection::whole(config.names()));
    CHECK(t_whole.selection.strata().size() == 4);
  }
  SUBCASE("rejects bad centers") {
    CHECK_THROWS_AS(blowup_transport(config, {2, "E", ""}, sel), ConfigError);
    CHECK_THROWS_AS(blowup_transport(config, {1, "E", ""}, StratumSelection::whole({"X"})), UniverseMismatch);
  }
}

TEST_CASE("degree-level blow-up transport") {
  DegreeConfig two_lines;
  two_lines.names = {"A", "B"};
  two_lines.mults = {Multiplicity::of(1), Multiplicity::of(2)};
  two_lines.chi_closed = {{0, 3}, {1, 2}, {2, 2}, {3, 1}};

  auto t = blowup_transport_degree(two_lines, {3, "F", ""}, StratumSelection::whole(two_lines.names));
  CHECK(t.config.names == std::vector<std::string>{"F", "A", "B"});
  CHECK(t.config.mults[0].value == RationalFunction(4));
  std::map<Subset, Rational> expect{{0, 4}, {1, 2}, {2, 2}, {4, 2}, {3, 1}, {5, 1}};
  CHECK(t.config.chi_closed == expect);

  auto off = blowup_transport_degree(two_lines, {0, "F", ""}, StratumSelection::whole(two_lines.names));
  CHECK(off.config.mults[0].value == RationalFunction(1));
  CHECK(off.config.chi_closed.at(6) == 1);

  two_lines.chi_closed.erase(3);
  CHECK_THROWS_AS(blowup_transport_degree(two_lines, {3, "F", ""}, StratumSelection::whole(two_lines.names)),
                  NormalCrossingViolation);
  two_lines.dimension = 3;
  CHECK_THROWS_AS(blowup_transport_degree(two_lines, {0, "F", ""}, StratumSelection::whole(two_lines.names)),
                  UnsupportedCatalog);
}

TEST_CASE("configuration files") {
  auto p = load_problem(fixtures / "cusp.json");
  REQUIRE(p.config);
  REQUIRE(p.degree);
  CHECK(p.names == std::vector<std::string>{"D", "E1", "E2", "E3"});
  CHECK(p.config->components()[0].cls.to_string() == "3*h - 2*e1 - e2 - e3");
  CHECK(*p.config->components()[3].mult.a == 6);
  CHECK(p.degree->chi_closed == cusp_chi());
  REQUIRE(p.chains.count("P2"));
  CHECK(p.chains.at("P2").back()->target()->dimension() == 2);
  CHECK(p.selection_or_whole().strata().size() == 16);

  auto f = load_problem(fixtures / "cone_stringy.json");
  CHECK_FALSE(f.config);
  REQUIRE(f.fibered);
  CHECK(f.fibered->base_strata.size() == 2);

  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"components": []})")), ConfigError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"components": [{"name": "A"}], "chi_closed": {"B": 1, "": 1}})")),
                  ConfigError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"components": [{"name": "A", "mult": "m+"}], "chi_closed": {"": 1}})")),
                  ConfigError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"components": [{"name": "A"}], "chi_closed": {"A": 1}})")),
                  ConfigError);
  CHECK_THROWS_AS(load_problem(fixtures / "missing.json"), ConfigError);
}
