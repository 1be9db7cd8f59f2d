#include "celint/catalog.hpp"
#include "celint/config_json.hpp"
#include "celint/errors.hpp"
#include "celint/verify.hpp"

#include <doctest.h>

using namespace celint;

namespace {

const std::filesystem::path fixtures = CELINT_FIXTURE_DIR;

ChowClass cls(const RingPtr& r, const std::string& s) { return ChowClass::parse(r, s); }

Side side(const Problem& p, const std::string& chain) { return {*p.config, p.chains.at(chain)}; }

DegreeConfig bare_plane() {
  DegreeConfig d;
  d.chi_closed = {{0, 3}};
  return d;
}

} // namespace

TEST_CASE("check_key") {
  auto p2 = ring_projective(2);
  NCConfig line(p2, {{"E1", cls(p2, "h"), Multiplicity::of(1)}});
  auto r = check_key(line, StratumSelection::whole(line.names()), {1, "E0", ""});
  CHECK(r.passed);
  CHECK(r.lhs == r.rhs);

  auto cusp = load_problem(fixtures / "cusp.json");
  for (Subset contains : {Subset{0}, Subset{1}, Subset{8}, Subset{9}})
    CHECK(check_key(*cusp.config, StratumSelection::from_closed(cusp.names, Subset{9}), {contains, "F", ""}).passed);

  // a component of multiplicity 0 outside the set may be dropped
  NCConfig with_zero(p2, {{"A", cls(p2, "h"), Multiplicity::of(2)}, {"Z", cls(p2, "2*h"), Multiplicity::of(0)}});
  NCConfig without(p2, {{"A", cls(p2, "h"), Multiplicity::of(2)}});
  auto sel_a = StratumSelection::from_closed(with_zero.names(), Subset{1});
  CHECK(integrate_class(with_zero, sel_a) == integrate_class(without, StratumSelection::from_closed(without.names(), Subset{1})));
  CHECK(integrate_class(with_zero, StratumSelection::whole(with_zero.names())) ==
        integrate_class(without, StratumSelection::whole(without.names())));
}

TEST_CASE("check_cov") {
  auto p2 = ring_projective(2);
  NCConfig empty(p2, {});
  CHECK(check_cov({empty, {}}, {empty, {identity_map(p2)}}).passed);

  // X = P2, Y = Bl_pt P2, K_rho = e
  auto b = ring_blowup_point(p2);
  NCConfig on_y(b.ring, {{"E", b.exceptional, Multiplicity::of(1)}});
  auto r = check_cov({on_y, {b.map}}, {on_y, {identity_map(b.ring), b.map}});
  CHECK(r.passed);
  CHECK(r.lhs == "[V] + 3*h + 3*h^2");

  // the two small resolutions of the cone
  auto flop = load_problem(fixtures / "flop.json");
  auto stringy = flop.config->evaluated(Rational(0));
  CHECK(check_cov({stringy, flop.chains.at("viaX-")}, {stringy, flop.chains.at("viaX+")}).passed);
  CHECK(check_cov(side(flop, "toX"), side(flop, "viaX-")).passed);

  NCConfig other(b.ring, {{"E", b.exceptional, Multiplicity::of(2)}});
  CHECK_THROWS_AS(check_cov({on_y, {b.map}}, {other, {b.map}}), PreconditionViolated);
}

TEST_CASE("check_denloe") {
  auto d = bare_plane();
  auto r = check_denloe(d, StratumSelection::whole(d.names), {0, "E", ""});
  CHECK(r.passed);
  CHECK(r.lhs == "3");
  auto c = check_denloe_center(d, {0, "E", ""});
  CHECK(c.passed);
  CHECK(c.lhs == "1");

  auto cusp = load_problem(fixtures / "cusp.json");
  auto sel = StratumSelection::whole(cusp.names);
  CHECK(check_denloe(*cusp.degree, sel, {1 | 8, "F", ""}).passed);
  CHECK(check_denloe_center(*cusp.degree, {1 | 8, "F", ""}).passed);
}

TEST_CASE("check_altexp") {
  auto p2 = ring_projective(2);
  auto r = check_altexp(NCConfig(p2, {}));
  CHECK(r.passed);
  CHECK(r.lhs == p2->tangent_chern().to_string());

  NCConfig two(p2, {{"A", cls(p2, "h"), Multiplicity::of(1)}, {"B", cls(p2, "h"), Multiplicity::of(RationalFunction::m())}});
  CHECK(check_altexp(two).passed);
  CHECK(check_altexp(*load_problem(fixtures / "cusp.json").config).passed);
}

TEST_CASE("check_spell_elgen") {
  SUBCASE("blow-up against blow-down") {
    for (int n : {2, 3}) {
      auto base = ring_projective(n);
      auto b = ring_blowup_point(base);
      auto e = b.exceptional;
      auto zero = b.ring->zero();
      NCConfig config(b.ring, {{"E", e, Multiplicity::of(n - 1)}});
      SpellSide x{config, {b.map}, zero, e * RationalFunction(n - 1)};
      SpellSide y{config, {}, e * RationalFunction(n - 1), zero};
      for (int i : {0, 1}) {
        auto r = check_spell_elgen(x, y, i);
        CHECK(r.passed);
      }
      auto r0 = check_spell_elgen(x, y, 0);
      // chi(P^n) = chi(Bl) + ((1-n)/n) chi(P^{n-1})
      Rational chi_x = n + 1, chi_bl = Rational(n + 1) + Rational(n) - Rational(1), chi_e = n;
      CHECK(chi_x == chi_bl + Rational(1 - n, n) * chi_e);
      CHECK(r0.lhs.rfind("deg " + chi_x.to_string() + " ", 0) == 0);
    }
  }
  SUBCASE("the two quadric/plane models") {
    auto p = load_problem(fixtures / "diffman_quadric_in_p2.json");
    auto ring = p.config->ring();
    auto k_x = cls(ring, "e1 + e2"), k_y = cls(ring, "h - e1 - e2");
    SpellSide x{*p.config, p.chains.at("P2"), k_y, k_x};
    SpellSide y{*p.config, p.chains.at("Q"), k_x, k_y};
    for (int i : {0, 1, 2}) CHECK(check_spell_elgen(x, y, i).passed);

    SpellSide bad{*p.config, p.chains.at("Q"), k_x, k_x};
    CHECK_THROWS_AS(check_spell_elgen(x, bad, 0), PreconditionViolated);
  }
}

TEST_CASE("check_necfacts") {
  auto p2 = ring_projective(2);
  auto r = check_necfacts(p2, cls(p2, "h"));
  CHECK(r.passed);
  CHECK(r.lhs.rfind("(2) [V] + 3*h + 4*h^2", 0) == 0);
  CHECK(r.lhs.find("(5) [V] + 2*h + h^2") != std::string::npos);

  auto p3 = ring_projective(3);
  auto r3 = check_necfacts(p3);
  CHECK(r3.passed);
  CHECK(r3.lhs.find("(4) [V] + 4*h + 6*h^2 + 3*h^3") != std::string::npos);
}

TEST_CASE("check_can_degree") {
  auto k3 = load_problem(fixtures / "k3_blowup.json");
  auto r = check_can_degree({{*k3.config, {}}}, Rational(24));
  CHECK(r.passed);
  CHECK(r.lhs == "{24}");

  auto none = check_can_degree({}, std::nullopt);
  CHECK(none.passed);
  CHECK(none.lhs == "{}");

  auto g2 = load_problem(fixtures / "genus2_canonical.json");
  auto ring = g2.config->ring();
  NCConfig other(ring, {{"P'", cls(ring, "pt"), Multiplicity::of(1)}, {"Q'", cls(ring, "pt"), Multiplicity::of(1)}});
  auto same = check_can_degree({{*g2.config, {}}, {other, {}}}, std::nullopt);
  CHECK(same.lhs == "{-3}");

  NCConfig weierstrass(ring, {{"W", cls(ring, "pt"), Multiplicity::of(2)}});
  CHECK(check_can_degree({{*g2.config, {}}, {weierstrass, {}}}, std::nullopt).lhs == "{-3, -8/3}");
  CHECK_FALSE(check_can_degree({{*g2.config, {}}}, Rational(-2)).passed);
}

TEST_CASE("property suites are deterministic and pass") {
  SuiteOptions opts;
  opts.seed = 7;
  opts.instances = 12;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    auto a = run_suite(name, opts);
    CHECK(a.failures() == 0);
    for (const auto& rep : a.reports)
      if (!rep.passed) MESSAGE(report_line(rep));
    opts.jobs = 3;
    auto b = run_suite(name, opts);
    opts.jobs = 1;
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) CHECK(a.reports[i].lhs == b.reports[i].lhs);
  }
  CHECK_THROWS_AS(run_suite("nope", opts), ConfigError);
}
