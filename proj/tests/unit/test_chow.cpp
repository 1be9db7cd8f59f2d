#include "celint/catalog.hpp"
#include "celint/errors.hpp"
#include "celint/ring_json.hpp"

#include <doctest.h>

using namespace celint;

namespace {

ChowClass cls(const RingPtr& r, const char* s) { return ChowClass::parse(r, s); }

Rational deg(const ChowClass& c) { return c.degree().constant_value(); }

LiteralPresentation p2_literal() {
  LiteralPresentation p;
  p.dimension = 2;
  p.basis_by_codim = {{"[V]"}, {"h"}, {"h^2"}};
  p.products = {{{"h", "h"}, "h^2"}};
  p.degree = {{"h^2", Rational(1)}};
  p.tangent_chern = "[V] + 3*h + 3*h^2";
  return p;
}

} // namespace

TEST_CASE("projective rings") {
  auto p2 = ring_projective(2);
  CHECK(p2->tangent_chern().to_string() == "[V] + 3*h + 3*h^2");
  CHECK(ring_projective(1)->tangent_chern().to_string() == "[V] + 2*h");
  CHECK(deg(p2->tangent_chern()) == 3);
  CHECK(deg(ring_projective(3)->tangent_chern()) == 4);
}

TEST_CASE("literal rings") {
  auto lit = ring_literal(p2_literal());
  auto p2 = ring_projective(2);
  REQUIRE(lit->size() == p2->size());
  for (std::size_t i = 0; i < lit->size(); ++i) {
    CHECK(lit->element(i).name == p2->element(i).name);
    for (std::size_t j = 0; j < lit->size(); ++j) {
      auto a = lit->product(i, j), b = p2->product(i, j);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].index == b[k].index);
        CHECK(a[k].coeff == b[k].coeff);
      }
    }
  }

  SUBCASE("associativity violation") {
    LiteralPresentation p;
    p.dimension = 3;
    p.basis_by_codim = {{"[V]"}, {"h", "k"}, {"h^2"}, {"h^3"}};
    p.products = {{{"h", "h"}, "2*h^2"}, {{"h", "h^2"}, "h^3"}, {{"h", "k"}, "h^2"}, {{"k", "h^2"}, "h^3"}};
    p.degree = {{"h^3", Rational(1)}};
    p.tangent_chern = "[V]";
    CHECK_THROWS_WITH_AS(ring_literal(p), doctest::Contains("non-associative"), PresentationError);
  }
  SUBCASE("commutativity violation") {
    auto p = p2_literal();
    p.dimension = 2;
    p.basis_by_codim = {{"[V]"}, {"a", "b"}, {"pt"}};
    p.products = {{{"a", "b"}, "pt"}, {{"b", "a"}, "2*pt"}};
    p.degree = {{"pt", Rational(1)}};
    p.tangent_chern = "[V]";
    CHECK_THROWS_WITH_AS(ring_literal(p), doctest::Contains("non-commutative"), PresentationError);
  }
  SUBCASE("grading violation") {
    auto p = p2_literal();
    p.products = {{{"h", "h"}, "h"}};
    CHECK_THROWS_WITH_AS(ring_literal(p), doctest::Contains("grading"), PresentationError);
  }
  SUBCASE("missing degree") {
    auto p = p2_literal();
    p.degree.clear();
    CHECK_THROWS_WITH_AS(ring_literal(p), doctest::Contains("missing degree"), PresentationError);
  }
  SUBCASE("to_literal round trip") {
    auto q = ring_blowup_point(ring_projective(3)).ring;
    auto back = ring_literal(to_literal(*q));
    CHECK(to_literal(*back).products == to_literal(*q).products);
    CHECK(back->tangent_chern().to_string() == q->tangent_chern().to_string());
  }
}

TEST_CASE("product rings") {
  auto q = ring_product(ring_projective(1, "h1"), ring_projective(1, "h2"));
  CHECK(q->tangent_chern().to_string() == "[V] + 2*h1 + 2*h2 + 4*h1*h2");
  CHECK(deg(cls(q, "h1*h2")) == 1);
  CHECK(deg(cls(q, "h1^2")) == 0);
  CHECK_THROWS_AS(ring_product(ring_projective(1), ring_projective(1)), PresentationError);

  auto with_point = ring_product(ring_projective(2), ring_point());
  CHECK(with_point->tangent_chern().to_string() == "[V] + 3*h + 3*h^2");
  CHECK(deg(cls(with_point, "h^2")) == 1);
}

TEST_CASE("point blow-ups") {
  auto p2 = ring_projective(2);
  Blowup b = ring_blowup_point(p2);
  const auto& w = b.ring;
  CHECK(deg(b.exceptional * b.exceptional) == -1);
  CHECK(w->tangent_chern().to_string() == "[V] + 3*h - e + 4*h^2");
  CHECK(b.map->push(w->tangent_chern()) == p2->tangent_chern() + cls(p2, "h^2"));
  CHECK(b.map->push(b.exceptional).is_zero());
  CHECK(b.map->pull(cls(p2, "h")) == cls(w, "h"));
  CHECK(b.map->pull(p2->fundamental_class()) == w->fundamental_class());
  CHECK(b.map->push(b.map->pull(cls(p2, "h")) * b.exceptional).is_zero());

  auto p3 = ring_projective(3);
  Blowup b3 = ring_blowup_point(p3);
  CHECK(deg(b3.exceptional.pow(3)) == 1);
  CHECK(deg(b3.ring->tangent_chern()) == 6);
  CHECK(b3.map->push(b3.ring->tangent_chern()) == p3->tangent_chern() + 2 * cls(p3, "h^3"));

  auto p1 = ring_projective(1);
  Blowup b1 = ring_blowup_point(p1);
  CHECK(b1.ring == p1);
  CHECK(b1.exceptional == cls(p1, "h"));

  CHECK_THROWS_AS(ring_blowup_point(ring_point()), UnsupportedCatalog);
  auto q = ring_product(ring_projective(1, "a"), ring_projective(1, "b"));
  CHECK_NOTHROW(ring_blowup_point(q));
}

TEST_CASE("Segre identity for point centers") {
  for (int n : {2, 3, 4}) {
    auto base = ring_projective(n);
    Blowup b = ring_blowup_point(base);
    ChowClass sum = b.ring->zero();
    for (int k = 1; k <= n; ++k) sum += b.exceptional.pow(k) * RationalFunction(k % 2 == 1 ? 1 : -1);
    CHECK(b.map->push(sum) == base->basis_class(n));
  }
}

TEST_CASE("proper transforms on the cusp chain") {
  auto p2 = ring_projective(2);
  Blowup b1 = ring_blowup_point(p2, "e1");
  ChowClass d1 = proper_transform(*b1.map, b1.exceptional, cls(p2, "3*h"), 2);
  ChowClass x1 = b1.exceptional;
  Blowup b2 = ring_blowup_point(b1.ring, "e2");
  ChowClass d2 = proper_transform(*b2.map, b2.exceptional, d1, 1);
  ChowClass x1b = proper_transform(*b2.map, b2.exceptional, x1, 1);
  ChowClass x2 = b2.exceptional;
  Blowup b3 = ring_blowup_point(b2.ring, "e3");
  ChowClass d = proper_transform(*b3.map, b3.exceptional, d2, 1);
  ChowClass e1 = proper_transform(*b3.map, b3.exceptional, x1b, 1);
  ChowClass e2 = proper_transform(*b3.map, b3.exceptional, x2, 1);
  ChowClass e3 = b3.exceptional;

  CHECK(d.to_string() == "3*h - 2*e1 - e2 - e3");
  CHECK(e1.to_string() == "e1 - e2 - e3");
  CHECK(deg(e1 * e2) == 0);
  CHECK(deg(e1 * e3) == 1);
  CHECK(deg(e2 * e3) == 1);
  CHECK(deg(d * e3) == 1);
  CHECK(deg(d * e1) == 0);
  CHECK(deg(d * e2) == 0);
  // self-intersections of the resolution graph: -3, -2, -1 and D~^2 = 9-4-1-1
  CHECK(deg(e1 * e1) == -3);
  CHECK(deg(e2 * e2) == -2);
  CHECK(deg(e3 * e3) == -1);
  CHECK(deg(d * d) == 3);

  CHECK(proper_transform(*b1.map, b1.exceptional, cls(p2, "h"), 0) == cls(b1.ring, "h"));
  CHECK(proper_transform(*b1.map, b1.exceptional, cls(p2, "h"), 1).to_string() == "h - e1");
  CHECK_THROWS_AS(proper_transform(*b1.map, b1.exceptional, cls(p2, "h^2"), 1), NotADivisor);
  CHECK_THROWS_AS(proper_transform(*b1.map, b1.exceptional, cls(b1.ring, "h"), 1), RingMismatch);
}

TEST_CASE("class arithmetic") {
  auto p2 = ring_projective(2);
  ChowClass c = p2->tangent_chern();
  CHECK((c * cls(p2, "h")).to_string() == "h + 3*h^2");
  CHECK(cls(p2, "1 + h").inverse().to_string() == "[V] - h + h^2");
  CHECK(c.graded_piece(2).to_string() == "3*h^2");
  CHECK(p2->zero().degree().is_zero());
  CHECK(p2->zero().to_string() == "0");
  CHECK_THROWS_AS(c + ring_projective(2)->tangent_chern(), RingMismatch);
  CHECK_THROWS_AS(cls(p2, "h").inverse(), DivisionByZero);
}

TEST_CASE("class literals") {
  auto p2 = ring_projective(2);
  ChowClass c = cls(p2, "[V] + (5/2)*h + 2*h^2");
  CHECK(c.to_string() == "[V] + (5/2)*h + 2*h^2");
  CHECK(cls(p2, "1 + 3*h + 3*h^2") == p2->tangent_chern());
  CHECK(cls(p2, "(1+h)^3") == p2->tangent_chern());
  CHECK(cls(p2, "h*h") == cls(p2, "h^2"));

  ChowClass f = cls(p2, "[V] + (3+2*m)/(1+m)*h - m/(2+m)*h^2");
  CHECK(f.to_string() == "[V] + ((3+2*m)/(1+m))*h + (-m/(2+m))*h^2");
  CHECK(cls(p2, f.to_string().c_str()) == f);
  CHECK(f.evaluate(0).to_string() == "[V] + 3*h");
  CHECK(f.evaluate(-3).to_string() == "[V] + (3/2)*h - 3*h^2");
  CHECK(cls(p2, "-h").to_string() == "-h");

  CHECK_THROWS_AS(cls(p2, "k"), ParseError);
  CHECK_THROWS_AS(cls(p2, "1/h"), ParseError);
  CHECK_THROWS_AS(cls(p2, "hh"), ParseError);

  auto q = ring_product(ring_projective(1, "h1"), ring_projective(2, "h2"));
  CHECK(cls(q, "3*h1*h2^2").to_string() == "3*h1*h2^2");
  CHECK(cls(q, "h1*h2^2") == cls(q, "h1") * cls(q, "h2^2"));
}

TEST_CASE("map validation") {
  auto p2 = ring_projective(2);
  Blowup b = ring_blowup_point(p2);
  Json good = {{"forward", {{"h", "h"}, {"h^2", "h^2"}}}, {"pullback", {{"h", "h"}, {"h^2", "h^2"}}}};
  CHECK_NOTHROW(map_from_json(b.ring, p2, good));
  Json bad = good;
  bad["forward"]["e"] = "h";
  CHECK_THROWS_WITH_AS(map_from_json(b.ring, p2, bad), doctest::Contains("projection formula"), PresentationError);
  Json bad2 = good;
  bad2["pullback"]["h"] = "h - e";
  CHECK_THROWS_AS(map_from_json(b.ring, p2, bad2), PresentationError);
}

TEST_CASE("ring json") {
  auto loaded = ring_from_json(Json::parse(R"({"type":"blowup_point","base":{"type":"projective","n":2},"times":3})"));
  CHECK(loaded.ring->size() == 6);
  REQUIRE(loaded.exceptionals.size() == 3);
  CHECK(loaded.exceptionals[0].to_string() == "e1");
  CHECK(loaded.to_base->target()->size() == 3);
  CHECK(deg(loaded.ring->tangent_chern()) == 6);

  auto prod = ring_from_json(Json::parse(R"({"type":"product","factors":[{"type":"projective","n":1},{"type":"projective","n":1}]})"));
  CHECK(prod.ring->tangent_chern().to_string() == "[V] + 2*h1 + 2*h2 + 4*h1*h2");

  Json lit = ring_to_json(*loaded.ring);
  auto again = ring_from_json(lit);
  CHECK(again.ring->tangent_chern().to_string() == loaded.ring->tangent_chern().to_string());

  ChowClass c = ChowClass::parse(loaded.ring, "[V] + (1+m)/(2+m)*e2 - 3*h^2");
  CHECK(class_from_json(loaded.ring, class_to_json(c)) == c);
  CHECK_THROWS_AS(ring_from_json(Json::parse(R"({"type":"cone"})")), ConfigError);
}
