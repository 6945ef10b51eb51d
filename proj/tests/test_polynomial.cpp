#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polynomial.hpp"

using namespace primcomp;

namespace {

VarSetPtr xy() { return VarSet::make({"x", "y"}); }

Polynomial var(const VarSetPtr& vs, const std::string& name) {
  return Polynomial::variable(vs, name);
}

}  // namespace

TEST_CASE("varset basics") {
  VarSetPtr vs = VarSet::make({"a", "b", "c"});
  CHECK(vs->size() == 3);
  CHECK(vs->name(1) == "b");
  CHECK(vs->index_of("c") == 2);
  CHECK(!vs->find("d").has_value());
  CHECK_THROWS_AS(vs->index_of("d"), Error);
  CHECK_THROWS_AS(VarSet::make({"a", "a"}), Error);
  CHECK_THROWS_AS(VarSet::make({""}), Error);

  // the empty varset is the constants-only ring
  VarSetPtr empty = VarSet::make({});
  CHECK(empty->size() == 0);
  CHECK(Polynomial::constant(empty, Rat(5)) + Polynomial::constant(empty, Rat(-5)) ==
        Polynomial::zero(empty));
}

TEST_CASE("grlex order: degree first, then lexicographic") {
  CHECK(grlex_greater({2, 0}, {1, 0}));        // higher degree wins
  CHECK(grlex_greater({2, 0}, {0, 2}));        // same degree: x^2 > y^2
  CHECK(grlex_greater({1, 1}, {0, 2}));        // x*y > y^2
  CHECK(!grlex_greater({1, 0}, {1, 0}));       // irreflexive
  CHECK(!grlex_greater({0, 2}, {1, 1}));
}

TEST_CASE("arithmetic and canonical form") {
  VarSetPtr vs = xy();
  Polynomial x = var(vs, "x"), y = var(vs, "y");
  Polynomial p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.term_count() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "x^2 - y^2");

  Polynomial q = Rat(1, 2) * p + Polynomial::constant(vs, Rat(1, 2));
  CHECK(q.to_string() == "1/2*x^2 - 1/2*y^2 + 1/2");

  CHECK((x * Rat(0)).is_zero());
  CHECK(Polynomial::zero(vs).to_string() == "0");
}

TEST_CASE("pow and degrees") {
  VarSetPtr vs = xy();
  Polynomial x = var(vs, "x"), y = var(vs, "y");
  Polynomial p = (x + y).pow(3);
  CHECK(p.term_count() == 4);
  CHECK(p.coefficient({2, 1}) == 3);
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in(vs->index_of("y")) == 3);
  CHECK(!Polynomial::zero(vs).total_degree().has_value());
  CHECK((x + y).pow(0) == Polynomial::constant(vs, 1));
}

TEST_CASE("coefficient extraction") {
  VarSetPtr vs = xy();
  Polynomial x = var(vs, "x"), y = var(vs, "y");
  Polynomial p = x * x * y + Rat(2) * x + Rat(3) * y + Polynomial::constant(vs, 4);
  // Coefficient of x^1 is 2 (the x^2*y term has x-exponent 2).
  CHECK(p.coefficient_of(vs->index_of("x"), 1) == Polynomial::constant(vs, 2));
  CHECK(p.coefficient_of(vs->index_of("x"), 2) == y);
  CHECK(p.constant_coefficient() == 4);
  CHECK(p.coefficient_of(vs->index_of("x"), 5).is_zero());
}

TEST_CASE("substitute composes polynomials") {
  VarSetPtr vs = xy();
  Polynomial x = var(vs, "x"), y = var(vs, "y");
  Polynomial p = x * x + y;

  VarSetPtr target = VarSet::make({"u", "v"});
  Polynomial u = var(target, "u"), v = var(target, "v");
  std::map<std::string, Polynomial> bindings = {{"x", u + v}, {"y", u * v}};
  CHECK(p.substitute(bindings, target) == (u + v) * (u + v) + u * v);
}

TEST_CASE("substitute passes unbound variables through by name") {
  VarSetPtr vs = xy();
  Polynomial p = var(vs, "x") + var(vs, "y");
  VarSetPtr target = VarSet::make({"y", "x", "z"});
  std::map<std::string, Polynomial> bindings = {
      {"x", var(target, "z")}};
  CHECK(p.substitute(bindings, target) ==
        var(target, "z") + var(target, "y"));
}

TEST_CASE("transport re-expresses over a larger varset") {
  VarSetPtr vs = xy();
  Polynomial p = var(vs, "x") * var(vs, "y");
  VarSetPtr big = VarSet::make({"t", "y", "x"});
  Polynomial moved = p.transport(big);
  CHECK(moved == var(big, "x") * var(big, "y"));
  CHECK_THROWS_AS(p.transport(VarSet::make({"x", "z"})), Error);
}

TEST_CASE("evaluate") {
  VarSetPtr vs = xy();
  Polynomial p = var(vs, "x").pow(2) + Rat(3) * var(vs, "y");
  CHECK(p.evaluate({{"x", Rat(1, 2)}, {"y", Rat(2)}}) == Rat(25, 4));
  CHECK_THROWS_AS(p.evaluate({{"x", Rat(1)}}), Error);
}

TEST_CASE("weighted homogeneity") {
  VarSetPtr vs = VarSet::make({"w", "x", "y"});
  Polynomial w = var(vs, "w"), x = var(vs, "x"), y = var(vs, "y");
  // w^1 * y - x^2 with weights (1, 3, 5): degrees 6 and 6.
  Polynomial p = w * y - x * x;
  Int degree = 0;
  CHECK(p.weighted_homogeneous_degree({1, 3, 5}, &degree));
  CHECK(degree == 6);
  CHECK(!(p + w).weighted_homogeneous_degree({1, 3, 5}, &degree));
  CHECK(Polynomial::zero(vs).weighted_homogeneous_degree({1, 1, 1}, &degree));
}

TEST_CASE("exponent limit guards runaway growth") {
  std::uint32_t saved = exponent_limit();
  set_exponent_limit(8);
  VarSetPtr vs = xy();
  Polynomial x = var(vs, "x");
  CHECK_THROWS_AS(x.pow(4) * x.pow(5), Error);
  try {
    x.pow(4) * x.pow(5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Limit);
  }
  set_exponent_limit(saved);
}

TEST_CASE("mixed-varset arithmetic is rejected") {
  Polynomial a = var(xy(), "x");
  Polynomial b = var(VarSet::make({"x", "z"}), "x");
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("polymap equality and rendering") {
  VarSetPtr vs = xy();
  Polynomial x = var(vs, "x"), y = var(vs, "y");
  PolyMap f({{"first", x + y}, {"second", x * y}});
  PolyMap g({{"first", x + y}, {"second", x * y}});
  CHECK(f == g);
  CHECK(f.to_string() == "(x + y, x*y)");
  CHECK(f.component("second") == x * y);
  PolyMap h({{"first", x + y}, {"second", x * y + x}});
  CHECK(f != h);
}
