#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "key_sequence.hpp"
#include "surface.hpp"

using namespace primcomp;

namespace {

KeySequence seq(std::vector<Int> entries) {
  return KeySequence::validate(std::move(entries));
}

}  // namespace

TEST_CASE("k_bar_x reference values") {
  CHECK(k_bar_x(seq({1, 1})) == -3);
  CHECK(k_bar_x(seq({2, 1})) == -4);
  CHECK(k_bar_x(seq({3, 2})) == -6);
  CHECK(k_bar_x(seq({3, 2, 5})) == -5);
  CHECK(k_bar_x(seq({3, 2, 4})) == -4);
  CHECK(k_bar_x(seq({3, 2, 3})) == -3);
  CHECK(k_bar_x(seq({7, 2, 13})) == -9);
  CHECK(k_bar_x(seq({12, 8, 18, 35})) == -14);
  CHECK(k_bar_x(seq({15, 10, 24})) == -20);
}

TEST_CASE("k_bar_x is invariant under the essential subsequence") {
  for (auto entries : std::vector<std::vector<Int>>{
           {15, 10, 24}, {12, 8, 18, 35}, {4, 2, 3, 1}, {7, 2, 13}}) {
    KeySequence ks = seq(entries);
    CHECK(k_bar_x(ks) == k_bar_x(essential_subsequence(ks)));
  }
}

TEST_CASE("m_omega reference values") {
  CHECK(m_omega(seq({1, 1})) == 1);
  CHECK(m_omega(seq({2, 1})) == 2);
  CHECK(m_omega(seq({3, 2})) == 1);
  CHECK(m_omega(seq({3, 2, 5})) == 1);
  CHECK(m_omega(seq({3, 2, 4})) == 0);
  CHECK(m_omega(seq({7, 2, 13})) == 3);
  CHECK(m_omega(seq({12, 8, 18, 35})) == 0);
  CHECK(m_omega(seq({15, 10, 24})) == 0);
  CHECK_THROWS_AS(m_omega(seq({3, 2, -1})), Error);
}

TEST_CASE("invariant bundle") {
  SUBCASE("(12,8,18,35)") {
    InvariantBundle b = invariant_bundle(seq({12, 8, 18, 35}));
    CHECK(b.k_bar_x == -14);
    CHECK(b.m_omega == 0);
    CHECK(b.bar_omega == std::vector<Int>{6, 4, 9});
    CHECK(b.bar_omega_star_terms == std::vector<Int>{3});
    REQUIRE(b.bar_omega_star.has_value());
    CHECK(*b.bar_omega_star == 3);
    REQUIRE(b.bar_omega_prime.has_value());
    CHECK(*b.bar_omega_prime == 1);
  }
  SUBCASE("(3,2,5)") {
    InvariantBundle b = invariant_bundle(seq({3, 2, 5}));
    CHECK(b.bar_omega == std::vector<Int>{3, 2});
    CHECK(!b.bar_omega_star.has_value());
    REQUIRE(b.bar_omega_prime.has_value());
    CHECK(*b.bar_omega_prime == 2);
  }
  SUBCASE("(2,1) has no interior entries") {
    InvariantBundle b = invariant_bundle(seq({2, 1}));
    // n = 0, so the only entry is omega_0 / e_0 = 1
    CHECK(b.bar_omega == std::vector<Int>{1});
    CHECK(!b.bar_omega_star.has_value());
    CHECK(!b.bar_omega_prime.has_value());
  }
}

TEST_CASE("defining equations for (3,2,5)") {
  KeySequence ks = seq({3, 2, 5});
  std::vector<Polynomial> eqs = defining_equations(ks);
  REQUIRE(eqs.size() == 1);
  const Polynomial& g = eqs[0];
  VarSetPtr vars = g.vars();
  REQUIRE(vars->names() ==
          std::vector<std::string>{"w", "y0", "y1", "y2", "theta1"});

  Polynomial w = Polynomial::variable(vars, "w");
  Polynomial y0 = Polynomial::variable(vars, "y0");
  Polynomial y1 = Polynomial::variable(vars, "y1");
  Polynomial y2 = Polynomial::variable(vars, "y2");
  Polynomial t1 = Polynomial::variable(vars, "theta1");
  CHECK(g == w * y2 - y1.pow(3) + t1 * y0.pow(2));

  // weighted-homogeneous of degree alpha_1 * omega_1 = 6 for weights
  // (1, 3, 2, 5) on (w, y0, y1, y2), theta weightless
  Int degree = 0;
  CHECK(g.weighted_homogeneous_degree({1, 3, 2, 5, 0}, &degree));
  CHECK(degree == 6);
}

TEST_CASE("defining equations with substituted theta values") {
  KeySequence ks = seq({12, 8, 18, 35});
  std::vector<Polynomial> sym = defining_equations(ks);
  REQUIRE(sym.size() == 2);

  std::vector<Rat> thetas{Rat(5), Rat(-7, 3)};
  std::vector<Polynomial> sub = defining_equations(ks, thetas);
  REQUIRE(sub.size() == 2);
  // substitution drops the theta variables from the varset
  CHECK(sub[0].vars()->names() ==
        std::vector<std::string>{"w", "y0", "y1", "y2", "y3"});

  // each substituted equation equals the symbolic one with thetas bound
  for (int k = 0; k < 2; ++k) {
    std::map<std::string, Polynomial> bindings;
    bindings["theta1"] = Polynomial::constant(sub[k].vars(), thetas[0]);
    bindings["theta2"] = Polynomial::constant(sub[k].vars(), thetas[1]);
    CHECK(sym[k].substitute(bindings, sub[k].vars()) == sub[k]);
  }

  // every equation is weighted homogeneous for (1, omega_0, ..., omega_{n+1})
  std::vector<Int> weights{1, 12, 8, 18, 35};
  for (const Polynomial& g : sub) {
    Int degree = 0;
    CHECK(g.weighted_homogeneous_degree(weights, &degree));
  }

  CHECK_THROWS_AS(defining_equations(ks, {Rat(1)}), Error);          // arity
  CHECK_THROWS_AS(defining_equations(ks, {Rat(1), Rat(0)}), Error);  // zero
}

TEST_CASE("mu exponents") {
  CHECK(mu_exponents(seq({3, 2, 5})) == std::vector<Int>{3});
  CHECK(mu_exponents(seq({12, 8, 18, 35})) == std::vector<Int>{3, 6});
  CHECK(mu_exponents(seq({4, 2, 3, 1})) == std::vector<Int>{2, 3});
  CHECK(mu_exponents(seq({8, 4, 2, 1, 1})) == std::vector<Int>{2, 3, 6});
  CHECK(mu_exponents(seq({8, 6, 5})) == std::vector<Int>{4});
  CHECK(mu_exponents(seq({8, 6, 5, 1})) == std::vector<Int>{4, 5});
}

TEST_CASE("integer kernel basis") {
  SUBCASE("full-rank square matrix has trivial kernel") {
    auto basis = integer_kernel_basis({{-2, -3}, {3, 6}}, 2);
    CHECK(basis.empty());
  }
  SUBCASE("rank-one 2x2") {
    auto basis = integer_kernel_basis({{2, 4}, {1, 2}}, 2);
    REQUIRE(basis.size() == 1);
    // up to sign the primitive kernel vector is (2, -1)
    std::vector<Int> v = basis[0];
    if (v[0] < 0) {
      v[0] = -v[0];
      v[1] = -v[1];
    }
    CHECK(v == std::vector<Int>{2, -1});
  }
  SUBCASE("zero matrix") {
    auto basis = integer_kernel_basis({{0, 0, 0}}, 3);
    CHECK(basis.size() == 3);
  }
  SUBCASE("saturation: kernel vectors are primitive") {
    auto basis = integer_kernel_basis({{6, -4}}, 2);
    REQUIRE(basis.size() == 1);
    Int g = gcd(abs(basis[0][0]), abs(basis[0][1]));
    CHECK(g == 1);
    CHECK(basis[0][0] * 6 - basis[0][1] * 4 == 0);
  }
  SUBCASE("width mismatch throws") {
    CHECK_THROWS_AS(integer_kernel_basis({{1, 2}, {1}}, 2), Error);
  }
}

TEST_CASE("theta equivalence") {
  SUBCASE("trivial kernel identifies everything") {
    KeySequence ks = seq({12, 8, 18, 35});
    CHECK(theta_equivalent(ks, {Rat(1), Rat(1)}, {Rat(7), Rat(-5, 3)}));
    CHECK(theta_equivalent(seq({3, 2, 5}), {Rat(2)}, {Rat(-9, 4)}));
    CHECK(theta_equivalent(seq({4, 2, 3, 1}), {Rat(1), Rat(1)},
                           {Rat(3), Rat(11)}));
  }
  SUBCASE("non-trivial kernel imposes a monomial relation") {
    // for (8,4,2,1,1) the kernel basis is (0, -2, 1): need r3 = r2^2
    KeySequence ks = seq({8, 4, 2, 1, 1});
    std::vector<Rat> base{Rat(1), Rat(1), Rat(1)};
    CHECK(theta_equivalent(ks, base, {Rat(5), Rat(2), Rat(4)}));
    CHECK(theta_equivalent(ks, base, {Rat(7), Rat(1), Rat(1)}));
    CHECK(theta_equivalent(ks, base, {Rat(1), Rat(-3), Rat(9)}));
    CHECK(theta_equivalent(ks, base, {Rat(1), Rat(2, 3), Rat(4, 9)}));
    CHECK(!theta_equivalent(ks, base, {Rat(5), Rat(2), Rat(5)}));
    CHECK(!theta_equivalent(ks, base, {Rat(1), Rat(2), Rat(-4)}));
  }
  SUBCASE("bad arguments") {
    KeySequence ks = seq({3, 2, 5});
    CHECK_THROWS_AS(theta_equivalent(ks, {Rat(1), Rat(1)}, {Rat(1)}), Error);
    CHECK_THROWS_AS(theta_equivalent(ks, {Rat(0)}, {Rat(1)}), Error);
  }
}

TEST_CASE("automorphism descriptions") {
  SUBCASE("(1,1)") {
    AutDescription d = aut_description(seq({1, 1}));
    CHECK(d.kind == AutDescription::Kind::ProjectivePlane);
    CHECK(std::string(aut_kind_name(d.kind)) == "projective_plane");
  }
  SUBCASE("(2,1)") {
    AutDescription d = aut_description(seq({2, 1}));
    CHECK(d.kind == AutDescription::Kind::WeightedPlaneQOne);
  }
  SUBCASE("(5,3)") {
    AutDescription d = aut_description(seq({5, 3}));
    CHECK(d.kind == AutDescription::Kind::WeightedPlaneQBig);
  }
  SUBCASE("(3,2,5)") {
    AutDescription d = aut_description(seq({3, 2, 5}));
    CHECK(d.kind == AutDescription::Kind::General);
    CHECK(d.x_scale_exponent == 3);
    CHECK(d.y_scale_exponent == 2);
    CHECK(d.f_degree_bound == 1);
    CHECK(!d.scale_root_order.has_value());  // n = 1: free scale
    CHECK(d.y_translation_allowed);          // omega_0 + k = -2 < 0
  }
  SUBCASE("(12,8,18,35)") {
    AutDescription d = aut_description(seq({12, 8, 18, 35}));
    CHECK(d.kind == AutDescription::Kind::General);
    CHECK(d.x_scale_exponent == 6);
    CHECK(d.y_scale_exponent == 4);
    CHECK(d.f_degree_bound == 0);
    REQUIRE(d.scale_root_order.has_value());
    CHECK(*d.scale_root_order == 3);
    CHECK(d.y_translation_allowed);  // 12 - 14 < 0
  }
  SUBCASE("(3,2,3) forbids the translation") {
    AutDescription d = aut_description(seq({3, 2, 3}));
    CHECK(d.kind == AutDescription::Kind::General);
    CHECK(!d.y_translation_allowed);  // omega_0 + k = 0
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(aut_description(seq({3, 2, -1})), Error);
    CHECK_THROWS_AS(aut_description(seq({2, 3})), Error);  // not normal form
  }
}
