#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "key_sequence.hpp"
#include "resolution.hpp"
#include "surface.hpp"

using namespace primcomp;

namespace {

KeySequence seq(std::vector<Int> entries) {
  return KeySequence::validate(std::move(entries));
}

std::vector<std::pair<Int, Int>> pair_list(const NewtonPairs& np) {
  std::vector<std::pair<Int, Int>> out;
  for (const NewtonPair& pr : np.pairs) out.emplace_back(pr.q, pr.p);
  return out;
}

std::string thrown_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("newton pairs") {
  using PL = std::vector<std::pair<Int, Int>>;
  CHECK(pair_list(newton_pairs(seq({3, 2, 5}))) == PL{{2, 3}, {-1, 1}});
  CHECK(pair_list(newton_pairs(seq({7, 2, 13}))) == PL{{2, 7}, {-1, 1}});
  CHECK(pair_list(newton_pairs(seq({15, 10, 24}))) == PL{{2, 3}, {-6, 5}});
  CHECK(pair_list(newton_pairs(seq({12, 8, 18, 35}))) ==
        PL{{2, 3}, {-3, 2}, {-1, 2}});
  CHECK(pair_list(newton_pairs(seq({9, 6, 16, 47}))) ==
        PL{{2, 3}, {-2, 3}, {-1, 1}});
  CHECK(pair_list(newton_pairs(seq({2, 1}))) == PL{{1, 2}});
  CHECK(pair_list(newton_pairs(seq({3, 2}))) == PL{{2, 3}});

  CHECK(thrown_kind([] { newton_pairs(seq({3, 2, -1})); }) ==
        "PrimitiveRequired");
  CHECK(thrown_kind([] { newton_pairs(seq({2, 3})); }) == "NormalFormRequired");
}

TEST_CASE("newton pair entries are coprime with the documented signs") {
  for (auto entries : std::vector<std::vector<Int>>{
           {3, 2, 5}, {7, 2, 13}, {15, 10, 24}, {12, 8, 18, 35},
           {9, 6, 16, 47}, {2, 1}, {5, 3}}) {
    NewtonPairs np = newton_pairs(seq(entries));
    REQUIRE(!np.pairs.empty());
    CHECK(np.pairs[0].q > 0);
    for (std::size_t j = 1; j < np.pairs.size(); ++j) {
      CHECK(np.pairs[j].q < 0);
    }
    for (const NewtonPair& pr : np.pairs) {
      CHECK(gcd_int(abs_int(pr.p), abs_int(pr.q)) == 1);
    }
  }
}

TEST_CASE("dual graph schematic") {
  SUBCASE("(3,2,5)") {
    DualGraphSchematic s = dual_graph_schematic(seq({3, 2, 5}));
    CHECK(s.spine_deltas == std::vector<Int>{2, 1});
    CHECK(s.branch_deltas == std::vector<Int>{3});
    CHECK(!s.extra_chain_delta.has_value());  // p_2 = 1
  }
  SUBCASE("(15,10,24)") {
    DualGraphSchematic s = dual_graph_schematic(seq({15, 10, 24}));
    CHECK(s.spine_deltas == std::vector<Int>{2, 6});
    CHECK(s.branch_deltas == std::vector<Int>{3});
    REQUIRE(s.extra_chain_delta.has_value());
    CHECK(*s.extra_chain_delta == 5);
  }
  SUBCASE("(12,8,18,35)") {
    DualGraphSchematic s = dual_graph_schematic(seq({12, 8, 18, 35}));
    CHECK(s.spine_deltas == std::vector<Int>{2, 3, 1});
    CHECK(s.branch_deltas == std::vector<Int>{3, 2});
    REQUIRE(s.extra_chain_delta.has_value());
    CHECK(*s.extra_chain_delta == 2);
  }
  SUBCASE("(2,1)") {
    DualGraphSchematic s = dual_graph_schematic(seq({2, 1}));
    CHECK(s.spine_deltas == std::vector<Int>{1});
    CHECK(s.branch_deltas.empty());
    REQUIRE(s.extra_chain_delta.has_value());
    CHECK(*s.extra_chain_delta == 2);
  }
}

TEST_CASE("continued fractions") {
  CHECK(continued_fraction(7, 5) == std::vector<Int>{1, 2, 2});
  CHECK(continued_fraction(5, 3) == std::vector<Int>{1, 1, 2});
  CHECK(continued_fraction(5, 1) == std::vector<Int>{5});
  CHECK(continued_fraction(3, 2) == std::vector<Int>{1, 2});
  CHECK(continued_fraction(2, 1) == std::vector<Int>{2});

  CHECK(thrown_kind([] { continued_fraction(3, 3); }) == "NotOrdered");
  CHECK(thrown_kind([] { continued_fraction(2, 4); }) == "NotOrdered");
  CHECK(thrown_kind([] { continued_fraction(4, 2); }) == "NotCoprime");
  CHECK(thrown_kind([] { continued_fraction(5, 0); }) == "NotOrdered");
}

TEST_CASE("continued fraction round trip") {
  for (long p = 2; p <= 40; ++p) {
    for (long q = 1; q < p; ++q) {
      if (gcd_int(Int(p), Int(q)) != 1) continue;
      std::vector<Int> cf = continued_fraction(p, q);
      REQUIRE(!cf.empty());
      for (const Int& m : cf) CHECK(m >= 1);
      CHECK(cf.back() >= 2);
      auto [num, den] = continued_fraction_value(cf);
      CHECK(num == p);
      CHECK(den == q);
    }
  }
}

TEST_CASE("curvette table of 5/3") {
  std::vector<CurvetteRow> rows = curvette_table(continued_fraction(5, 3));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].vertex == 1);
  CHECK(rows[0].num == 1);
  CHECK(rows[0].den == 1);
  CHECK(rows[0].j == 0);
  CHECK(rows[1].vertex == 2);
  CHECK(rows[1].num == 2);
  CHECK(rows[1].den == 1);
  CHECK(rows[1].j == 1);
  CHECK(rows[2].vertex == 3);
  CHECK(rows[2].num == 3);
  CHECK(rows[2].den == 2);
  CHECK(rows[2].j == 2);
  CHECK(rows[3].vertex == 4);
  CHECK(rows[3].num == 5);
  CHECK(rows[3].den == 3);
  CHECK(rows[3].j == 2);
}

TEST_CASE("curvette rows cover each curve index once") {
  for (auto [p, q] : std::vector<std::pair<long, long>>{
           {7, 5}, {5, 3}, {12, 7}, {9, 2}, {11, 4}}) {
    std::vector<Int> cf = continued_fraction(p, q);
    Int total = 0;
    for (const Int& m : cf) total += m;
    std::vector<CurvetteRow> rows = curvette_table(cf);
    CHECK(Int(rows.size()) == total);
    std::vector<Int> vertices;
    for (const CurvetteRow& r : rows) {
      vertices.push_back(r.vertex);
      CHECK(gcd_int(r.num, r.den) == 1);
    }
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      CHECK(vertices[i] == Int(i + 1));
    }
    // the last row is the full fraction
    CHECK(rows.back().num == p);
    CHECK(rows.back().den == q);
  }
}

TEST_CASE("monomial resolution graph of 5/3") {
  WeightedGraph g = monomial_resolution_graph(5, 3);
  REQUIRE(g.vertices.size() == 5);
  CHECK(g.vertices[0].name == "E_0");
  CHECK(g.vertices[0].weight == -1);
  CHECK(g.vertices[1].weight == -3);
  CHECK(g.vertices[2].weight == -3);
  CHECK(g.vertices[3].weight == -2);
  CHECK(g.vertices[4].weight == -1);
  // path E_0 - E_2 - E_4 - E_3 - E_1
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 4));
  CHECK(g.adjacent(4, 3));
  CHECK(g.adjacent(3, 1));
  CHECK(!g.adjacent(0, 1));
  CHECK(g.edges.size() == 4);
  CHECK(abs_det_excluding_root(g) == 1);
}

TEST_CASE("monomial resolution graph of 7/5") {
  WeightedGraph g = monomial_resolution_graph(7, 5);
  REQUIRE(g.vertices.size() == 6);
  CHECK(g.vertices[0].weight == -1);
  CHECK(g.vertices[1].weight == -4);
  CHECK(g.vertices[2].weight == -2);
  CHECK(g.vertices[3].weight == -3);
  CHECK(g.vertices[4].weight == -2);
  CHECK(g.vertices[5].weight == -1);
  // path E_0 - E_2 - E_3 - E_5 - E_4 - E_1
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 3));
  CHECK(g.adjacent(3, 5));
  CHECK(g.adjacent(5, 4));
  CHECK(g.adjacent(4, 1));
  CHECK(abs_det_excluding_root(g) == 1);
}

TEST_CASE("monomial resolution graph of 3/1 ends at a heavy root") {
  WeightedGraph g = monomial_resolution_graph(3, 1);
  REQUIRE(g.vertices.size() == 4);
  CHECK(g.vertices[0].weight == -2);  // 1 - ceil(3/1)
  CHECK(g.vertices[1].weight == -2);
  CHECK(g.vertices[2].weight == -2);
  CHECK(g.vertices[3].weight == -1);
  CHECK(g.adjacent(0, 3));
  CHECK(g.adjacent(3, 2));
  CHECK(g.adjacent(2, 1));
}

TEST_CASE("monomial resolution graph invariants over a range") {
  for (long p = 2; p <= 25; ++p) {
    for (long q = 1; q < p; ++q) {
      if (gcd_int(Int(p), Int(q)) != 1) continue;
      WeightedGraph g = monomial_resolution_graph(p, q);
      CHECK(g.vertices[0].weight == 1 - ceil_rat(Rat(p, q)));
      CHECK(abs_det_excluding_root(g) == 1);
      // every exceptional weight is at most -1
      for (std::size_t v = 1; v < g.vertices.size(); ++v) {
        CHECK(g.vertices[v].weight <= -1);
      }
    }
  }
}

TEST_CASE("delta of chain") {
  CHECK(delta_of_chain({}) == 1);
  CHECK(delta_of_chain({Int(-2)}) == 2);
  CHECK(delta_of_chain({Int(-2), Int(-2), Int(-2), Int(-2)}) == 5);
  CHECK(delta_of_chain({Int(-3), Int(-1), Int(-2), Int(-3)}) == 1);
  CHECK(delta_of_chain({Int(-2), Int(-3)}) == 5);
  // sign convention is irrelevant: the magnitude matches (2,1)-chain data
  CHECK(delta_of_chain({Int(2), Int(2)}) == 3);
}

TEST_CASE("fractional claim check") {
  for (auto [p, q] : std::vector<std::pair<long, long>>{
           {5, 3}, {7, 2}, {3, 2}, {2, 1}, {7, 5}, {11, 7}}) {
    FractionalClaimReport report = fractional_claim_check(p, q);
    CHECK(report.ok);
    bool saw_self = false;
    bool saw_pattern_skip = false;
    for (const FractionalRowCheck& rc : report.rows) {
      CHECK(rc.passed);
      saw_self = saw_self || rc.is_self;
      saw_pattern_skip = saw_pattern_skip || rc.skipped_by_pattern;
    }
    CHECK(saw_self);
    if (p == 7 && q == 5) CHECK(saw_pattern_skip);  // the 2/1 row
  }
}

TEST_CASE("pole bounds for (3,2,5)") {
  KeySequence ks = seq({3, 2, 5});

  MELocator corner;
  corner.kind = MELocator::Kind::Corner;
  corner.i = 1;
  CHECK(m_e_value(ks, corner) == 1);

  MELocator conv;
  conv.kind = MELocator::Kind::Convergent;
  conv.i = 1;
  conv.ptilde = 2;
  conv.qtilde = 1;
  CHECK(m_e_value(ks, conv) == 2);
  conv.ptilde = 3;
  CHECK(m_e_value(ks, conv) == 1);

  auto derived = derivable_m_e_values(ks);
  REQUIRE(derived.size() == 3);
  Int best = 0;
  for (const auto& [loc, value] : derived) best = std::max(best, value);
  CHECK(best == 2);
  CHECK(best >= m_omega(ks));
}

TEST_CASE("pole bounds for (7,2,13) exclude the contracted convergent") {
  KeySequence ks = seq({7, 2, 13});

  // the 2/1 row of the base pair 7/5 computes below m_omega ...
  MELocator conv;
  conv.kind = MELocator::Kind::Convergent;
  conv.i = 1;
  conv.ptilde = 2;
  conv.qtilde = 1;
  CHECK(m_e_value(ks, conv) == 2);
  CHECK(m_omega(ks) == 3);

  // ... so the derivable list must not contain it
  auto derived = derivable_m_e_values(ks);
  std::vector<Int> values;
  for (const auto& [loc, value] : derived) {
    CHECK(!(loc.kind == MELocator::Kind::Convergent && loc.ptilde == 2 &&
            loc.qtilde == 1));
    values.push_back(value);
  }
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<Int>{3, 3, 3, 4});
  CHECK(values.back() >= m_omega(ks));
}

TEST_CASE("pole bounds for (12,8,18,35)") {
  KeySequence ks = seq({12, 8, 18, 35});

  MELocator corner;
  corner.kind = MELocator::Kind::Corner;
  corner.i = 1;
  CHECK(m_e_value(ks, corner) == 1);
  corner.i = 2;
  CHECK(m_e_value(ks, corner) == 0);

  MELocator interior;
  interior.kind = MELocator::Kind::Interior;
  interior.beta = Rat(1, 3);
  CHECK(m_e_value(ks, interior) == 1);

  // the second junction pair (p,|q|) = (2,3) has no convergent chain
  MELocator conv;
  conv.kind = MELocator::Kind::Convergent;
  conv.i = 2;
  conv.ptilde = 2;
  conv.qtilde = 1;
  CHECK(thrown_kind([&] { m_e_value(ks, conv); }) == "InvalidLocator");

  auto derived = derivable_m_e_values(ks);
  std::vector<Int> values;
  for (const auto& [loc, value] : derived) values.push_back(value);
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<Int>{0, 1, 1, 1, 2});
}

TEST_CASE("pole bounds for (9,6,16,47) include second-junction convergents") {
  KeySequence ks = seq({9, 6, 16, 47});
  CHECK(m_omega(ks) == 1);

  MELocator conv;
  conv.kind = MELocator::Kind::Convergent;
  conv.i = 2;
  conv.ptilde = 3;
  conv.qtilde = 2;
  // the full row reproduces the corner bound at the second junction
  MELocator corner;
  corner.kind = MELocator::Kind::Corner;
  corner.i = 2;
  CHECK(m_e_value(ks, conv) == m_e_value(ks, corner));
  CHECK(m_e_value(ks, corner) == 1);

  auto derived = derivable_m_e_values(ks);
  bool has_second_junction_conv = false;
  Int best = 0;
  for (const auto& [loc, value] : derived) {
    best = std::max(best, value);
    if (loc.kind == MELocator::Kind::Convergent && loc.i == 2) {
      has_second_junction_conv = true;
      // the contracted 2/1 row of base 3/2 must be excluded
      CHECK(!(loc.ptilde == 2 && loc.qtilde == 1));
    }
  }
  CHECK(has_second_junction_conv);
  CHECK(best >= m_omega(ks));
}

TEST_CASE("pole bound locator validation") {
  KeySequence ks = seq({3, 2, 5});

  MELocator loc;
  loc.kind = MELocator::Kind::Corner;
  loc.i = 0;
  CHECK(thrown_kind([&] { m_e_value(ks, loc); }) == "InvalidLocator");
  loc.i = 2;  // l = 1
  CHECK(thrown_kind([&] { m_e_value(ks, loc); }) == "InvalidLocator");

  loc.kind = MELocator::Kind::Interior;
  loc.i = 2;
  loc.beta = Rat(2, 3);  // boundary value, not strictly inside
  CHECK(thrown_kind([&] { m_e_value(ks, loc); }) == "InvalidLocator");
  loc.beta = Rat(1, 2);  // denominator 2 does not divide p_1 = 3
  CHECK(thrown_kind([&] { m_e_value(ks, loc); }) == "InvalidLocator");

  loc.kind = MELocator::Kind::Convergent;
  loc.i = 1;
  loc.ptilde = 5;
  loc.qtilde = 2;  // not a curvette row of 3/1
  CHECK(thrown_kind([&] { m_e_value(ks, loc); }) == "InvalidLocator");
  loc.ptilde = 1;
  loc.qtilde = 1;  // degenerate row
  CHECK(thrown_kind([&] { m_e_value(ks, loc); }) == "InvalidLocator");

  // no additive action at all
  MELocator corner;
  corner.kind = MELocator::Kind::Corner;
  corner.i = 1;
  CHECK(thrown_kind([&] { m_e_value(seq({3, 2, 3}), corner); }) ==
        "NoAdditiveAction");
}
