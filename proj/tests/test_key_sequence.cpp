#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "key_sequence.hpp"
#include "surface.hpp"

using namespace primcomp;

namespace {

KeySequence seq(std::vector<Int> entries) {
  return KeySequence::validate(std::move(entries));
}

std::string failure_kind(std::vector<Int> entries, long* index = nullptr) {
  try {
    KeySequence::validate(std::move(entries));
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::InvalidSequence);
    if (index != nullptr && e.index()) *index = *e.index();
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("validation accepts the reference sequences") {
  for (auto entries : std::vector<std::vector<Int>>{
           {1, 1}, {2, 1}, {3, 2}, {3, 2, 5}, {3, 2, 4}, {7, 2, 13},
           {12, 8, 18, 35}, {4, 6, 11, 1}, {8, 6, 5}}) {
    CHECK_NOTHROW(KeySequence::validate(entries));
  }
}

TEST_CASE("validation failures come in the documented order") {
  long index = -1;
  CHECK(failure_kind({}) == "TooShort");
  CHECK(failure_kind({3}) == "TooShort");
  CHECK(failure_kind({0, 1}) == "NonPositiveOmega0");
  CHECK(failure_kind({-2, 1}) == "NonPositiveOmega0");
  CHECK(failure_kind({4, 2}) == "GcdNotOne");
  CHECK(failure_kind({6, 4, 10}) == "GcdNotOne");
  // gcd is checked before the growth condition
  CHECK(failure_kind({2, 4, 4}) == "GcdNotOne");
  CHECK(failure_kind({3, 2, 7}, &index) == "SmallerPropertyViolated");
  CHECK(index == 1);
  CHECK(failure_kind({3, 2, 5, 11}, &index) == "SmallerPropertyViolated");
  CHECK(index == 2);
  // the first offending position is reported
  CHECK(failure_kind({3, 2, 7, 100}, &index) == "SmallerPropertyViolated");
  CHECK(index == 1);
}

TEST_CASE("gcd tower and alpha ratios") {
  KeySequence ks = seq({12, 8, 18, 35});
  CHECK(ks.n() == 2);
  CHECK(ks.e(0) == 12);
  CHECK(ks.e(1) == 4);
  CHECK(ks.e(2) == 2);
  CHECK(ks.e(3) == 1);
  CHECK(ks.alpha(1) == 3);
  CHECK(ks.alpha(2) == 2);
  CHECK(ks.alpha(3) == 2);
}

TEST_CASE("primitivity") {
  CHECK(seq({3, 2, 5}).is_primitive());
  CHECK(seq({1, 1}).is_primitive());
  CHECK(!seq({3, 2, -1}).is_primitive());
  CHECK(!seq({3, -2, -7}).is_primitive());
}

TEST_CASE("parsing and formatting") {
  CHECK(parse_key_sequence("3,2,5") == seq({3, 2, 5}));
  CHECK(parse_key_sequence("(3, 2, 5)") == seq({3, 2, 5}));
  CHECK(parse_key_sequence("  3 2 5 ") == seq({3, 2, 5}));
  CHECK(parse_key_sequence("3,2,-1") == seq({3, 2, -1}));
  CHECK(seq({3, 2, 5}).to_string() == "(3,2,5)");
  CHECK_THROWS_AS(parse_key_sequence("3,two,5"), Error);
  CHECK_THROWS_AS(parse_key_sequence(""), Error);
  CHECK_THROWS_AS(parse_key_sequence("4,2"), Error);  // parses, fails validation
}

TEST_CASE("beta expansion digits and targets") {
  SUBCASE("(8,6,5) has one interior row") {
    BetaExpansion be = beta_expansion(seq({8, 6, 5}));
    REQUIRE(be.rows.size() == 1);
    CHECK(be.rows[0].target == 24);  // alpha_1 = 4
    CHECK(be.rows[0].digits == std::vector<Int>{3});
  }
  SUBCASE("(8,6,5,1)") {
    BetaExpansion be = beta_expansion(seq({8, 6, 5, 1}));
    REQUIRE(be.rows.size() == 2);
    CHECK(be.rows[0].target == 24);  // alpha_1 = 4
    CHECK(be.rows[0].digits == std::vector<Int>{3});
    CHECK(be.rows[1].target == 10);  // alpha_2 = 2
    CHECK(be.rows[1].digits == std::vector<Int>{-1, 3});
  }
  SUBCASE("(4,6,11,1)") {
    BetaExpansion be = beta_expansion(seq({4, 6, 11, 1}));
    REQUIRE(be.rows.size() == 2);
    CHECK(be.rows[1].k == 2);
    CHECK(be.rows[1].target == 22);
    CHECK(be.rows[1].digits == std::vector<Int>{4, 1});
  }
  SUBCASE("(12,8,18,35)") {
    BetaExpansion be = beta_expansion(seq({12, 8, 18, 35}));
    REQUIRE(be.rows.size() == 2);
    CHECK(be.rows[0].digits == std::vector<Int>{2});
    CHECK(be.rows[1].digits == std::vector<Int>{3, 0});
  }
  SUBCASE("(3,2,5)") {
    BetaExpansion be = beta_expansion(seq({3, 2, 5}));
    REQUIRE(be.rows.size() == 1);
    CHECK(be.rows[0].target == 6);
    CHECK(be.rows[0].digits == std::vector<Int>{2});
  }
}

TEST_CASE("beta digits satisfy the reconstruction and range constraints") {
  for (auto entries : std::vector<std::vector<Int>>{
           {8, 6, 5}, {12, 8, 18, 35}, {4, 6, 11, 1}, {30, 25, 24, 1}}) {
    KeySequence ks = seq(entries);
    BetaExpansion be = beta_expansion(ks);
    for (const BetaRow& row : be.rows) {
      CHECK(row.target == ks.alpha(row.k) * ks.omega(row.k));
      Int sum = 0;
      for (int j = 0; j < row.k; ++j) sum += row.digits[j] * ks.omega(j);
      CHECK(sum == row.target);
      for (int j = 1; j < row.k; ++j) {
        CHECK(row.digits[j] >= 0);
        CHECK(row.digits[j] < ks.alpha(j));
      }
    }
  }
}

TEST_CASE("algebraicity") {
  CHECK(is_algebraic(seq({3, 2, 5})));
  CHECK(is_algebraic(seq({12, 8, 18, 35})));
  CHECK(is_algebraic(seq({4, 6, 11, 1})));
  // the interior rows decide: (8,6,5) passes trivially, appending an entry
  // brings the failing row 10 = -1*8 + 3*6 into range
  CHECK(is_algebraic(seq({8, 6, 5})));
  CHECK(!is_algebraic(seq({8, 6, 5, 1})));
  CHECK(first_nonalgebraic_row(seq({8, 6, 5, 1})) == 2);
  CHECK(!is_algebraic(seq({8, 6, 2, 1})));
  CHECK(first_nonalgebraic_row(seq({8, 6, 2, 1})) == 2);
  CHECK(!first_nonalgebraic_row(seq({3, 2, 5})).has_value());
}

TEST_CASE("semigroup membership oracle") {
  CHECK(semigroup_member(0, {3, 5}));
  CHECK(semigroup_member(8, {3, 5}));
  CHECK(!semigroup_member(7, {3, 5}));
  CHECK(!semigroup_member(4, {3, 5}));
  CHECK(semigroup_member(24, {8, 6}));
  CHECK(!semigroup_member(10, {8, 6}));
  CHECK_THROWS_AS(semigroup_member(3, {0, 2}), Error);
}

TEST_CASE("essential data") {
  SUBCASE("(3,2,5)") {
    EssentialData ed = essential_data(seq({3, 2, 5}));
    CHECK(ed.l == 1);
    CHECK(ed.indices == std::vector<int>{0, 1, 2});
    REQUIRE(ed.chi.size() == 2);
    CHECK(ed.chi[0] == Rat(2, 3));
    CHECK(ed.chi[1] == Rat(1, 3));
  }
  SUBCASE("(12,8,18,35)") {
    EssentialData ed = essential_data(seq({12, 8, 18, 35}));
    CHECK(ed.l == 2);
    CHECK(ed.indices == std::vector<int>{0, 1, 2, 3});
    CHECK(ed.chi == std::vector<Rat>{Rat(2, 3), Rat(1, 6), Rat(1, 12)});
  }
  SUBCASE("(15,10,24) has a non-essential trailing ratio folded in") {
    EssentialData ed = essential_data(seq({15, 10, 24}));
    CHECK(ed.l == 1);
    CHECK(ed.chi == std::vector<Rat>{Rat(2, 3), Rat(4, 15)});
  }
  SUBCASE("(7,1) has no interior essential index") {
    EssentialData ed = essential_data(seq({7, 1}));
    CHECK(ed.l == 0);
    CHECK(ed.indices == std::vector<int>{0, 1});
    CHECK(ed.chi == std::vector<Rat>{Rat(1, 7)});
  }
}

TEST_CASE("essential subsequence is valid and preserved") {
  KeySequence ks = seq({12, 8, 18, 35});
  CHECK(essential_subsequence(ks) == ks);  // all interior indices essential

  // (6,4,2,1) has alpha_2 = 1, so index 2 drops out
  KeySequence with_unit = seq({6, 4, 2, 1});
  CHECK(with_unit.alpha(2) == 1);
  EssentialData ed = essential_data(with_unit);
  CHECK(ed.l == 1);
  CHECK(ed.indices == std::vector<int>{0, 1, 3});
  CHECK(essential_subsequence(with_unit) == seq({6, 4, 1}));
  CHECK(k_bar_x(with_unit) == k_bar_x(seq({6, 4, 1})));
}

TEST_CASE("normal form verdicts") {
  CHECK(is_normal_form(seq({3, 2, 5})));
  CHECK(is_normal_form(seq({3, 2, 4})));
  CHECK(is_normal_form(seq({2, 1})));
  CHECK(is_normal_form(seq({1, 1})));
  CHECK(is_normal_form(seq({12, 8, 18, 35})));
  CHECK(is_normal_form(seq({7, 2, 13})));

  SUBCASE("two-entry sequences must be non-increasing") {
    NormalFormReport r = normal_form_report(seq({2, 3}));
    CHECK(!r.is_normal);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].condition == "N0");
  }
  SUBCASE("the first step must decrease") {
    NormalFormReport r = normal_form_report(seq({4, 6, 11, 1}));
    CHECK(!r.is_normal);
    bool has_n1b = false;
    for (const auto& f : r.failures) has_n1b = has_n1b || f.condition == "N1b";
    CHECK(has_n1b);
  }
  SUBCASE("the first step must not divide the leading entry") {
    NormalFormReport r = normal_form_report(seq({4, 2, 3, 1}));
    CHECK(!r.is_normal);
    bool has_n1c = false;
    for (const auto& f : r.failures) has_n1c = has_n1c || f.condition == "N1c";
    CHECK(has_n1c);
  }
  SUBCASE("exponent-candidate failure carries its witness") {
    NormalFormReport r = normal_form_report(seq({3, 2, 5, 1}));
    CHECK(!r.is_normal);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].condition == "N1d");
    REQUIRE(r.failures[0].beta.has_value());
    CHECK(*r.failures[0].beta == Rat(1, 3));
    REQUIRE(r.failures[0].index.has_value());
    CHECK(*r.failures[0].index == 2);
  }
}

TEST_CASE("normal form report exposes the exponent candidates") {
  NormalFormReport r = normal_form_report(seq({3, 2, 5}));
  CHECK(r.is_normal);
  CHECK(r.satisfied_case == "N1");
  CHECK(r.exponent_set_defined);
  // candidates are sorted descending and include 0
  REQUIRE(!r.exponent_candidates.empty());
  for (std::size_t i = 1; i < r.exponent_candidates.size(); ++i) {
    CHECK(r.exponent_candidates[i - 1] > r.exponent_candidates[i]);
  }
  CHECK(r.exponent_candidates.back() == Rat(0));
}

TEST_CASE("expansion handles entries beyond the machine-word fast range") {
  // (8, 6, 5, 1) scaled by 2^20 in its first three entries keeps the same
  // digit pattern: the tower scales, so row 1 stays [3] and row 2 [-1, 3].
  const Int scale = Int(1) << 20;
  KeySequence ks =
      seq({8 * scale, 6 * scale, 5 * scale, 1});
  CHECK(ks.alpha(1) == 4);
  CHECK(ks.alpha(2) == 2);
  BetaExpansion expansion = beta_expansion(ks);
  REQUIRE(expansion.rows.size() == 2);
  CHECK(expansion.rows[0].target == 24 * scale);
  REQUIRE(expansion.rows[0].digits.size() == 1);
  CHECK(expansion.rows[0].digits[0] == 3);
  CHECK(expansion.rows[1].target == 10 * scale);
  REQUIRE(expansion.rows[1].digits.size() == 2);
  CHECK(expansion.rows[1].digits[0] == -1);
  CHECK(expansion.rows[1].digits[1] == 3);
  // the negative leading digit in row 2 decides algebraicity, and the
  // big-entry path must agree with the machine-word path on the unscaled twin
  CHECK(!is_algebraic(ks));
  CHECK(is_algebraic(ks) == is_algebraic(seq({8, 6, 5, 1})));
}

TEST_CASE("normal form verdict matches the detailed report") {
  // including zero and negative interior entries, which take the other
  // branches of the exponent-candidate scan
  std::vector<std::vector<Int>> sequences = {
      {3, 2, -1},      {3, -1, -4},     {5, 3, -2},  {4, 0, -1},
      {5, -2, -11},    {6, 4, 7, -1},   {7, -3, -22}, {9, 6, 4, -1},
      {5, 4, 11, -3},  {2, 1},          {1, 1},       {1, 2},
      {4, 2, 3},       {6, 2, 5},       {12, 8, 18, 35},
      {8, 6, 5, 1},    {9, 6, 16, 47},  {30, 20, 45, 89, 1}};
  for (const auto& entries : sequences) {
    KeySequence ks = seq(entries);
    CHECK(is_normal_form(ks) == normal_form_report(ks).is_normal);
  }
}
