#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "key_sequence.hpp"

namespace primcomp {

// Newton pair data attached to the essential indices: p_j = alpha_{i_j} for
// j = 1..l+1, q_1 = p_1 * chi_1 and q_j = p_1*...*p_j * (chi_j - chi_{j-1})
// for j >= 2. All q_j are integers, q_1 > 0 > q_j (j >= 2) for primitive
// sequences, and gcd(p_j, q_j) = 1. Requires a primitive normal-form
// sequence.
struct NewtonPair {
  Int q;
  Int p;
};

struct NewtonPairs {
  std::vector<NewtonPair> pairs;  // size l + 1
};

NewtonPairs newton_pairs(const KeySequence& ks);

// Shape summary of the boundary-resolution dual graph: a spine of l + 1
// chains with determinants |q_1|, ..., |q_{l+1}|, a branch chain of
// determinant p_j at the j-th junction, and one trailing chain of
// determinant p_{l+1} when p_{l+1} > 1 (determinant 1 = empty chain).
struct DualGraphSchematic {
  std::vector<Int> spine_deltas;
  std::vector<Int> branch_deltas;
  std::optional<Int> extra_chain_delta;
};

DualGraphSchematic dual_graph_schematic(const NewtonPairs& pairs);
DualGraphSchematic dual_graph_schematic(const KeySequence& ks);

// Plus-form continued fraction p/q = m_1 + 1/(m_2 + 1/(...)) for coprime
// p > q >= 1; every quotient is >= 1 and the last is >= 2 (with [p] for
// q = 1). Throws NotCoprime / NotOrdered on bad input.
std::vector<Int> continued_fraction(const Int& p, const Int& q);

// Evaluates [m_1, m_2, ..., m_r] back to a reduced fraction (num, den).
std::pair<Int, Int> continued_fraction_value(const std::vector<Int>& quotients);

// The curvette table of p/q with continued fraction [m_1..m_N]: one row per
// exceptional curve index M_j + k (M_j = m_1 + ... + m_j; j = 0..N-1,
// k = 1..m_{j+1}), whose fraction is the truncation [m_1..m_j, k]. The rows
// cover the curve indices 1..M_N exactly once.
struct CurvetteRow {
  int j = 0;                // truncation level
  int k = 0;                // digit within the level
  Int vertex;               // M_j + k
  Int num, den;             // the reduced fraction of the truncation
};

std::vector<CurvetteRow> curvette_table(const std::vector<Int>& quotients);

// An undirected vertex-weighted graph; vertex 0 is the initial curve E_0.
struct WeightedGraph {
  struct Vertex {
    std::string name;
    Int weight;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int a, int b) const;
  std::vector<int> neighbors(int v) const;
};

// Exceptional configuration of the sequence of blow-ups following the
// Euclidean algorithm on (p, q) above a point of the initial curve E_0
// (weight +1 before blowing up). The result is always a path containing
// E_0, ..., E_M with M = m_1 + ... + m_N, E_0 ends at weight
// 1 - ceil(p/q), and the intersection matrix of E_1..E_M is unimodular.
WeightedGraph monomial_resolution_graph(const Int& p, const Int& q);

// |d_N| for the chain determinant recurrence d_k = w_k * d_{k-1} - d_{k-2},
// d_0 = 1, d_{-1} = 0, over the given chain weights; 1 for the empty chain.
Int delta_of_chain(const std::vector<Int>& weights);

// |det| of the intersection matrix of all vertices except E_0.
Int abs_det_excluding_root(const WeightedGraph& graph);

// Row-by-row comparison of each curvette fraction p~/q~ against p/q:
//   even level: (p~ - q~)/p~ < (p - q)/p (both fractions lie in [0, 1));
//   odd level:  (p~ - q~)/p~ > (p - q)/p and
//               floor(p~/(p~ - q~)) >= floor(p/(p - q)),
// where the self-row (the full expansion, equal to p/q) skips the two strict
// comparisons, and the odd-level floor comparison is skipped when the path
// E_0 .. E_{M_j+k} in the monomial resolution graph consists of E_0 with
// weight -1 followed exclusively by weight -2 vertices.
struct FractionalRowCheck {
  CurvetteRow row;
  bool is_self = false;
  bool skipped_by_pattern = false;
  bool passed = false;
};

struct FractionalClaimReport {
  bool ok = false;
  std::vector<FractionalRowCheck> rows;
};

FractionalClaimReport fractional_claim_check(const Int& p, const Int& q);

// Locator for an exceptional curve of the full boundary resolution whose
// pole bound m_E is derivable in closed form:
//   Corner     — the junction curve at essential position i (1 <= i <= l);
//   Interior   — the curve of an exponent beta with chi_i < beta < chi_{i-1}
//                (2 <= i <= l+1) whose denominator divides p_1*...*p_{i-1};
//   Convergent — a curvette-table row (ptilde, qtilde) of the base pair
//                (p_1, p_1 - q_1) when i = 1, or (p_i, |q_i|) when
//                2 <= i <= l (requiring p_i > |q_i|).
struct MELocator {
  enum class Kind { Corner, Interior, Convergent };
  Kind kind = Kind::Corner;
  int i = 0;
  Rat beta;         // Interior
  Int ptilde, qtilde;  // Convergent
};

// The pole bound m_E for the located curve; throws
// ErrorCode::BadArgument("InvalidLocator") when the locator is outside the
// derivable range. Requires a primitive, algebraic, normal-form sequence
// admitting the additive action.
Int m_e_value(const KeySequence& ks, const MELocator& locator);

// All derivable locators of the sequence, with their bounds. Convergent
// locators whose base-pair path matches the weight pattern described at
// fractional_claim_check (odd level, E_0 = -1, rest -2) are omitted: those
// curves do not survive to the minimal resolution.
std::vector<std::pair<MELocator, Int>> derivable_m_e_values(
    const KeySequence& ks);

}  // namespace primcomp
