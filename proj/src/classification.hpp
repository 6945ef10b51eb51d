#pragma once

#include <optional>
#include <string>
#include <vector>

#include "actions.hpp"
#include "key_sequence.hpp"
#include "resolution.hpp"

namespace primcomp {

/// Trichotomy for the singularity type of the compactification divisor's
/// contraction: log terminal, log canonical but not log terminal, or neither.
enum class SingularityClass {
  LogTerminal,
  LogCanonicalNotLogTerminal,
  Neither,
};

std::string singularity_class_name(SingularityClass cls);

/// Classifies via the junction data of the schematic dual graph: no junction
/// means a chain (always log terminal); one junction is decided by the
/// multiset of the three adjacent subchain determinants (platonic triples are
/// log terminal, Euclidean triples log canonical); two or more junctions are
/// never log canonical.
SingularityClass kawamata_classify(const DualGraphSchematic& schematic);

/// Convenience overload: schematic from the sequence, then classify.
/// Preconditions: primitive, normal form.
SingularityClass kawamata_classify(const KeySequence& ks);

/// Shape-based matcher for explicit weighted graphs: chains are log terminal;
/// a single valence-3 vertex is decided by the determinant trichotomy of its
/// arms; the two log-canonical star shapes (a valence-4 vertex with four
/// weight -2 leaves, or two valence-3 vertices each carrying two weight -2
/// leaves and joined by a chain) are recognised; anything else is Neither.
SingularityClass classify_weighted_graph(const WeightedGraph& graph);

/// Families of essential sequences with log canonical contraction.
enum class TableRow {
  Plane,             // (1, 1)
  WeightedPlane,     // (p, q), p > q >= 1
  REqualsOne,        // residual degree 1
  TwoTwoFamily,      // q1 = 2, r = 2, odd p1 > 2, odd p2
  PlatonicSporadic,  // q1 = 2, (p1, r) platonic
  ThreeTwoFamily,    // q1 = 3, r = 2, p1 in {4, 5}, odd p2
  EuclideanFamily,   // q1 = 2, p1 = 3, r = 6, gcd(p2, 6) = 1
};

std::string table_row_name(TableRow row);

/// Result of matching the essential subsequence against the known families.
struct TableMatch {
  bool matched = false;
  std::optional<TableRow> row;
  std::vector<Int> essential_entries;
  /// Decomposition of a length-3 essential sequence (a0, a1, a2):
  /// p2 = gcd(a0, a1), p1 = a0/p2, q1 = a1/p2, r = p1*q1*p2 - a2.
  std::optional<Int> p1, q1, p2, r;
  SingularityClass cls = SingularityClass::Neither;
  /// Whether the matched family admits the additive action (meaningful only
  /// when matched); for length-3 rows this is the inequality q1*p2 >= r.
  bool g2a_column = false;
};

/// Matches the essential subsequence against the family table.
/// Preconditions: primitive, normal form.
TableMatch table_classify(const KeySequence& ks);

/// Catalogue-backed report for Gorenstein del Pezzo compactifications that
/// admit the additive action.
struct DelPezzoReport {
  bool g2a = false;
  SingularityClass kawamata = SingularityClass::Neither;
  bool is_del_pezzo_with_g2a = false;
  /// ADE types of the singular points, largest first (catalogued surfaces).
  std::vector<std::string> singularity_content;
  /// Catalogued moduli kind ("two_points", "line_mod_roots",
  /// "one_parameter_family"); empty when not catalogued.
  std::string catalog_moduli;
  std::optional<ModuliDescription> computed_moduli;
  /// Set when the computed moduli kind disagrees with the catalogue; the
  /// disagreement is reported, never silently resolved.
  bool moduli_discrepancy = false;
  std::string discrepancy_note;
};

/// Preconditions: primitive, algebraic, normal form.
DelPezzoReport del_pezzo_report(const KeySequence& ks);

}  // namespace primcomp
