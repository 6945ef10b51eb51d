#include "classification.hpp"

#include <algorithm>

#include "surface.hpp"

namespace primcomp {

std::string singularity_class_name(SingularityClass cls) {
  switch (cls) {
    case SingularityClass::LogTerminal:
      return "log_terminal";
    case SingularityClass::LogCanonicalNotLogTerminal:
      return "log_canonical_not_log_terminal";
    case SingularityClass::Neither:
      return "neither";
  }
  throw_internal("unhandled singularity class");
}

namespace {

// Shared trichotomy on a multiset of subchain determinants around a single
// junction: entries equal to 1 are absorbed into the junction and dropped.
SingularityClass triple_trichotomy(std::vector<Int> deltas) {
  deltas.erase(std::remove(deltas.begin(), deltas.end(), Int(1)),
               deltas.end());
  if (deltas.size() <= 2) return SingularityClass::LogTerminal;
  if (deltas.size() > 3) return SingularityClass::Neither;
  std::sort(deltas.begin(), deltas.end());
  const Int& a = deltas[0];
  const Int& b = deltas[1];
  const Int& c = deltas[2];
  if (a == 2 && b == 2) return SingularityClass::LogTerminal;
  if (a == 2 && b == 3 && (c == 3 || c == 4 || c == 5)) {
    return SingularityClass::LogTerminal;
  }
  if ((a == 2 && b == 3 && c == 6) || (a == 2 && b == 4 && c == 4) ||
      (a == 3 && b == 3 && c == 3)) {
    return SingularityClass::LogCanonicalNotLogTerminal;
  }
  return SingularityClass::Neither;
}

}  // namespace

SingularityClass kawamata_classify(const DualGraphSchematic& schematic) {
  const std::size_t l = schematic.branch_deltas.size();
  internal_check(schematic.spine_deltas.size() == l + 1,
                 "schematic spine/branch size mismatch");
  if (l == 0) return SingularityClass::LogTerminal;
  if (l >= 2) return SingularityClass::Neither;
  return triple_trichotomy({schematic.spine_deltas[0],
                            schematic.branch_deltas[0],
                            schematic.spine_deltas[1]});
}

SingularityClass kawamata_classify(const KeySequence& ks) {
  return kawamata_classify(dual_graph_schematic(ks));
}

namespace {

std::vector<int> graph_degrees(const WeightedGraph& graph) {
  std::vector<int> degree(graph.vertices.size(), 0);
  for (const auto& [u, v] : graph.edges) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  return degree;
}

// Weights of the chain hanging off `center` starting at `first`, walking away
// from the center. Requires every vertex on the walk to have valence <= 2.
std::vector<Int> arm_weights(const WeightedGraph& graph,
                             const std::vector<int>& degree, int center,
                             int first) {
  std::vector<Int> weights;
  int prev = center;
  int cur = first;
  while (true) {
    weights.push_back(graph.vertices[static_cast<std::size_t>(cur)].weight);
    if (degree[static_cast<std::size_t>(cur)] == 1) break;
    internal_check(degree[static_cast<std::size_t>(cur)] == 2,
                   "arm contains a junction");
    int next = -1;
    for (int w : graph.neighbors(cur)) {
      if (w != prev) next = w;
    }
    internal_check(next >= 0, "arm walk failed");
    prev = cur;
    cur = next;
  }
  return weights;
}

bool is_minus_two_leaf(const WeightedGraph& graph,
                       const std::vector<int>& degree, int v) {
  return degree[static_cast<std::size_t>(v)] == 1 &&
         graph.vertices[static_cast<std::size_t>(v)].weight == -2;
}

}  // namespace

SingularityClass classify_weighted_graph(const WeightedGraph& graph) {
  const std::vector<int> degree = graph_degrees(graph);
  std::vector<int> junctions;
  for (std::size_t v = 0; v < degree.size(); ++v) {
    if (degree[v] >= 3) junctions.push_back(static_cast<int>(v));
  }

  if (junctions.empty()) return SingularityClass::LogTerminal;

  if (junctions.size() == 1) {
    const int c = junctions[0];
    const std::vector<int> around = graph.neighbors(c);
    if (degree[static_cast<std::size_t>(c)] == 3) {
      std::vector<Int> deltas;
      for (int first : around) {
        deltas.push_back(delta_of_chain(arm_weights(graph, degree, c, first)));
      }
      return triple_trichotomy(deltas);
    }
    if (degree[static_cast<std::size_t>(c)] == 4) {
      bool all_leaves = true;
      for (int v : around) {
        if (!is_minus_two_leaf(graph, degree, v)) all_leaves = false;
      }
      if (all_leaves) return SingularityClass::LogCanonicalNotLogTerminal;
    }
    return SingularityClass::Neither;
  }

  if (junctions.size() == 2) {
    const int c1 = junctions[0];
    const int c2 = junctions[1];
    if (degree[static_cast<std::size_t>(c1)] != 3 ||
        degree[static_cast<std::size_t>(c2)] != 3) {
      return SingularityClass::Neither;
    }
    int chain_starts = 0;
    for (int c : junctions) {
      const int other = (c == c1) ? c2 : c1;
      int leaves = 0;
      int toward_other = 0;
      for (int v : graph.neighbors(c)) {
        if (is_minus_two_leaf(graph, degree, v)) {
          ++leaves;
          continue;
        }
        // Must be the connecting chain: walk it and require it to end at
        // the other junction through valence-2 vertices only.
        int prev = c;
        int cur = v;
        bool reaches = false;
        while (true) {
          if (cur == other) {
            reaches = true;
            break;
          }
          if (degree[static_cast<std::size_t>(cur)] != 2) break;
          int next = -1;
          for (int w : graph.neighbors(cur)) {
            if (w != prev) next = w;
          }
          if (next < 0) break;
          prev = cur;
          cur = next;
        }
        if (!reaches) return SingularityClass::Neither;
        ++toward_other;
      }
      if (leaves != 2 || toward_other > 1) return SingularityClass::Neither;
      chain_starts += toward_other;
    }
    // Directly adjacent junctions contribute one edge counted from each side.
    if (chain_starts == 0) return SingularityClass::Neither;
    if (!graph.adjacent(c1, c2) && chain_starts != 2) {
      return SingularityClass::Neither;
    }
    return SingularityClass::LogCanonicalNotLogTerminal;
  }

  return SingularityClass::Neither;
}

std::string table_row_name(TableRow row) {
  switch (row) {
    case TableRow::Plane:
      return "plane";
    case TableRow::WeightedPlane:
      return "weighted_plane";
    case TableRow::REqualsOne:
      return "r_equals_one";
    case TableRow::TwoTwoFamily:
      return "two_two_family";
    case TableRow::PlatonicSporadic:
      return "platonic_sporadic";
    case TableRow::ThreeTwoFamily:
      return "three_two_family";
    case TableRow::EuclideanFamily:
      return "euclidean_family";
  }
  throw_internal("unhandled table row");
}

TableMatch table_classify(const KeySequence& ks) {
  if (!ks.is_primitive()) {
    throw Error(ErrorCode::Precondition, "PrimitiveRequired",
                "family matching requires a primitive sequence");
  }
  if (!is_normal_form(ks)) {
    throw Error(ErrorCode::Precondition, "NormalFormRequired",
                "family matching requires a normal-form sequence");
  }
  const KeySequence ess = essential_subsequence(ks);
  TableMatch match;
  match.essential_entries = ess.entries();
  const std::vector<Int>& a = match.essential_entries;

  if (a.size() == 2) {
    match.matched = true;
    match.cls = SingularityClass::LogTerminal;
    match.g2a_column = true;
    if (a[0] == 1 && a[1] == 1) {
      match.row = TableRow::Plane;
    } else {
      internal_check(a[0] > a[1] && a[1] >= 1 && gcd_int(a[0], a[1]) == 1,
                     "length-2 essential sequence out of shape");
      match.row = TableRow::WeightedPlane;
    }
    return match;
  }

  if (a.size() != 3) return match;  // no families of longer essential length

  const Int p2 = gcd_int(a[0], a[1]);
  const Int p1 = a[0] / p2;
  const Int q1 = a[1] / p2;
  const Int r = p1 * q1 * p2 - a[2];
  match.p1 = p1;
  match.q1 = q1;
  match.p2 = p2;
  match.r = r;
  internal_check(k_bar_x(ess) + a[0] == r - 1 - q1 * p2,
                 "length-3 decomposition identity failed");

  std::optional<TableRow> row;
  SingularityClass cls = SingularityClass::LogTerminal;
  if (r == 1 && p1 > q1 && q1 > 1 && gcd_int(p1, q1) == 1) {
    row = TableRow::REqualsOne;
  } else if (q1 == 2 && r == 2 && p1 > 2 && p1 % 2 == 1 && p2 % 2 == 1) {
    row = TableRow::TwoTwoFamily;
  } else if (q1 == 2 &&
             ((p1 == 3 && (r == 3 || r == 4 || r == 5)) ||
              (p1 == 5 && r == 3)) &&
             gcd_int(p2, r) == 1) {
    row = TableRow::PlatonicSporadic;
  } else if (q1 == 3 && r == 2 && (p1 == 4 || p1 == 5) && p2 % 2 == 1) {
    row = TableRow::ThreeTwoFamily;
  } else if (q1 == 2 && p1 == 3 && r == 6 && p2 >= 2 && gcd_int(p2, 6) == 1) {
    row = TableRow::EuclideanFamily;
    cls = SingularityClass::LogCanonicalNotLogTerminal;
  }

  if (row) {
    match.matched = true;
    match.row = row;
    match.cls = cls;
    match.g2a_column = (q1 * p2 >= r);
  }
  return match;
}

namespace {

struct CatalogEntry {
  std::vector<long> entries;
  std::vector<std::string> singularities;
  std::string moduli;
};

const CatalogEntry* catalog_lookup(const KeySequence& ks) {
  static const std::vector<CatalogEntry> catalog = {
      {{2, 1}, {"A1"}, "two_points"},
      {{3, 2}, {"A2", "A1"}, "two_points"},
      {{3, 2, 5}, {"A4"}, "line_mod_roots"},
      {{3, 2, 4}, {"D5"}, "one_parameter_family"},
  };
  const std::vector<Int>& entries = ks.entries();
  for (const CatalogEntry& entry : catalog) {
    if (entries.size() != entry.entries.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] != entry.entries[i]) same = false;
    }
    if (same) return &entry;
  }
  return nullptr;
}

}  // namespace

DelPezzoReport del_pezzo_report(const KeySequence& ks) {
  DelPezzoReport report;
  report.g2a = g2a_exists(ks);
  report.kawamata = kawamata_classify(ks);

  const CatalogEntry* entry = catalog_lookup(ks);
  if (entry == nullptr) return report;

  internal_check(report.g2a &&
                     report.kawamata == SingularityClass::LogTerminal,
                 "catalogued surface fails its invariant gates");
  report.is_del_pezzo_with_g2a = true;
  report.singularity_content = entry->singularities;
  report.catalog_moduli = entry->moduli;
  report.computed_moduli = moduli_description(ks);
  const std::string computed_kind =
      moduli_kind_name(report.computed_moduli->kind);
  if (computed_kind != report.catalog_moduli) {
    report.moduli_discrepancy = true;
    report.discrepancy_note =
        "catalogue records moduli kind '" + report.catalog_moduli +
        "' but the pole-order computation yields '" + computed_kind +
        "'; both values are reported unreconciled";
  }
  return report;
}

}  // namespace primcomp
