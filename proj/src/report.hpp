#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "actions.hpp"
#include "classification.hpp"
#include "enumerate.hpp"
#include "key_sequence.hpp"
#include "resolution.hpp"
#include "surface.hpp"

namespace primcomp {

using Json = nlohmann::ordered_json;

/// Integers render as JSON numbers when they fit in 64 bits and as decimal
/// strings otherwise; rationals always render as strings via rat_to_string.
Json json_int(const Int& v);
Json json_rat(const Rat& v);
Json json_int_list(const std::vector<Int>& values);

Json json_sequence(const KeySequence& ks);

/// Validation outcome for raw entries. Always succeeds structurally: invalid
/// sequences yield {"valid": false, "error": {...}} rather than a thrown
/// error, so callers can inspect the reason.
Json validate_report(const std::vector<Int>& entries);

/// Invariants of a valid sequence. Fields whose preconditions fail (e.g.
/// m_omega for non-primitive input) are null.
Json analyze_report(const KeySequence& ks);

/// Newton pairs, schematic dual graph, singularity trichotomy, family-table
/// match and the del Pezzo catalogue report. Requires primitive normal form;
/// the del Pezzo block additionally requires algebraicity and is null
/// otherwise.
Json classify_report(const KeySequence& ks);

/// The one-parameter action in canonical form; nullopt lambda stays symbolic.
Json action_report(const KeySequence& ks, const std::optional<Rat>& lambda);

/// Exact axiom verification of the sequence's action (optionally with an
/// injected fault) or of the fully symbolic m-truncated family.
Json action_verify_report(const KeySequence& ks, bool inject);
Json generic_verify_report(int m, bool inject);

/// Newton pairs, schematic, and (when the action exists) the derivable pole
/// bounds.
Json resolve_report(const KeySequence& ks);

/// Blow-up data of a single coprime pair p > q >= 1: continued fraction,
/// weighted graph, curvette table, and the fraction-comparison report.
Json monomial_report(const Int& p, const Int& q);

Json theta_report(const KeySequence& ks, const std::vector<Rat>& theta1,
                  const std::vector<Rat>& theta2);

/// One summary record per enumerated sequence (used by the enumeration
/// driver); fields with failing preconditions are null.
Json enumerate_record(const KeySequence& ks);

/// Graphviz renderings.
std::string graph_dot(const WeightedGraph& graph);
std::string schematic_dot(const DualGraphSchematic& schematic);

Json graph_json(const WeightedGraph& graph);
Json schematic_json(const DualGraphSchematic& schematic);

}  // namespace primcomp
