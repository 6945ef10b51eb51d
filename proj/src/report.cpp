#include "report.hpp"

#include <sstream>

namespace primcomp {

Json json_int(const Int& v) {
  std::int64_t small = 0;
  if (fits_int64(v, &small)) return Json(small);
  return Json(int_to_string(v));
}

Json json_rat(const Rat& v) { return Json(rat_to_string(v)); }

Json json_int_list(const std::vector<Int>& values) {
  Json out = Json::array();
  for (const Int& v : values) out.push_back(json_int(v));
  return out;
}

Json json_sequence(const KeySequence& ks) { return json_int_list(ks.entries()); }

namespace {

Json json_rat_list(const std::vector<Rat>& values) {
  Json out = Json::array();
  for (const Rat& v : values) out.push_back(json_rat(v));
  return out;
}

Json json_error(const Error& err) {
  Json out;
  out["kind"] = err.kind();
  if (err.index()) {
    out["index"] = *err.index();
  } else {
    out["index"] = nullptr;
  }
  out["message"] = err.what();
  return out;
}

Json normal_form_json(const NormalFormReport& report) {
  Json out;
  out["is_normal"] = report.is_normal;
  out["satisfied_case"] =
      report.is_normal ? Json(report.satisfied_case) : Json(nullptr);
  Json failures = Json::array();
  for (const NormalFormFailure& failure : report.failures) {
    Json f;
    f["condition"] = failure.condition;
    f["beta"] = failure.beta ? json_rat(*failure.beta) : Json(nullptr);
    f["index"] = failure.index ? Json(*failure.index) : Json(nullptr);
    failures.push_back(f);
  }
  out["failures"] = failures;
  out["exponent_set_defined"] = report.exponent_set_defined;
  out["exponent_candidates"] = json_rat_list(report.exponent_candidates);
  return out;
}

Json beta_expansion_json(const KeySequence& ks) {
  Json rows = Json::array();
  for (const BetaRow& row : beta_expansion(ks).rows) {
    Json r;
    r["k"] = row.k;
    r["target"] = json_int(row.target);
    r["digits"] = json_int_list(row.digits);
    rows.push_back(r);
  }
  return rows;
}

Json essential_json(const KeySequence& ks) {
  EssentialData ed = essential_data(ks);
  Json out;
  out["indices"] = ed.indices;
  out["l"] = ed.l;
  out["chi"] = json_rat_list(ed.chi);
  return out;
}

Json aut_json(const AutDescription& aut) {
  Json out;
  out["kind"] = aut_kind_name(aut.kind);
  if (aut.kind == AutDescription::Kind::General) {
    out["x_scale_exponent"] = json_int(aut.x_scale_exponent);
    out["y_scale_exponent"] = json_int(aut.y_scale_exponent);
    out["f_degree_bound"] = json_int(aut.f_degree_bound);
    out["scale_root_order"] = aut.scale_root_order
                                  ? json_int(*aut.scale_root_order)
                                  : Json(nullptr);
    out["y_translation_allowed"] = aut.y_translation_allowed;
  }
  return out;
}

Json moduli_json(const ModuliDescription& moduli) {
  Json out;
  out["kind"] = moduli_kind_name(moduli.kind);
  if (moduli.kind == ModuliDescription::Kind::LineModRoots) {
    out["root_order"] = json_int(moduli.root_order);
    out["exponent"] = json_int(moduli.exponent);
  }
  return out;
}

bool is_projective_plane(const KeySequence& ks) {
  return ks.n() == 0 && ks.omega(0) == 1 && ks.omega(1) == 1;
}

Json newton_pairs_json(const NewtonPairs& pairs) {
  Json out = Json::array();
  for (const NewtonPair& pair : pairs.pairs) {
    Json p;
    p["q"] = json_int(pair.q);
    p["p"] = json_int(pair.p);
    out.push_back(p);
  }
  return out;
}

Json table_json(const TableMatch& match) {
  Json out;
  out["matched"] = match.matched;
  out["row"] = match.row ? Json(table_row_name(*match.row)) : Json(nullptr);
  out["essential"] = json_int_list(match.essential_entries);
  out["p1"] = match.p1 ? json_int(*match.p1) : Json(nullptr);
  out["q1"] = match.q1 ? json_int(*match.q1) : Json(nullptr);
  out["p2"] = match.p2 ? json_int(*match.p2) : Json(nullptr);
  out["r"] = match.r ? json_int(*match.r) : Json(nullptr);
  out["class"] = singularity_class_name(match.cls);
  out["g2a_column"] = match.g2a_column;
  return out;
}

Json del_pezzo_json(const DelPezzoReport& report) {
  Json out;
  out["g2a"] = report.g2a;
  out["kawamata"] = singularity_class_name(report.kawamata);
  out["is_del_pezzo_with_g2a"] = report.is_del_pezzo_with_g2a;
  out["singularity_content"] = report.singularity_content;
  out["catalog_moduli"] = report.catalog_moduli.empty()
                              ? Json(nullptr)
                              : Json(report.catalog_moduli);
  out["computed_moduli"] = report.computed_moduli
                               ? moduli_json(*report.computed_moduli)
                               : Json(nullptr);
  out["moduli_discrepancy"] = report.moduli_discrepancy;
  out["discrepancy_note"] = report.discrepancy_note.empty()
                                ? Json(nullptr)
                                : Json(report.discrepancy_note);
  return out;
}

Json locator_json(const MELocator& locator) {
  Json out;
  switch (locator.kind) {
    case MELocator::Kind::Corner:
      out["kind"] = "corner";
      out["i"] = locator.i;
      break;
    case MELocator::Kind::Interior:
      out["kind"] = "interior";
      out["i"] = locator.i;
      out["beta"] = json_rat(locator.beta);
      break;
    case MELocator::Kind::Convergent:
      out["kind"] = "convergent";
      out["i"] = locator.i;
      out["fraction"] =
          int_to_string(locator.ptilde) + "/" + int_to_string(locator.qtilde);
      break;
  }
  return out;
}

Json verify_json(const AxiomCheckResult& result) {
  Json out;
  out["identity_ok"] = result.identity_ok;
  out["composition_ok"] = result.composition_ok;
  out["ok"] = result.ok();
  out["identity_residual_x"] = result.identity_residual_x.to_string();
  out["identity_residual_y"] = result.identity_residual_y.to_string();
  out["composition_residual_x"] = result.composition_residual_x.to_string();
  out["composition_residual_y"] = result.composition_residual_y.to_string();
  return out;
}

}  // namespace

Json validate_report(const std::vector<Int>& entries) {
  Json out;
  out["sequence"] = json_int_list(entries);
  try {
    KeySequence ks = KeySequence::validate(entries);
    out["valid"] = true;
    out["error"] = nullptr;
    out["primitive"] = ks.is_primitive();
    out["algebraic"] = is_algebraic(ks);
    std::vector<Int> gcds, alphas;
    for (int k = 0; k <= ks.n() + 1; ++k) gcds.push_back(ks.e(k));
    for (int k = 1; k <= ks.n() + 1; ++k) alphas.push_back(ks.alpha(k));
    out["gcd_tower"] = json_int_list(gcds);
    out["alpha"] = json_int_list(alphas);
    out["normal_form"] = normal_form_json(normal_form_report(ks));
  } catch (const Error& err) {
    if (err.code() != ErrorCode::InvalidSequence) throw;
    out["valid"] = false;
    out["error"] = json_error(err);
  }
  return out;
}

Json analyze_report(const KeySequence& ks) {
  const bool primitive = ks.is_primitive();
  const bool algebraic = is_algebraic(ks);
  const bool normal = is_normal_form(ks);

  Json out;
  out["sequence"] = json_sequence(ks);
  out["n"] = ks.n();
  out["primitive"] = primitive;
  out["algebraic"] = algebraic;
  out["normal_form"] = normal;
  out["k_bar_x"] = json_int(k_bar_x(ks));
  if (primitive) {
    InvariantBundle bundle = invariant_bundle(ks);
    out["m_omega"] = json_int(bundle.m_omega);
    out["bar_omega"] = json_int_list(bundle.bar_omega);
    out["bar_omega_star"] = bundle.bar_omega_star
                                ? json_int(*bundle.bar_omega_star)
                                : Json(nullptr);
    out["bar_omega_prime"] = bundle.bar_omega_prime
                                 ? json_int(*bundle.bar_omega_prime)
                                 : Json(nullptr);
  } else {
    out["m_omega"] = nullptr;
    out["bar_omega"] = nullptr;
    out["bar_omega_star"] = nullptr;
    out["bar_omega_prime"] = nullptr;
  }
  out["beta_rows"] = beta_expansion_json(ks);
  out["essential"] = essential_json(ks);
  out["mu"] = json_int_list(mu_exponents(ks));

  const bool g2a_ready = primitive && algebraic && normal;
  out["g2a_exists"] = g2a_ready ? Json(g2a_exists(ks)) : Json(nullptr);

  if (algebraic) {
    Json eqs = Json::array();
    for (const Polynomial& g : defining_equations(ks)) {
      eqs.push_back(g.to_string());
    }
    out["defining_equations"] = eqs;
  } else {
    out["defining_equations"] = nullptr;
  }

  out["automorphisms"] = (primitive && normal)
                             ? aut_json(aut_description(ks))
                             : Json(nullptr);

  if (g2a_ready && g2a_exists(ks) && !is_projective_plane(ks)) {
    out["moduli"] = moduli_json(moduli_description(ks));
  } else {
    out["moduli"] = nullptr;
  }
  return out;
}

Json classify_report(const KeySequence& ks) {
  Json out;
  out["sequence"] = json_sequence(ks);
  NewtonPairs pairs = newton_pairs(ks);
  DualGraphSchematic schematic = dual_graph_schematic(pairs);
  out["newton_pairs"] = newton_pairs_json(pairs);
  out["schematic"] = schematic_json(schematic);
  out["kawamata"] = singularity_class_name(kawamata_classify(schematic));
  out["table"] = table_json(table_classify(ks));
  out["del_pezzo"] =
      is_algebraic(ks) ? del_pezzo_json(del_pezzo_report(ks)) : Json(nullptr);
  return out;
}

Json action_report(const KeySequence& ks, const std::optional<Rat>& lambda) {
  ActionFamily family = tau_action(ks, lambda);
  Json out;
  out["sequence"] = json_sequence(ks);
  out["m"] = family.m;
  out["lambda"] = lambda ? json_rat(*lambda) : Json("symbolic");
  out["variables"] = family.vars->names();
  out["parameters"] = family.parameters;
  out["x"] = family.x_component.to_string();
  out["y"] = family.y_component.to_string();
  out["rendered"] = render_action(family);
  return out;
}

Json action_verify_report(const KeySequence& ks, bool inject) {
  ActionFamily family = tau_action(ks, std::nullopt);
  if (inject) family = inject_fault(std::move(family));
  Json out;
  out["sequence"] = json_sequence(ks);
  out["m"] = family.m;
  out["inject_fault"] = inject;
  out.update(verify_json(verify_action_axioms(family)));
  return out;
}

Json generic_verify_report(int m, bool inject) {
  if (m < 0) {
    throw Error(ErrorCode::BadArgument, "BadDegree",
                "the truncation degree must be non-negative");
  }
  GeneralActionSpec spec;
  spec.m = m;
  spec.lambdas.assign(static_cast<std::size_t>(m) + 1, std::nullopt);
  ActionFamily family = general_action(spec);
  if (inject) family = inject_fault(std::move(family));
  Json out;
  out["m"] = m;
  out["inject_fault"] = inject;
  out.update(verify_json(verify_action_axioms(family)));
  return out;
}

Json resolve_report(const KeySequence& ks) {
  Json out;
  out["sequence"] = json_sequence(ks);
  NewtonPairs pairs = newton_pairs(ks);
  DualGraphSchematic schematic = dual_graph_schematic(pairs);
  out["newton_pairs"] = newton_pairs_json(pairs);
  out["schematic"] = schematic_json(schematic);
  out["kawamata"] = singularity_class_name(kawamata_classify(schematic));

  const bool admissible =
      ks.is_primitive() && is_algebraic(ks) && g2a_exists(ks);
  if (admissible) {
    out["m_omega"] = json_int(m_omega(ks));
    Json bounds = Json::array();
    for (const auto& [locator, value] : derivable_m_e_values(ks)) {
      Json item;
      item["locator"] = locator_json(locator);
      item["m_e"] = json_int(value);
      bounds.push_back(item);
    }
    out["m_e"] = bounds;
  } else {
    out["m_omega"] = ks.is_primitive() ? json_int(m_omega(ks)) : Json(nullptr);
    out["m_e"] = nullptr;
  }
  return out;
}

Json monomial_report(const Int& p, const Int& q) {
  Json out;
  out["p"] = json_int(p);
  out["q"] = json_int(q);
  out["continued_fraction"] = json_int_list(continued_fraction(p, q));
  WeightedGraph graph = monomial_resolution_graph(p, q);
  out["graph"] = graph_json(graph);
  Json curvettes = Json::array();
  for (const CurvetteRow& row : curvette_table(continued_fraction(p, q))) {
    Json r;
    r["level"] = row.j;
    r["digit"] = row.k;
    r["vertex"] = json_int(row.vertex);
    r["fraction"] = int_to_string(row.num) + "/" + int_to_string(row.den);
    curvettes.push_back(r);
  }
  out["curvettes"] = curvettes;
  FractionalClaimReport claim = fractional_claim_check(p, q);
  Json claim_json;
  claim_json["ok"] = claim.ok;
  Json rows = Json::array();
  for (const FractionalRowCheck& check : claim.rows) {
    Json r;
    r["vertex"] = json_int(check.row.vertex);
    r["fraction"] =
        int_to_string(check.row.num) + "/" + int_to_string(check.row.den);
    r["is_self"] = check.is_self;
    r["skipped_by_pattern"] = check.skipped_by_pattern;
    r["passed"] = check.passed;
    rows.push_back(r);
  }
  claim_json["rows"] = rows;
  out["fractional_claim"] = claim_json;
  return out;
}

Json theta_report(const KeySequence& ks, const std::vector<Rat>& theta1,
                  const std::vector<Rat>& theta2) {
  Json out;
  out["sequence"] = json_sequence(ks);
  out["theta1"] = json_rat_list(theta1);
  out["theta2"] = json_rat_list(theta2);
  out["equivalent"] = theta_equivalent(ks, theta1, theta2);
  return out;
}

Json enumerate_record(const KeySequence& ks) {
  const bool algebraic = is_algebraic(ks);
  const bool normal = is_normal_form(ks);
  Json out;
  out["sequence"] = json_sequence(ks);
  out["algebraic"] = algebraic;
  out["normal_form"] = normal;
  out["k_bar_x"] = json_int(k_bar_x(ks));
  out["m_omega"] = ks.is_primitive() ? json_int(m_omega(ks)) : Json(nullptr);
  const bool g2a_ready = ks.is_primitive() && algebraic && normal;
  out["g2a"] = g2a_ready ? Json(g2a_exists(ks)) : Json(nullptr);
  if (ks.is_primitive() && normal) {
    out["kawamata"] = singularity_class_name(kawamata_classify(ks));
    TableMatch match = table_classify(ks);
    out["table_row"] =
        match.row ? Json(table_row_name(*match.row)) : Json(nullptr);
  } else {
    out["kawamata"] = nullptr;
    out["table_row"] = nullptr;
  }
  out["del_pezzo"] = g2a_ready
                         ? Json(del_pezzo_report(ks).is_del_pezzo_with_g2a)
                         : Json(nullptr);
  return out;
}

std::string graph_dot(const WeightedGraph& graph) {
  std::ostringstream out;
  out << "graph resolution {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << graph.vertices[v].name << " ("
        << graph.vertices[v].weight.str() << ")\"];\n";
  }
  for (const auto& [a, b] : graph.edges) {
    out << "  v" << a << " -- v" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string schematic_dot(const DualGraphSchematic& schematic) {
  std::ostringstream out;
  const std::size_t l = schematic.branch_deltas.size();
  out << "graph schematic {\n";
  out << "  node [shape=box];\n";
  for (std::size_t j = 0; j < schematic.spine_deltas.size(); ++j) {
    out << "  s" << j + 1 << " [label=\"chain delta="
        << schematic.spine_deltas[j].str() << "\"];\n";
  }
  for (std::size_t j = 0; j < l; ++j) {
    out << "  j" << j + 1 << " [shape=circle, label=\"*\"];\n";
    out << "  b" << j + 1 << " [label=\"chain delta="
        << schematic.branch_deltas[j].str() << "\"];\n";
  }
  if (schematic.extra_chain_delta) {
    out << "  x [label=\"chain delta=" << schematic.extra_chain_delta->str()
        << "\"];\n";
  }
  for (std::size_t j = 0; j < l; ++j) {
    out << "  s" << j + 1 << " -- j" << j + 1 << ";\n";
    out << "  j" << j + 1 << " -- s" << j + 2 << ";\n";
    out << "  j" << j + 1 << " -- b" << j + 1 << ";\n";
  }
  if (schematic.extra_chain_delta) {
    out << "  s" << schematic.spine_deltas.size() << " -- x;\n";
  }
  out << "}\n";
  return out.str();
}

Json graph_json(const WeightedGraph& graph) {
  Json out;
  Json vertices = Json::array();
  for (const WeightedGraph::Vertex& v : graph.vertices) {
    Json item;
    item["name"] = v.name;
    item["weight"] = json_int(v.weight);
    vertices.push_back(item);
  }
  out["vertices"] = vertices;
  Json edges = Json::array();
  for (const auto& [a, b] : graph.edges) {
    edges.push_back(Json::array({a, b}));
  }
  out["edges"] = edges;
  return out;
}

Json schematic_json(const DualGraphSchematic& schematic) {
  Json out;
  out["spine_deltas"] = json_int_list(schematic.spine_deltas);
  out["branch_deltas"] = json_int_list(schematic.branch_deltas);
  out["extra_chain_delta"] = schematic.extra_chain_delta
                                 ? json_int(*schematic.extra_chain_delta)
                                 : Json(nullptr);
  return out;
}

}  // namespace primcomp
