#include "actions.hpp"

#include <algorithm>

namespace primcomp {

bool g2a_exists(const KeySequence& ks) {
  if (!ks.is_primitive()) {
    throw Error(ErrorCode::Precondition, "PrimitiveRequired",
                "the action criterion requires a primitive sequence");
  }
  if (!is_algebraic(ks)) {
    throw Error(ErrorCode::Precondition, "AlgebraicRequired",
                "the action criterion requires an algebraic sequence");
  }
  if (!is_normal_form(ks)) {
    throw Error(ErrorCode::Precondition, "NormalFormRequired",
                "the action criterion requires a normal-form sequence");
  }
  return ks.omega(0) + k_bar_x(ks) < 0;
}

Polynomial g_coefficient(int i, int m, const std::vector<Polynomial>& lambda,
                         const Polynomial& r) {
  if (i < 0 || i > m || static_cast<int>(lambda.size()) != m + 1) {
    throw Error(ErrorCode::BadArgument, "GCoefficientArity",
                "need 0 <= i <= m and m + 1 lambda polynomials");
  }
  Polynomial out = Polynomial::zero(r.vars());
  for (int j = i; j <= m; ++j) {
    Rat scale(binomial(static_cast<unsigned>(j), static_cast<unsigned>(j - i)),
              Int(j - i + 1));
    out += scale * lambda[static_cast<std::size_t>(j)] *
           r.pow(static_cast<std::uint32_t>(j - i + 1));
  }
  return out;
}

ActionFamily general_action(const GeneralActionSpec& spec) {
  if (spec.m < 0) {
    throw Error(ErrorCode::BadArgument, "NegativeDegree",
                "the degree parameter m must be >= 0");
  }
  if (static_cast<int>(spec.lambdas.size()) != spec.m + 1) {
    throw Error(ErrorCode::BadArgument, "LambdaArity",
                "need exactly m + 1 lambda entries");
  }

  std::vector<std::string> names = {"t1", "t2", "x", "y"};
  std::vector<std::string> params;
  for (int j = 0; j <= spec.m; ++j) {
    if (!spec.lambdas[static_cast<std::size_t>(j)]) {
      params.push_back("lambda" + std::to_string(j));
    }
  }
  if (!spec.c1) params.push_back("c1");
  if (!spec.c2) params.push_back("c2");
  if (!spec.cbar1) params.push_back("cbar1");
  if (!spec.cbar2) params.push_back("cbar2");
  if (!spec.mu0) params.push_back("mu0");
  names.insert(names.end(), params.begin(), params.end());
  VarSetPtr vars = VarSet::make(names);

  auto value_or_var = [&](const std::optional<Rat>& v, const std::string& nm) {
    if (v) return Polynomial::constant(vars, *v);
    return Polynomial::variable(vars, nm);
  };

  Polynomial t1 = Polynomial::variable(vars, "t1");
  Polynomial t2 = Polynomial::variable(vars, "t2");
  Polynomial x = Polynomial::variable(vars, "x");
  Polynomial y = Polynomial::variable(vars, "y");

  std::vector<Polynomial> lambda;
  for (int j = 0; j <= spec.m; ++j) {
    lambda.push_back(value_or_var(spec.lambdas[static_cast<std::size_t>(j)],
                                  "lambda" + std::to_string(j)));
  }
  Polynomial c1 = value_or_var(spec.c1, "c1");
  Polynomial c2 = value_or_var(spec.c2, "c2");
  Polynomial cbar1 = value_or_var(spec.cbar1, "cbar1");
  Polynomial cbar2 = value_or_var(spec.cbar2, "cbar2");
  Polynomial mu0 = value_or_var(spec.mu0, "mu0");

  Polynomial r = c1 * t1 + c2 * t2;
  Polynomial s = cbar2 * t1 - cbar1 * t2;

  ActionFamily family;
  family.m = spec.m;
  family.vars = vars;
  family.parameters = params;
  family.x_component = x;
  for (int i = 0; i <= spec.m; ++i) {
    Polynomial b_i = g_coefficient(i, spec.m, lambda, r);
    if (i == 0) b_i += mu0 * s;
    family.x_component += b_i * y.pow(static_cast<std::uint32_t>(i));
  }
  family.y_component = y + c1 * t1 + c2 * t2;
  return family;
}

ActionFamily tau_action_for_m(int m, const std::optional<Rat>& lambda) {
  if (m < 0) {
    throw Error(ErrorCode::BadArgument, "NegativeDegree",
                "the degree parameter m must be >= 0");
  }
  // Build directly so that the single symbolic parameter is named "lambda".
  std::vector<std::string> names = {"t1", "t2", "x", "y"};
  std::vector<std::string> params;
  if (!lambda) {
    params.push_back("lambda");
    names.push_back("lambda");
  }
  VarSetPtr vars = VarSet::make(names);

  Polynomial t1 = Polynomial::variable(vars, "t1");
  Polynomial t2 = Polynomial::variable(vars, "t2");
  Polynomial x = Polynomial::variable(vars, "x");
  Polynomial y = Polynomial::variable(vars, "y");
  Polynomial lam = lambda ? Polynomial::constant(vars, *lambda)
                          : Polynomial::variable(vars, "lambda");

  std::vector<Polynomial> lambdas(static_cast<std::size_t>(m + 1),
                                  Polynomial::zero(vars));
  lambdas[static_cast<std::size_t>(m)] = lam;

  ActionFamily family;
  family.m = m;
  family.vars = vars;
  family.parameters = params;
  family.x_component = x + t2;  // g_0 part below; mu0 * s = -(0*t1 - 1*t2)
  for (int i = 0; i <= m; ++i) {
    Polynomial b_i = g_coefficient(i, m, lambdas, t1);
    family.x_component += b_i * y.pow(static_cast<std::uint32_t>(i));
  }
  family.y_component = y + t1;
  return family;
}

ActionFamily tau_action(const KeySequence& ks,
                        const std::optional<Rat>& lambda) {
  if (!g2a_exists(ks)) {
    throw Error(ErrorCode::Precondition, "NoAdditiveAction",
                "this sequence does not admit the additive action");
  }
  Int m = m_omega(ks);
  internal_check(m >= 0 && fits_int64(m), "action degree out of range");
  return tau_action_for_m(static_cast<int>(m.convert_to<long long>()), lambda);
}

ActionFamily inject_fault(ActionFamily family) {
  Exponents exps(family.vars->size(), 0);
  exps[family.vars->index_of("t1")] =
      static_cast<std::uint32_t>(family.m + 2);
  family.x_component += Polynomial::monomial(family.vars, exps, Rat(1));
  return family;
}

AxiomCheckResult verify_action_axioms(const ActionFamily& family) {
  AxiomCheckResult out{
      false, false,
      Polynomial::zero(family.vars), Polynomial::zero(family.vars),
      Polynomial::zero(family.vars), Polynomial::zero(family.vars)};
  const VarSetPtr& vars = family.vars;

  // Identity: substituting t1 = t2 = 0 must give back (x, y).
  std::map<std::string, Polynomial> at_zero = {
      {"t1", Polynomial::zero(vars)}, {"t2", Polynomial::zero(vars)}};
  out.identity_residual_x = family.x_component.substitute(at_zero, vars) -
                            Polynomial::variable(vars, "x");
  out.identity_residual_y = family.y_component.substitute(at_zero, vars) -
                            Polynomial::variable(vars, "y");
  out.identity_ok =
      out.identity_residual_x.is_zero() && out.identity_residual_y.is_zero();

  // Composition over vars extended by the primed parameters.
  std::vector<std::string> extended_names;
  for (const std::string& nm : vars->names()) {
    extended_names.push_back(nm);
    if (nm == "t2") {
      extended_names.push_back("t1p");
      extended_names.push_back("t2p");
    }
  }
  VarSetPtr ext = VarSet::make(extended_names);

  std::map<std::string, Polynomial> primed = {
      {"t1", Polynomial::variable(ext, "t1p")},
      {"t2", Polynomial::variable(ext, "t2p")}};
  Polynomial inner_x = family.x_component.substitute(primed, ext);
  Polynomial inner_y = family.y_component.substitute(primed, ext);

  std::map<std::string, Polynomial> through_inner = {{"x", inner_x},
                                                     {"y", inner_y}};
  Polynomial composed_x = family.x_component.substitute(through_inner, ext);
  Polynomial composed_y = family.y_component.substitute(through_inner, ext);

  std::map<std::string, Polynomial> summed = {
      {"t1", Polynomial::variable(ext, "t1") + Polynomial::variable(ext, "t1p")},
      {"t2",
       Polynomial::variable(ext, "t2") + Polynomial::variable(ext, "t2p")}};
  Polynomial sum_x = family.x_component.substitute(summed, ext);
  Polynomial sum_y = family.y_component.substitute(summed, ext);

  out.composition_residual_x = composed_x - sum_x;
  out.composition_residual_y = composed_y - sum_y;
  out.composition_ok = out.composition_residual_x.is_zero() &&
                       out.composition_residual_y.is_zero();
  return out;
}

std::string render_action(const ActionFamily& family) {
  const VarSetPtr& vars = family.vars;
  Polynomial x = Polynomial::variable(vars, "x");
  Polynomial y = Polynomial::variable(vars, "y");
  Polynomial t1 = Polynomial::variable(vars, "t1");
  Polynomial t2 = Polynomial::variable(vars, "t2");

  bool symbolic_lambda =
      std::find(family.parameters.begin(), family.parameters.end(),
                "lambda") != family.parameters.end();
  if (symbolic_lambda) {
    std::size_t lambda_idx = vars->index_of("lambda");
    Polynomial inner = family.x_component.coefficient_of(lambda_idx, 1);
    Polynomial remainder =
        family.x_component -
        Polynomial::variable(vars, "lambda") * inner;
    internal_check(remainder == x + t2 && family.y_component == y + t1,
                   "structured rendering expects the tau shape");
    return "(x + lambda*(" + inner.to_string() + ") + t2, y + t1)";
  }
  if (family.x_component == x + t2 && family.y_component == y + t1) {
    return "(x + t2, y + t1)";
  }
  return "(" + family.x_component.to_string() + ", " +
         family.y_component.to_string() + ")";
}

namespace {

// Linear-homogeneous test in Q[t1, t2]: p = p1*t1 + p2*t2.
bool extract_linear(const Polynomial& p, Rat* p1, Rat* p2) {
  Exponents e1(p.vars()->size(), 0), e2(p.vars()->size(), 0);
  e1[p.vars()->index_of("t1")] = 1;
  e2[p.vars()->index_of("t2")] = 1;
  Rat a = p.coefficient(e1);
  Rat b = p.coefficient(e2);
  Polynomial rebuilt = a * Polynomial::variable(p.vars(), "t1") +
                       b * Polynomial::variable(p.vars(), "t2");
  if (p != rebuilt) return false;
  *p1 = a;
  *p2 = b;
  return true;
}

}  // namespace

CandidateClassification classify_action_candidate(
    const Polynomial& a, const Polynomial& b, const Polynomial& c,
    const std::vector<Polynomial>& b_list) {
  CandidateClassification out;
  const VarSetPtr& vars = c.vars();
  if (b_list.empty()) {
    throw Error(ErrorCode::BadArgument, "EmptyCoefficientList",
                "need at least the y^0 coefficient");
  }
  Polynomial one = Polynomial::constant(vars, Rat(1));
  if (a != one || b != one) {
    out.failure = "scale_not_identity";
    return out;
  }

  Rat c1, c2;
  if (!extract_linear(c, &c1, &c2)) {
    out.failure = "translation_not_linear";
    return out;
  }
  out.c1 = c1;
  out.c2 = c2;

  if (c1 == 0 && c2 == 0) {
    // Translation-free: the family is an action iff every b_i is additive.
    for (std::size_t i = 0; i < b_list.size(); ++i) {
      Rat p1, p2;
      if (!extract_linear(b_list[i], &p1, &p2)) {
        out.failure = "coefficient_not_additive";
        out.failure_index = static_cast<int>(i);
        return out;
      }
      out.linear_coeffs.emplace_back(p1, p2);
    }
    out.is_action = true;
    out.has_translation = false;
    return out;
  }

  // Rotated coordinates: s2 = c1*t1 + c2*t2, s1 = c2*t1 - c1*t2; determinant
  // -(c1^2 + c2^2) != 0 over Q, with  t1 = (c2*s1 + c1*s2)/D and
  // t2 = (-c1*s1 + c2*s2)/D for D = c1^2 + c2^2.
  VarSetPtr svars = VarSet::make({"s1", "s2"});
  Rat d = c1 * c1 + c2 * c2;
  Polynomial s1 = Polynomial::variable(svars, "s1");
  Polynomial s2 = Polynomial::variable(svars, "s2");
  std::map<std::string, Polynomial> to_s = {
      {"t1", (c2 / d) * s1 + (c1 / d) * s2},
      {"t2", (-c1 / d) * s1 + (c2 / d) * s2}};

  const int m = static_cast<int>(b_list.size()) - 1;
  std::vector<Polynomial> tilde;
  tilde.reserve(b_list.size());
  for (const Polynomial& bi : b_list) {
    tilde.push_back(bi.substitute(to_s, svars));
  }

  std::size_t s1_idx = 0;
  for (int i = 0; i <= m; ++i) {
    const Polynomial& bt = tilde[static_cast<std::size_t>(i)];
    std::uint32_t s1_deg = bt.degree_in(s1_idx);
    if (i >= 1 && s1_deg > 0) {
      out.failure = "coefficient_depends_on_s1";
      out.failure_index = i;
      return out;
    }
    if (i == 0) {
      if (s1_deg > 1) {
        out.failure = "coefficient_depends_on_s1";
        out.failure_index = 0;
        return out;
      }
      Polynomial mu_part = bt.coefficient_of(s1_idx, 1);
      if (!(mu_part.is_zero() || mu_part.term_count() == 1)) {
        out.failure = "mixed_s1_term";
        out.failure_index = 0;
        return out;
      }
      Rat mu = mu_part.constant_coefficient();
      if (!(mu_part == Polynomial::constant(svars, mu))) {
        out.failure = "mixed_s1_term";
        out.failure_index = 0;
        return out;
      }
      out.mu0 = mu;
    }
  }

  // Extract lambdas from the s2-linear coefficients and verify the g-shape.
  std::vector<Polynomial> lambda_polys;
  out.lambdas.clear();
  Exponents s2_lin(svars->size(), 0);
  s2_lin[svars->index_of("s2")] = 1;
  for (int i = 0; i <= m; ++i) {
    Polynomial body = tilde[static_cast<std::size_t>(i)];
    if (i == 0) {
      body -= out.mu0 * s1;
    }
    Rat lam = body.coefficient(s2_lin);
    out.lambdas.push_back(lam);
    lambda_polys.push_back(Polynomial::constant(svars, lam));
  }
  for (int i = 0; i <= m; ++i) {
    Polynomial body = tilde[static_cast<std::size_t>(i)];
    if (i == 0) body -= out.mu0 * s1;
    Polynomial expected = g_coefficient(i, m, lambda_polys, s2);
    if (body != expected) {
      out.failure = "not_g_shape";
      out.failure_index = i;
      return out;
    }
  }
  out.is_action = true;
  out.has_translation = true;
  return out;
}

ModuliDescription moduli_description(const KeySequence& ks) {
  if (!g2a_exists(ks)) {
    throw Error(ErrorCode::Precondition, "NoAdditiveAction",
                "moduli are defined only when the additive action exists");
  }
  if (ks.n() == 0 && ks.omega(0) == 1 && ks.omega(1) == 1) {
    throw Error(ErrorCode::Precondition, "ProjectivePlaneExcluded",
                "the projective plane is excluded from the moduli description");
  }
  ModuliDescription out;
  InvariantBundle bundle = invariant_bundle(ks);
  if (bundle.m_omega == 0) {
    out.kind = ModuliDescription::Kind::Point;
    return out;
  }
  if (ks.n() == 0) {
    out.kind = ModuliDescription::Kind::TwoPoints;
    return out;
  }
  out.kind = ModuliDescription::Kind::LineModRoots;
  out.root_order =
      ks.n() == 1 ? bundle.bar_omega[1] : *bundle.bar_omega_prime;
  out.exponent = bundle.bar_omega[0];
  internal_check(out.root_order >= 1, "root order must be positive");
  return out;
}

const char* moduli_kind_name(ModuliDescription::Kind kind) {
  switch (kind) {
    case ModuliDescription::Kind::Point:
      return "point";
    case ModuliDescription::Kind::TwoPoints:
      return "two_points";
    case ModuliDescription::Kind::LineModRoots:
      return "line_mod_roots";
  }
  return "unknown";
}

bool tau_equivalent(const KeySequence& ks, const Rat& lambda1,
                    const Rat& lambda2) {
  ModuliDescription moduli = moduli_description(ks);
  switch (moduli.kind) {
    case ModuliDescription::Kind::Point:
      return true;
    case ModuliDescription::Kind::TwoPoints:
      return (lambda1 == 0) == (lambda2 == 0);
    case ModuliDescription::Kind::LineModRoots: {
      if (lambda1 == lambda2) return true;
      Int g = moduli.root_order / gcd_int(moduli.root_order, moduli.exponent);
      return (g % 2 == 0) && lambda2 == -lambda1;
    }
  }
  throw_internal("unhandled moduli kind");
}

}  // namespace primcomp
