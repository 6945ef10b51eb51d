#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "key_sequence.hpp"
#include "polynomial.hpp"
#include "surface.hpp"

namespace primcomp {

// Whether the complement of the boundary carries the two-parameter additive
// action. Requires a primitive, algebraic, normal-form sequence; the
// criterion is omega_0 + k_bar_x < 0.
bool g2a_exists(const KeySequence& ks);

// A two-parameter polynomial family (t1, t2) acting on the plane:
//   (x, y) -> (x_component, y_component),
// with both components over `vars` = (t1, t2, x, y [, symbolic parameters]).
struct ActionFamily {
  int m = 0;
  VarSetPtr vars;
  Polynomial x_component;
  Polynomial y_component;
  std::vector<std::string> parameters;  // symbolic parameter names
};

// g_i(r) = sum_{j=i}^{m} lambda[j] / (j - i + 1) * C(j, j - i) * r^{j-i+1};
// lambda[j] and r are polynomials over one common varset.
Polynomial g_coefficient(int i, int m, const std::vector<Polynomial>& lambda,
                         const Polynomial& r);

// The general family: with r = c1*t1 + c2*t2 and s = cbar2*t1 - cbar1*t2,
//   x -> x + sum_{i=0}^{m} b_i * y^i,  b_0 = g_0(r) + mu0 * s,  b_i = g_i(r),
//   y -> y + c1*t1 + c2*t2.
// Every nullopt parameter stays symbolic (named lambda0..lambdam, c1, c2,
// cbar1, cbar2, mu0).
struct GeneralActionSpec {
  int m = 0;
  std::vector<std::optional<Rat>> lambdas;  // size m + 1
  std::optional<Rat> c1, c2;
  std::optional<Rat> cbar1, cbar2;
  std::optional<Rat> mu0;
};

ActionFamily general_action(const GeneralActionSpec& spec);

// The one-parameter normal form tau: the general family with
// lambdas = (0, ..., 0, lambda), c = cbar = (1, 0), mu0 = -1:
//   (x, y) -> (x + lambda * sum_i C(m, m-i)/(m-i+1) * t1^(m-i+1) * y^i + t2,
//              y + t1).
// nullopt lambda stays symbolic (named "lambda").
ActionFamily tau_action_for_m(int m, const std::optional<Rat>& lambda);

// tau for a sequence: m = m_omega(ks); requires g2a_exists(ks).
ActionFamily tau_action(const KeySequence& ks,
                        const std::optional<Rat>& lambda);

// Adds t1^(m+2) to the x component; the result always violates the
// composition axiom (used to exercise the verifier's failure path).
ActionFamily inject_fault(ActionFamily family);

// Exact verification of the action axioms:
//   identity:    the map at t1 = t2 = 0 is the identity;
//   composition: applying (t1', t2') then (t1, t2) equals applying
//                (t1 + t1', t2 + t2').
// Residuals are zero polynomials exactly when the axioms hold; the
// composition residuals live over vars extended by (t1p, t2p).
struct AxiomCheckResult {
  bool identity_ok = false;
  bool composition_ok = false;
  Polynomial identity_residual_x, identity_residual_y;
  Polynomial composition_residual_x, composition_residual_y;
  bool ok() const { return identity_ok && composition_ok; }
};

AxiomCheckResult verify_action_axioms(const ActionFamily& family);

// Canonical text form. Families with a symbolic "lambda" parameter render
// structurally as "(x + lambda*(...) + t2, y + t1)"; the lambda = 0 instance
// renders as "(x + t2, y + t1)"; everything else uses the flat canonical
// polynomial rendering of both components.
std::string render_action(const ActionFamily& family);

// Decides whether a candidate map (x, y) -> (a*x + sum b_i*y^i, b*y + c), with
// a, b, c, b_i in Q[t1, t2], is one of the standard families above, and
// extracts its parameters:
//   - a and b must be the constant 1;
//   - c must be homogeneous linear, c = c1*t1 + c2*t2;
//   - c = 0: every b_i must be homogeneous linear (additive);
//   - c != 0: in the rotated coordinates s2 = c1*t1 + c2*t2,
//     s1 = c2*t1 - c1*t2, each b_i must equal g_i(s2) (plus mu0*s1 for b_0);
//     lambdas are read off the linear coefficients.
struct CandidateClassification {
  bool is_action = false;
  std::string failure;               // non-empty iff !is_action
  std::optional<int> failure_index;  // offending b_i, when applicable
  bool has_translation = false;
  Rat c1, c2;
  Rat mu0;
  std::vector<Rat> lambdas;                      // translation case
  std::vector<std::pair<Rat, Rat>> linear_coeffs;  // translation-free case
};

CandidateClassification classify_action_candidate(
    const Polynomial& a, const Polynomial& b, const Polynomial& c,
    const std::vector<Polynomial>& b_list);

// Moduli of the actions on a fixed model, up to equivalence. Requires
// g2a_exists(ks) and excludes (1,1).
//   Point        — m_omega = 0 (a single action up to conjugation);
//   TwoPoints    — n = 0, m_omega > 0 (the zero and non-zero classes);
//   LineModRoots — n >= 1, m_omega > 0: a line of parameters lambda modulo
//                  lambda ~ zeta^exponent * lambda with zeta^root_order = 1.
struct ModuliDescription {
  enum class Kind { Point, TwoPoints, LineModRoots };
  Kind kind = Kind::Point;
  Int root_order;  // LineModRoots only
  Int exponent;    // LineModRoots only
};

ModuliDescription moduli_description(const KeySequence& ks);

const char* moduli_kind_name(ModuliDescription::Kind kind);

// Equivalence of tau parameters under the moduli identification, over the
// rationals (where the only roots of unity are +-1): with
// g = root_order / gcd(root_order, exponent), lambda ~ lambda' iff
// lambda' = lambda, or g is even and lambda' = -lambda. For the Point kind
// everything is equivalent; for TwoPoints the classes are zero vs non-zero.
bool tau_equivalent(const KeySequence& ks, const Rat& lambda1,
                    const Rat& lambda2);

}  // namespace primcomp
