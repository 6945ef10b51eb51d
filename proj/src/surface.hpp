#pragma once

#include <optional>
#include <string>
#include <vector>

#include "key_sequence.hpp"
#include "polynomial.hpp"

namespace primcomp {

// -(omega_0 + omega_{n+1} + 1 - sum_{k=1}^{n} (alpha_k - 1) * omega_k).
// Invariant under passing to the essential subsequence.
Int k_bar_x(const KeySequence& ks);

// floor(-(k_bar_x + omega_1 + 1) / omega_1); requires a primitive sequence.
Int m_omega(const KeySequence& ks);

// Derived weight data for primitive sequences. bar_omega[k] = omega_k / e_n
// for 0 <= k <= n; bar_omega_star_terms[k-2] = alpha_1 * bar_omega_1 +
// sum_{j=2}^{k-1} (alpha_j - 1) * bar_omega_j - bar_omega_k for 2 <= k <= n;
// bar_omega_star = gcd of those terms (n >= 2 only); bar_omega_prime =
// gcd(bar_omega_1, ..., bar_omega_n) (n >= 1 only).
struct InvariantBundle {
  Int k_bar_x;
  Int m_omega;
  std::vector<Int> bar_omega;
  std::vector<Int> bar_omega_star_terms;
  std::optional<Int> bar_omega_star;
  std::optional<Int> bar_omega_prime;
};

InvariantBundle invariant_bundle(const KeySequence& ks);

// The boundary equations G_k, k = 1..n, over variables
// (w, y0, ..., y{n+1} [, theta1, ..., thetan]):
//   G_k = w^(alpha_k*omega_k - omega_{k+1}) * y_{k+1} - y_k^alpha_k
//         + theta_k * prod_{j<k} y_j^beta_{k,j}.
// Each G_k is weighted-homogeneous of degree alpha_k * omega_k for the
// weights (1, omega_0, ..., omega_{n+1}) (thetas weightless).
// The first overload keeps the thetas symbolic; the second substitutes the
// given non-zero rational values (size n).
std::vector<Polynomial> defining_equations(const KeySequence& ks);
std::vector<Polynomial> defining_equations(const KeySequence& ks,
                                           const std::vector<Rat>& thetas);

// mu_i for i = 1..n: with the essential indices i_0 = 0 < i_1 < ... and
// i_k <= i < i_{k+1},
//   mu_i = prod_{t=1}^{k} alpha_{i_t}
//          - sum_{j=1}^{k} (prod_{t=1}^{j-1} alpha_{i_t}) * beta_{i, i_j},
// where beta_{i,j} counts as 0 for j >= i.
std::vector<Int> mu_exponents(const KeySequence& ks);

// Integer kernel basis of the r x n matrix `rows`: a lattice basis of
// { v in Z^n : rows * v = 0 }, computed by unimodular column reduction.
std::vector<std::vector<Int>> integer_kernel_basis(
    const std::vector<std::vector<Int>>& rows, std::size_t width);

// Whether two theta tuples (non-zero rationals, size n) give isomorphic
// models: the ratio vector r_i = theta2_i / theta1_i must lie in the image of
// the monomial map (s, t) -> (s^{-beta_{i,0}} t^{mu_i})_i over the complex
// torus. Because the kernel lattice of an integer matrix is saturated, this
// holds iff prod_i r_i^{v_i} = 1 for every basis vector v of that kernel —
// an exact rational test.
bool theta_equivalent(const KeySequence& ks, const std::vector<Rat>& theta1,
                      const std::vector<Rat>& theta2);

// Automorphism group description; requires a primitive normal-form sequence.
//   ProjectivePlane     — (1,1).
//   WeightedPlaneQOne   — n = 0, omega_1 = 1, omega_0 > 1.
//   WeightedPlaneQBig   — n = 0, omega_0 > omega_1 > 1.
//   General             — n >= 1: (x, y) -> (a^x_exp * x + f(y), a^y_exp * y + c)
//                         with deg f <= f_degree_bound, a constrained to the
//                         scale_root_order-th roots of unity when that field
//                         is set (n >= 2) and arbitrary non-zero otherwise,
//                         and the translation c admitted only when
//                         y_translation_allowed.
struct AutDescription {
  enum class Kind {
    ProjectivePlane,
    WeightedPlaneQOne,
    WeightedPlaneQBig,
    General,
  };
  Kind kind = Kind::ProjectivePlane;
  Int x_scale_exponent;                 // bar_omega_0 (General)
  Int y_scale_exponent;                 // bar_omega_1 (General)
  Int f_degree_bound;                   // m_omega    (General)
  std::optional<Int> scale_root_order;  // bar_omega_star when n >= 2
  bool y_translation_allowed = false;   // omega_0 + k_bar_x < 0
};

AutDescription aut_description(const KeySequence& ks);

const char* aut_kind_name(AutDescription::Kind kind);

}  // namespace primcomp
