#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace primcomp {

// An ordered set of variable names. Polynomials are always relative to one
// VarSet; the declaration order fixes both the term order and the factor
// order used when rendering.
class VarSet {
 public:
  static std::shared_ptr<const VarSet> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;
  // Like find(), but throws ErrorCode::BadArgument when absent.
  std::size_t index_of(const std::string& name) const;

 private:
  explicit VarSet(std::vector<std::string> names);
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;
using Exponents = std::vector<std::uint32_t>;

// Per-variable exponent bound; exceeding it throws ErrorCode::Limit. The
// default (2^20) is far above anything the domain computations produce, so
// hitting it signals runaway symbolic growth rather than a legitimate value.
std::uint32_t exponent_limit();
void set_exponent_limit(std::uint32_t limit);

// True when a > b in graded-lexicographic order: larger total degree first,
// ties broken lexicographically on the exponent tuple left-to-right.
bool grlex_greater(const Exponents& a, const Exponents& b);

struct GrlexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grlex_greater(a, b);
  }
};

// Exact multivariate polynomial over the rationals, kept in canonical form:
// no zero coefficients, terms ordered graded-lexicographically descending.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rat, GrlexDesc>;

  // A detached zero with no varset: valid only as an assignment target
  // (needed so aggregates holding polynomials can be default-constructed).
  Polynomial() = default;

  static Polynomial zero(VarSetPtr vars);
  static Polynomial constant(VarSetPtr vars, const Rat& value);
  static Polynomial variable(VarSetPtr vars, const std::string& name);
  static Polynomial variable(VarSetPtr vars, std::size_t index);
  static Polynomial monomial(VarSetPtr vars, const Exponents& exps,
                             const Rat& coeff);

  const VarSetPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Total degree of the leading term; nullopt for the zero polynomial.
  std::optional<std::uint64_t> total_degree() const;
  // Largest exponent of the given variable (0 for the zero polynomial).
  std::uint32_t degree_in(std::size_t var_index) const;

  Rat coefficient(const Exponents& exps) const;
  // The polynomial q with p = sum_k q_k * v^k; returns q_k (v-exponent zeroed).
  Polynomial coefficient_of(std::size_t var_index, std::uint32_t k) const;
  // Constant term.
  Rat constant_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rat& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) {
    a *= b;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rat& s) {
    a *= s;
    return a;
  }
  friend Polynomial operator*(const Rat& s, Polynomial a) {
    a *= s;
    return a;
  }

  Polynomial pow(std::uint32_t exponent) const;

  // Replaces each bound variable by its polynomial (over `target`); variables
  // without a binding must exist in `target` and pass through unchanged.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings,
                        const VarSetPtr& target) const;
  // Re-expresses the polynomial over a varset containing all its variables.
  Polynomial transport(const VarSetPtr& target) const;

  // Full evaluation; every variable occurring in the polynomial must be bound.
  Rat evaluate(const std::map<std::string, Rat>& values) const;

  // True when every term has the same weighted degree (zero counts as
  // homogeneous); on success stores that degree for non-zero polynomials.
  bool weighted_homogeneous_degree(const std::vector<Int>& weights,
                                   Int* degree_out) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  // Canonical text form, e.g. "1/2*x^2 - 1/2*y^2 + 1/2"; "0" when zero.
  std::string to_string() const;

 private:
  explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}
  void add_term(const Exponents& exps, const Rat& coeff);
  void check_same_vars(const Polynomial& rhs) const;

  VarSetPtr vars_;
  TermMap terms_;
};

// An ordered list of named polynomial components, all over one varset.
class PolyMap {
 public:
  PolyMap(std::vector<std::pair<std::string, Polynomial>> components);

  std::size_t size() const { return components_.size(); }
  const std::string& name(std::size_t i) const { return components_[i].first; }
  const Polynomial& component(std::size_t i) const {
    return components_[i].second;
  }
  const Polynomial& component(const std::string& name) const;
  const VarSetPtr& vars() const;

  bool operator==(const PolyMap& rhs) const;
  bool operator!=(const PolyMap& rhs) const { return !(*this == rhs); }

  // "(f_1, ..., f_r)" with canonical component rendering.
  std::string to_string() const;

 private:
  std::vector<std::pair<std::string, Polynomial>> components_;
};

}  // namespace primcomp
