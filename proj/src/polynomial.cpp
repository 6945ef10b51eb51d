#include "polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace primcomp {

namespace {

std::atomic<std::uint32_t> g_exponent_limit{1u << 20};

}  // namespace

std::uint32_t exponent_limit() { return g_exponent_limit.load(); }

void set_exponent_limit(std::uint32_t limit) { g_exponent_limit.store(limit); }

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw Error(ErrorCode::BadArgument, "EmptyVariableName",
                  "variable names must be non-empty");
    }
    auto [it, inserted] = index_.emplace(names_[i], i);
    (void)it;
    if (!inserted) {
      throw Error(ErrorCode::BadArgument, "DuplicateVariable",
                  "duplicate variable name '" + names_[i] + "'");
    }
  }
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
  return std::shared_ptr<const VarSet>(new VarSet(std::move(names)));
}

std::optional<std::size_t> VarSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VarSet::index_of(const std::string& name) const {
  auto found = find(name);
  if (!found) {
    throw Error(ErrorCode::BadArgument, "UnknownVariable",
                "unknown variable '" + name + "'");
  }
  return *found;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  internal_check(a.size() == b.size(), "exponent tuples of different arity");
  std::uint64_t da = 0, db = 0;
  for (std::uint32_t e : a) da += e;
  for (std::uint32_t e : b) db += e;
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::zero(VarSetPtr vars) {
  internal_check(vars != nullptr, "null varset");
  return Polynomial(std::move(vars));
}

Polynomial Polynomial::constant(VarSetPtr vars, const Rat& value) {
  Polynomial p = zero(std::move(vars));
  if (value != 0) {
    p.terms_.emplace(Exponents(p.vars_->size(), 0), value);
  }
  return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, const std::string& name) {
  std::size_t index = vars->index_of(name);
  return variable(std::move(vars), index);
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index) {
  internal_check(index < vars->size(), "variable index out of range");
  Polynomial p = zero(std::move(vars));
  Exponents e(p.vars_->size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

Polynomial Polynomial::monomial(VarSetPtr vars, const Exponents& exps,
                                const Rat& coeff) {
  if (exps.size() != vars->size()) {
    throw Error(ErrorCode::BadArgument, "ExponentArity",
                "exponent tuple arity does not match variable count");
  }
  const std::uint32_t limit = exponent_limit();
  for (std::uint32_t e : exps) {
    if (e > limit) {
      throw Error(ErrorCode::Limit, "ExponentLimit",
                  "monomial exponent exceeds configured limit");
    }
  }
  Polynomial p = zero(std::move(vars));
  if (coeff != 0) p.terms_.emplace(exps, coeff);
  return p;
}

std::optional<std::uint64_t> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Leading term has maximal total degree under graded-lex-descending order.
  std::uint64_t d = 0;
  for (std::uint32_t e : terms_.begin()->first) d += e;
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var_index) const {
  internal_check(var_index < vars_->size(), "variable index out of range");
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    d = std::max(d, e[var_index]);
  }
  return d;
}

Rat Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  if (it == terms_.end()) return Rat(0);
  return it->second;
}

Polynomial Polynomial::coefficient_of(std::size_t var_index,
                                      std::uint32_t k) const {
  internal_check(var_index < vars_->size(), "variable index out of range");
  Polynomial out = zero(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var_index] != k) continue;
    Exponents reduced = e;
    reduced[var_index] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

Rat Polynomial::constant_coefficient() const {
  return coefficient(Exponents(vars_->size(), 0));
}

void Polynomial::add_term(const Exponents& exps, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_vars(const Polynomial& rhs) const {
  if (vars_ == rhs.vars_) return;
  if (vars_->names() != rhs.vars_->names()) {
    throw Error(ErrorCode::BadArgument, "VarSetMismatch",
                "polynomials over different variable sets");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = zero(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_vars(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_vars(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  check_same_vars(rhs);
  Polynomial out = zero(vars_);
  const std::uint32_t limit = exponent_limit();
  const std::size_t arity = vars_->size();
  Exponents sum(arity, 0);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < arity; ++i) {
        std::uint64_t s =
            static_cast<std::uint64_t>(ea[i]) + static_cast<std::uint64_t>(eb[i]);
        if (s > limit) {
          throw Error(ErrorCode::Limit, "ExponentLimit",
                      "product exponent exceeds configured limit");
        }
        sum[i] = static_cast<std::uint32_t>(s);
      }
      out.add_term(sum, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) {
    (void)e;
    c *= scalar;
  }
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result = constant(vars_, Rat(1));
  Polynomial base = *this;
  std::uint32_t e = exponent;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Polynomial>& bindings,
    const VarSetPtr& target) const {
  internal_check(target != nullptr, "null target varset");
  const std::size_t arity = vars_->size();

  // Resolve each source variable to either a bound polynomial or an index in
  // the target varset, and record the largest exponent each bound polynomial
  // is raised to so its powers can be computed once.
  std::vector<const Polynomial*> bound(arity, nullptr);
  std::vector<std::size_t> passthrough_index(arity, 0);
  std::vector<std::uint32_t> max_exp(arity, 0);
  for (std::size_t i = 0; i < arity; ++i) {
    const std::string& vname = vars_->name(i);
    auto it = bindings.find(vname);
    if (it != bindings.end()) {
      if (it->second.vars() != target &&
          it->second.vars()->names() != target->names()) {
        throw Error(ErrorCode::BadArgument, "VarSetMismatch",
                    "binding for '" + vname + "' is not over the target varset");
      }
      bound[i] = &it->second;
    } else {
      auto found = target->find(vname);
      if (!found) {
        throw Error(ErrorCode::BadArgument, "UnknownVariable",
                    "unbound variable '" + vname +
                        "' does not exist in the target varset");
      }
      passthrough_index[i] = *found;
    }
  }
  for (const auto& [e, c] : terms_) {
    (void)c;
    for (std::size_t i = 0; i < arity; ++i) {
      if (bound[i]) max_exp[i] = std::max(max_exp[i], e[i]);
    }
  }

  // powers[i][k] = bound[i]^k, built incrementally.
  std::vector<std::vector<Polynomial>> powers(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    if (!bound[i] || max_exp[i] == 0) continue;
    powers[i].reserve(max_exp[i] + 1);
    powers[i].push_back(constant(target, Rat(1)));
    for (std::uint32_t k = 1; k <= max_exp[i]; ++k) {
      powers[i].push_back(powers[i].back() * (*bound[i]));
    }
  }

  Polynomial result = zero(target);
  for (const auto& [e, c] : terms_) {
    Exponents direct(target->size(), 0);
    Polynomial acc = constant(target, c);
    bool acc_used = false;
    for (std::size_t i = 0; i < arity; ++i) {
      if (e[i] == 0) continue;
      if (bound[i]) {
        acc *= powers[i][e[i]];
        acc_used = true;
      } else {
        std::uint64_t s = static_cast<std::uint64_t>(direct[passthrough_index[i]]) +
                          static_cast<std::uint64_t>(e[i]);
        if (s > exponent_limit()) {
          throw Error(ErrorCode::Limit, "ExponentLimit",
                      "substitution exponent exceeds configured limit");
        }
        direct[passthrough_index[i]] = static_cast<std::uint32_t>(s);
      }
    }
    (void)acc_used;
    acc *= monomial(target, direct, Rat(1));
    result += acc;
  }
  return result;
}

Polynomial Polynomial::transport(const VarSetPtr& target) const {
  return substitute({}, target);
}

Rat Polynomial::evaluate(const std::map<std::string, Rat>& values) const {
  Rat result(0);
  const std::size_t arity = vars_->size();
  std::vector<const Rat*> value_of(arity, nullptr);
  for (std::size_t i = 0; i < arity; ++i) {
    auto it = values.find(vars_->name(i));
    if (it != values.end()) value_of[i] = &it->second;
  }
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < arity; ++i) {
      if (e[i] == 0) continue;
      if (!value_of[i]) {
        throw Error(ErrorCode::BadArgument, "UnboundVariable",
                    "evaluate: no value for variable '" + vars_->name(i) + "'");
      }
      Rat p(1);
      Rat base = *value_of[i];
      std::uint32_t k = e[i];
      while (k > 0) {
        if (k & 1u) p *= base;
        k >>= 1u;
        if (k > 0) base *= base;
      }
      term *= p;
    }
    result += term;
  }
  return result;
}

bool Polynomial::weighted_homogeneous_degree(const std::vector<Int>& weights,
                                             Int* degree_out) const {
  if (weights.size() != vars_->size()) {
    throw Error(ErrorCode::BadArgument, "WeightArity",
                "weight vector arity does not match variable count");
  }
  bool have = false;
  Int degree = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    Int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      d += weights[i] * Int(e[i]);
    }
    if (!have) {
      degree = d;
      have = true;
    } else if (d != degree) {
      return false;
    }
  }
  if (have && degree_out) *degree_out = degree;
  return true;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (vars_ != rhs.vars_ && vars_->names() != rhs.vars_->names()) return false;
  return terms_ == rhs.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c < 0;
    Rat magnitude = negative ? Rat(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_->name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string body;
    if (mono.empty()) {
      body = rat_to_string(magnitude);
    } else if (magnitude == 1) {
      body = mono;
    } else {
      body = rat_to_string(magnitude) + "*" + mono;
    }
    if (first) {
      out << (negative ? "-" : "") << body;
      first = false;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
  }
  return out.str();
}

PolyMap::PolyMap(std::vector<std::pair<std::string, Polynomial>> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorCode::BadArgument, "EmptyPolyMap",
                "a polynomial map needs at least one component");
  }
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (components_[i].second.vars() != components_[0].second.vars() &&
        components_[i].second.vars()->names() !=
            components_[0].second.vars()->names()) {
      throw Error(ErrorCode::BadArgument, "VarSetMismatch",
                  "polynomial map components over different variable sets");
    }
  }
}

const Polynomial& PolyMap::component(const std::string& name) const {
  for (const auto& [n, p] : components_) {
    if (n == name) return p;
  }
  throw Error(ErrorCode::BadArgument, "UnknownComponent",
              "no component named '" + name + "'");
}

const VarSetPtr& PolyMap::vars() const { return components_[0].second.vars(); }

bool PolyMap::operator==(const PolyMap& rhs) const {
  if (components_.size() != rhs.components_.size()) return false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].first != rhs.components_[i].first) return false;
    if (components_[i].second != rhs.components_[i].second) return false;
  }
  return true;
}

std::string PolyMap::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += ", ";
    out += components_[i].second.to_string();
  }
  out += ")";
  return out;
}

}  // namespace primcomp
