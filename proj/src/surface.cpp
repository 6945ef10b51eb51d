#include "surface.hpp"

#include <algorithm>

namespace primcomp {

Int k_bar_x(const KeySequence& ks) {
  const int n = ks.n();
  Int correction = 0;
  for (int k = 1; k <= n; ++k) {
    correction += (ks.alpha(k) - 1) * ks.omega(k);
  }
  return -(ks.omega(0) + ks.omega(n + 1) + 1 - correction);
}

namespace {

void require_primitive(const KeySequence& ks, const char* what) {
  if (!ks.is_primitive()) {
    throw Error(ErrorCode::Precondition, "PrimitiveRequired",
                std::string(what) + " requires a primitive sequence");
  }
}

}  // namespace

Int m_omega(const KeySequence& ks) {
  require_primitive(ks, "m_omega");
  Int k = k_bar_x(ks);
  return floor_rat(Rat(-(k + ks.omega(1) + 1), ks.omega(1)));
}

InvariantBundle invariant_bundle(const KeySequence& ks) {
  require_primitive(ks, "invariant_bundle");
  const int n = ks.n();
  InvariantBundle out;
  out.k_bar_x = k_bar_x(ks);
  out.m_omega = m_omega(ks);
  const Int& divisor = ks.e(n);  // = alpha_{n+1}
  for (int k = 0; k <= n; ++k) {
    internal_check(ks.omega(k) % divisor == 0, "bar weights not integral");
    out.bar_omega.push_back(ks.omega(k) / divisor);
  }
  for (int k = 2; k <= n; ++k) {
    Int term = ks.alpha(1) * out.bar_omega[1];
    for (int j = 2; j < k; ++j) {
      term += (ks.alpha(j) - 1) * out.bar_omega[static_cast<std::size_t>(j)];
    }
    term -= out.bar_omega[static_cast<std::size_t>(k)];
    internal_check(term > 0, "bar_omega_star term not positive");
    out.bar_omega_star_terms.push_back(term);
  }
  if (n >= 2) {
    Int g = 0;
    for (const Int& t : out.bar_omega_star_terms) g = gcd_int(g, t);
    out.bar_omega_star = g;
  }
  if (n >= 1) {
    Int g = 0;
    for (int k = 1; k <= n; ++k) {
      g = gcd_int(g, out.bar_omega[static_cast<std::size_t>(k)]);
    }
    out.bar_omega_prime = g;
  }
  return out;
}

namespace {

std::vector<Polynomial> build_equations(const KeySequence& ks,
                                        const std::vector<Rat>* thetas) {
  const int n = ks.n();
  if (thetas) {
    if (static_cast<int>(thetas->size()) != n) {
      throw Error(ErrorCode::BadArgument, "ThetaArity",
                  "expected " + std::to_string(n) + " theta values");
    }
    for (const Rat& t : *thetas) {
      if (t == 0) {
        throw Error(ErrorCode::BadArgument, "ThetaZero",
                    "theta values must be non-zero");
      }
    }
  }

  std::vector<std::string> names;
  names.push_back("w");
  for (int k = 0; k <= n + 1; ++k) {
    names.push_back("y" + std::to_string(k));
  }
  if (!thetas) {
    for (int k = 1; k <= n; ++k) {
      names.push_back("theta" + std::to_string(k));
    }
  }
  VarSetPtr vars = VarSet::make(names);
  auto y_index = [](int k) { return static_cast<std::size_t>(k + 1); };

  BetaExpansion expansion = beta_expansion(ks);
  std::vector<Polynomial> out;
  for (int k = 1; k <= n; ++k) {
    Int w_exp = ks.alpha(k) * ks.omega(k) - ks.omega(k + 1);
    internal_check(w_exp > 0, "boundary equation exponent not positive");

    Exponents lead(vars->size(), 0);
    lead[0] = static_cast<std::uint32_t>(w_exp);
    lead[y_index(k + 1)] = 1;
    Polynomial g = Polynomial::monomial(vars, lead, Rat(1));

    Exponents mid(vars->size(), 0);
    mid[y_index(k)] = static_cast<std::uint32_t>(ks.alpha(k));
    g -= Polynomial::monomial(vars, mid, Rat(1));

    const BetaRow& row = expansion.rows[static_cast<std::size_t>(k - 1)];
    internal_check(row.digits[0] >= 0,
                   "boundary equations need non-negative leading digits");
    Exponents tail(vars->size(), 0);
    for (int j = 0; j < k; ++j) {
      tail[y_index(j)] =
          static_cast<std::uint32_t>(row.digits[static_cast<std::size_t>(j)]);
    }
    Rat coeff(1);
    Polynomial tail_mono = Polynomial::monomial(vars, tail, coeff);
    if (thetas) {
      g += (*thetas)[static_cast<std::size_t>(k - 1)] * tail_mono;
    } else {
      Polynomial theta_var =
          Polynomial::variable(vars, "theta" + std::to_string(k));
      g += theta_var * tail_mono;
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> defining_equations(const KeySequence& ks) {
  return build_equations(ks, nullptr);
}

std::vector<Polynomial> defining_equations(const KeySequence& ks,
                                           const std::vector<Rat>& thetas) {
  return build_equations(ks, &thetas);
}

std::vector<Int> mu_exponents(const KeySequence& ks) {
  const int n = ks.n();
  EssentialData ed = essential_data(ks);
  BetaExpansion expansion = beta_expansion(ks);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 1; i <= n; ++i) {
    // Find k with i_k <= i < i_{k+1}.
    int k = 0;
    for (int j = 1; j <= ed.l; ++j) {
      if (ed.indices[static_cast<std::size_t>(j)] <= i) k = j;
    }
    Int mu = 1;
    Int prefix = 1;  // prod_{t=1}^{j-1} alpha_{i_t}
    Int sum = 0;
    for (int j = 1; j <= k; ++j) {
      int idx = ed.indices[static_cast<std::size_t>(j)];
      Int beta = 0;
      if (idx < i) {
        beta = expansion.rows[static_cast<std::size_t>(i - 1)]
                   .digits[static_cast<std::size_t>(idx)];
      }
      sum += prefix * beta;
      prefix *= ks.alpha(idx);
    }
    mu = prefix - sum;
    out.push_back(mu);
  }
  return out;
}

std::vector<std::vector<Int>> integer_kernel_basis(
    const std::vector<std::vector<Int>>& rows, std::size_t width) {
  for (const auto& row : rows) {
    if (row.size() != width) {
      throw Error(ErrorCode::BadArgument, "RowWidthMismatch",
                  "kernel computation needs rows of equal width");
    }
  }
  const std::size_t n = width;
  // M = working copy; U = running unimodular column transform.
  std::vector<std::vector<Int>> m = rows;
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto add_col = [&](std::size_t dst, std::size_t src, const Int& factor) {
    for (auto& row : m) row[dst] += factor * row[src];
    for (auto& row : u) row[dst] += factor * row[src];
  };
  auto swap_col = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
  };

  std::size_t active_start = 0;  // columns before this are pivot columns
  for (std::size_t r = 0; r < m.size() && active_start < n; ++r) {
    // Reduce row r over the active columns until at most one non-zero stays.
    while (true) {
      std::size_t best = n;
      for (std::size_t j = active_start; j < n; ++j) {
        if (m[r][j] == 0) continue;
        if (best == n || abs_int(m[r][j]) < abs_int(m[r][best])) best = j;
      }
      if (best == n) break;  // row is zero on active columns
      bool others = false;
      for (std::size_t j = active_start; j < n; ++j) {
        if (j == best || m[r][j] == 0) continue;
        Int q = m[r][j] / m[r][best];  // truncated quotient shrinks remainder
        if (q != 0) add_col(j, best, -q);
        if (m[r][j] != 0) others = true;
      }
      if (!others) {
        swap_col(active_start, best);
        ++active_start;
        break;
      }
    }
  }

  std::vector<std::vector<Int>> basis;
  for (std::size_t j = active_start; j < n; ++j) {
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j];
    bool in_kernel = true;
    for (const auto& row : m) {
      if (row[j] != 0) in_kernel = false;
    }
    internal_check(in_kernel, "column reduction left a non-kernel column");
    basis.push_back(std::move(v));
  }
  return basis;
}

bool theta_equivalent(const KeySequence& ks, const std::vector<Rat>& theta1,
                      const std::vector<Rat>& theta2) {
  const int n = ks.n();
  auto check_tuple = [&](const std::vector<Rat>& t, const char* which) {
    if (static_cast<int>(t.size()) != n) {
      throw Error(ErrorCode::BadArgument, "ThetaArity",
                  std::string(which) + " must have exactly " +
                      std::to_string(n) + " entries");
    }
    for (const Rat& v : t) {
      if (v == 0) {
        throw Error(ErrorCode::BadArgument, "ThetaZero",
                    std::string(which) + " entries must be non-zero");
      }
    }
  };
  check_tuple(theta1, "theta1");
  check_tuple(theta2, "theta2");
  if (n == 0) return true;

  BetaExpansion expansion = beta_expansion(ks);
  std::vector<Int> mus = mu_exponents(ks);
  std::vector<std::vector<Int>> rows(2, std::vector<Int>(n));
  for (int i = 1; i <= n; ++i) {
    rows[0][static_cast<std::size_t>(i - 1)] =
        -expansion.rows[static_cast<std::size_t>(i - 1)].digits[0];
    rows[1][static_cast<std::size_t>(i - 1)] =
        mus[static_cast<std::size_t>(i - 1)];
  }
  std::vector<std::vector<Int>> kernel =
      integer_kernel_basis(rows, static_cast<std::size_t>(n));

  auto pow_rat = [](const Rat& base, const Int& exp) {
    Rat b = base;
    Int e = exp;
    if (e < 0) {
      b = make_rat(den(b), num(b));
      e = -e;
    }
    Rat result(1);
    while (e > 0) {
      if ((e & 1) != 0) result *= b;
      e >>= 1;
      if (e > 0) b *= b;
    }
    return result;
  };

  for (const auto& v : kernel) {
    Rat prod(1);
    for (int i = 0; i < n; ++i) {
      Rat ratio = theta2[static_cast<std::size_t>(i)] /
                  theta1[static_cast<std::size_t>(i)];
      prod *= pow_rat(ratio, v[static_cast<std::size_t>(i)]);
    }
    if (prod != 1) return false;
  }
  return true;
}

AutDescription aut_description(const KeySequence& ks) {
  require_primitive(ks, "aut_description");
  if (!is_normal_form(ks)) {
    throw Error(ErrorCode::Precondition, "NormalFormRequired",
                "aut_description requires a normal-form sequence");
  }
  AutDescription out;
  const int n = ks.n();
  if (n == 0) {
    if (ks.omega(0) == 1 && ks.omega(1) == 1) {
      out.kind = AutDescription::Kind::ProjectivePlane;
    } else if (ks.omega(1) == 1) {
      out.kind = AutDescription::Kind::WeightedPlaneQOne;
    } else {
      // omega_0 = omega_1 > 1 is impossible for a valid sequence (it would
      // force gcd > 1), so the remaining case is omega_0 > omega_1 > 1.
      internal_check(ks.omega(0) > ks.omega(1), "unreachable weighted case");
      out.kind = AutDescription::Kind::WeightedPlaneQBig;
    }
    return out;
  }
  InvariantBundle bundle = invariant_bundle(ks);
  out.kind = AutDescription::Kind::General;
  out.x_scale_exponent = bundle.bar_omega[0];
  out.y_scale_exponent = bundle.bar_omega[1];
  out.f_degree_bound = bundle.m_omega;
  if (n >= 2) {
    out.scale_root_order = bundle.bar_omega_star;
  }
  out.y_translation_allowed = ks.omega(0) + bundle.k_bar_x < 0;
  return out;
}

const char* aut_kind_name(AutDescription::Kind kind) {
  switch (kind) {
    case AutDescription::Kind::ProjectivePlane:
      return "projective_plane";
    case AutDescription::Kind::WeightedPlaneQOne:
      return "weighted_plane_q_equals_1";
    case AutDescription::Kind::WeightedPlaneQBig:
      return "weighted_plane_q_greater_1";
    case AutDescription::Kind::General:
      return "general";
  }
  return "unknown";
}

}  // namespace primcomp
