#include "key_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

namespace primcomp {

KeySequence KeySequence::validate(std::vector<Int> entries) {
  if (entries.size() < 2) {
    throw Error(ErrorCode::InvalidSequence, "TooShort",
                "a key sequence needs at least two entries");
  }
  if (entries[0] < 1) {
    throw Error(ErrorCode::InvalidSequence, "NonPositiveOmega0",
                "the leading entry must be positive");
  }
  const int n = static_cast<int>(entries.size()) - 2;

  std::vector<Int> e(entries.size());
  e[0] = entries[0];
  for (std::size_t k = 1; k < entries.size(); ++k) {
    e[k] = gcd_int(e[k - 1], abs_int(entries[k]));
  }
  if (e.back() != 1) {
    throw Error(ErrorCode::InvalidSequence, "GcdNotOne",
                "the entries must have greatest common divisor 1");
  }
  std::vector<Int> alpha(entries.size() - 1);
  for (std::size_t k = 1; k < entries.size(); ++k) {
    internal_check(e[k] != 0 && e[k - 1] % e[k] == 0, "gcd tower broken");
    alpha[k - 1] = e[k - 1] / e[k];
  }
  for (int k = 1; k <= n; ++k) {
    if (!(entries[k + 1] < alpha[k - 1] * entries[k])) {
      throw Error(ErrorCode::InvalidSequence, "SmallerPropertyViolated",
                  "entry " + std::to_string(k + 1) +
                      " is not smaller than alpha_" + std::to_string(k) +
                      " * omega_" + std::to_string(k),
                  k);
    }
  }

  KeySequence ks;
  ks.entries_ = std::move(entries);
  ks.e_ = std::move(e);
  ks.alpha_ = std::move(alpha);
  ks.primitive_ = ks.entries_.back() > 0;
  if (ks.primitive_) {
    for (const Int& w : ks.entries_) {
      internal_check(w > 0, "primitive sequence with a non-positive entry");
    }
  }
  return ks;
}

std::string KeySequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ",";
    out += entries_[i].str();
  }
  return out + ")";
}

KeySequence parse_key_sequence(const std::string& text) {
  std::string body = text;
  auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!body.empty() && is_space(body.front())) body.erase(body.begin());
  while (!body.empty() && is_space(body.back())) body.pop_back();
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Int> entries;
  std::string token;
  auto flush = [&]() {
    if (!token.empty()) {
      entries.push_back(parse_int(token));
      token.clear();
    }
  };
  for (char c : body) {
    if (c == ',' || is_space(c)) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (entries.empty()) {
    throw Error(ErrorCode::Parse, "EmptySequence",
                "no entries found in '" + text + "'");
  }
  return KeySequence::validate(std::move(entries));
}

namespace {

// Entry bound under which every intermediate of the expansion fits into
// int64: row targets stay below 2^40 and each modular product is reduced
// before multiplying.
constexpr std::int64_t kFastEntryBound = std::int64_t(1) << 20;

bool all_entries_small(const KeySequence& ks, std::vector<std::int64_t>& w) {
  const std::vector<Int>& entries = ks.entries();
  w.resize(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::int64_t v = 0;
    if (!fits_int64(entries[i], &v) || v > kFastEntryBound ||
        v < -kFastEntryBound) {
      return false;
    }
    w[i] = v;
  }
  return true;
}

// Same algorithm as the general path below, in machine words.
BetaExpansion beta_expansion_fast(const KeySequence& ks,
                                  const std::vector<std::int64_t>& w) {
  const int n = ks.n();
  std::vector<std::int64_t> e(w.size());
  e[0] = w[0];
  for (std::size_t k = 1; k < w.size(); ++k) {
    e[k] = std::gcd(e[k - 1], w[k] < 0 ? -w[k] : w[k]);
  }
  BetaExpansion out;
  out.rows.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 1; k <= n; ++k) {
    BetaRow row;
    row.k = k;
    const std::int64_t target = (e[k - 1] / e[k]) * w[k];
    row.target = target;
    row.digits.assign(static_cast<std::size_t>(k), Int(0));
    std::int64_t r = target;
    std::int64_t check = 0;
    for (int j = k - 1; j >= 1; --j) {
      internal_check(r % e[j] == 0, "expansion remainder not divisible");
      const std::int64_t aj = e[j - 1] / e[j];
      if (aj == 1) continue;
      const std::int64_t s = mod_floor64(r / e[j], aj);
      const std::int64_t u = w[j] / e[j];
      const std::int64_t digit = mod_floor64(s * mod_inverse64(u, aj), aj);
      row.digits[static_cast<std::size_t>(j)] = digit;
      r -= digit * w[j];
      check += digit * w[j];
    }
    internal_check(r % w[0] == 0, "expansion tail not divisible");
    const std::int64_t lead = r / w[0];
    row.digits[0] = lead;
    check += lead * w[0];
    internal_check(check == target, "expansion does not reconstruct");
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

BetaExpansion beta_expansion(const KeySequence& ks) {
  {
    std::vector<std::int64_t> w;
    if (all_entries_small(ks, w)) return beta_expansion_fast(ks, w);
  }
  const int n = ks.n();
  BetaExpansion out;
  out.rows.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 1; k <= n; ++k) {
    BetaRow row;
    row.k = k;
    row.target = ks.alpha(k) * ks.omega(k);
    row.digits.assign(static_cast<std::size_t>(k), Int(0));
    Int r = row.target;
    // Invariant: before processing index j, e_j divides r; the digit is the
    // unique value in [0, alpha_j) keeping r - digit * omega_j divisible by
    // e_{j-1}.
    for (int j = k - 1; j >= 1; --j) {
      internal_check(r % ks.e(j) == 0, "expansion remainder not divisible");
      const Int aj = ks.alpha(j);
      if (aj == 1) continue;  // the only digit in [0, 1) is 0
      Int s = r / ks.e(j);
      Int u = ks.omega(j) / ks.e(j);
      Int digit = mod_floor(s * mod_inverse(u, aj), aj);
      row.digits[static_cast<std::size_t>(j)] = digit;
      r -= digit * ks.omega(j);
    }
    internal_check(r % ks.omega(0) == 0, "expansion tail not divisible");
    row.digits[0] = r / ks.omega(0);

    Int check = 0;
    for (int j = 0; j < k; ++j) {
      check += row.digits[static_cast<std::size_t>(j)] * ks.omega(j);
    }
    internal_check(check == row.target, "expansion does not reconstruct");
    out.rows.push_back(std::move(row));
  }
  return out;
}

bool is_algebraic(const KeySequence& ks) {
  signed char memo = ks.algebraic_memo_.load(std::memory_order_relaxed);
  if (memo < 0) {
    memo = first_nonalgebraic_row(ks).has_value() ? 0 : 1;
    ks.algebraic_memo_.store(memo, std::memory_order_relaxed);
  }
  return memo == 1;
}

std::optional<int> first_nonalgebraic_row(const KeySequence& ks) {
  BetaExpansion expansion = beta_expansion(ks);
  for (const BetaRow& row : expansion.rows) {
    if (row.digits[0] < 0) return row.k;
  }
  return std::nullopt;
}

namespace {

bool semigroup_member_rec(const Int& target, const std::vector<Int>& gens,
                          std::map<Int, bool>& memo) {
  if (target == 0) return true;
  if (target < 0) return false;
  auto it = memo.find(target);
  if (it != memo.end()) return it->second;
  bool found = false;
  for (const Int& g : gens) {
    if (g <= target && semigroup_member_rec(target - g, gens, memo)) {
      found = true;
      break;
    }
  }
  memo.emplace(target, found);
  return found;
}

}  // namespace

bool semigroup_member(const Int& target, const std::vector<Int>& gens) {
  for (const Int& g : gens) {
    if (g < 1) {
      throw Error(ErrorCode::Precondition, "NonPositiveGenerator",
                  "semigroup membership needs positive generators");
    }
  }
  if (target < 0) return false;
  std::map<Int, bool> memo;
  return semigroup_member_rec(target, gens, memo);
}

EssentialData essential_data(const KeySequence& ks) {
  const int n = ks.n();
  EssentialData out;
  out.indices.push_back(0);
  for (int k = 1; k <= n; ++k) {
    if (ks.alpha(k) >= 2) out.indices.push_back(k);
  }
  out.l = static_cast<int>(out.indices.size()) - 1;
  out.indices.push_back(n + 1);

  Rat running(0);  // sum_{k<j} (alpha_{i_k} - 1) * omega_{i_k}
  for (int j = 1; j <= out.l + 1; ++j) {
    int idx = out.indices[static_cast<std::size_t>(j)];
    Rat chi = (Rat(ks.omega(idx)) - running) / Rat(ks.omega(0));
    out.chi.push_back(chi);
    if (j <= out.l) {
      running += Rat((ks.alpha(idx) - 1) * ks.omega(idx));
    }
  }
  if (ks.is_primitive()) {
    for (std::size_t j = 1; j < out.chi.size(); ++j) {
      internal_check(out.chi[j] < out.chi[j - 1],
                     "essential thresholds not strictly decreasing");
    }
  }
  return out;
}

KeySequence essential_subsequence(const KeySequence& ks) {
  EssentialData ed = essential_data(ks);
  std::vector<Int> entries;
  entries.reserve(ed.indices.size());
  for (int idx : ed.indices) {
    entries.push_back(ks.omega(idx));
  }
  return KeySequence::validate(std::move(entries));
}

namespace {

HatEntry make_hat_entry(const KeySequence& ks, const EssentialData& ed,
                        const Rat& beta) {
  HatEntry entry;
  entry.beta = beta;
  entry.k_hat = 0;
  for (int k = 1; k <= ed.l + 1; ++k) {
    if (beta < ed.chi[static_cast<std::size_t>(k - 1)]) entry.k_hat = k;
  }
  Rat omega_hat = beta * Rat(ks.omega(0));
  for (int j = 1; j <= entry.k_hat; ++j) {
    int idx = ed.indices[static_cast<std::size_t>(j)];
    omega_hat += Rat((ks.alpha(idx) - 1) * ks.omega(idx));
  }
  entry.omega_hat = omega_hat;
  if (entry.k_hat <= ed.l) {
    int lo = ed.indices[static_cast<std::size_t>(entry.k_hat)];
    int hi = ed.indices[static_cast<std::size_t>(entry.k_hat + 1)];
    for (int i = lo + 1; i < hi; ++i) {
      entry.candidate_indices.push_back(i);
    }
  }
  return entry;
}

}  // namespace

NormalFormReport normal_form_report(const KeySequence& ks) {
  NormalFormReport report;
  const int n = ks.n();

  if (n == 0) {
    if (ks.omega(0) >= ks.omega(1)) {
      report.is_normal = true;
      report.satisfied_case = "N0";
    } else {
      report.failures.push_back({"N0", std::nullopt, std::nullopt});
    }
    return report;
  }

  const Int& w0 = ks.omega(0);
  const Int& w1 = ks.omega(1);

  if (!(w0 > w1)) {
    report.failures.push_back({"N1b", std::nullopt, std::nullopt});
  }
  bool reciprocal_or_zero = (w1 == 0) || (w1 > 0 && w0 % w1 == 0);
  if (reciprocal_or_zero) {
    report.failures.push_back({"N1c", std::nullopt, std::nullopt});
  }

  EssentialData ed = essential_data(ks);
  const Rat chi_last = ed.chi.back();

  if (w1 != 0) {
    report.exponent_set_defined = true;
    std::vector<Rat> betas;
    if (w1 > 0) {
      Rat lower = (chi_last + 1) * Rat(w0) / Rat(w1);
      if (lower < 0) lower = Rat(0);
      Rat upper = Rat(w0) / Rat(w1) + 1;
      // integers k with lower < k < upper
      Int k_min = floor_rat(lower) + 1;
      Int k_max = ceil_rat(upper) - 1;
      for (Int k = k_min; k <= k_max; ++k) {
        betas.push_back(Rat(k) * Rat(w1) / Rat(w0) - 1);
      }
      betas.push_back(Rat(0));
    } else {
      Rat upper = (chi_last + 1) * Rat(w0) / Rat(w1);
      Int k_min = 1;
      Int k_max = ceil_rat(upper) - 1;
      for (Int k = k_min; k <= k_max; ++k) {
        betas.push_back(Rat(k) * Rat(w1) / Rat(w0) - 1);
      }
    }
    std::sort(betas.begin(), betas.end(),
              [](const Rat& a, const Rat& b) { return a > b; });
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
    report.exponent_candidates = betas;

    for (const Rat& beta : betas) {
      HatEntry entry = make_hat_entry(ks, ed, beta);
      for (int i : entry.candidate_indices) {
        if (Rat(ks.omega(i)) == entry.omega_hat) {
          report.failures.push_back({"N1d", beta, i});
        }
      }
      report.hat_entries.push_back(std::move(entry));
    }
  }

  if (report.failures.empty()) {
    report.is_normal = true;
    report.satisfied_case = "N1";
  }
  return report;
}

namespace {

// Boolean-only evaluation of the normal-form conditions. Works entirely in
// integers: with t = beta * omega_0 the exponent candidates become
// t = k * omega_1 - omega_0 (plus t = 0 when omega_1 > 0), the thresholds
// chi_j compare as t < C_j with C_j = omega_{i_j} - S_{j-1}, and
// omega_hat * 1 = t + S_{k_hat} where S_m = sum_{j<=m} (alpha_{i_j} - 1) *
// omega_{i_j}. Produces the same verdict as normal_form_report without the
// rational bookkeeping or the failure details.
bool normal_form_quick(const KeySequence& ks) {
  const int n = ks.n();
  if (n == 0) return ks.omega(0) >= ks.omega(1);

  const Int& w0 = ks.omega(0);
  const Int& w1 = ks.omega(1);
  if (!(w0 > w1)) return false;                          // N1b
  if (w1 == 0 || (w1 > 0 && w0 % w1 == 0)) return false;  // N1c

  std::vector<int> indices{0};
  for (int k = 1; k <= n; ++k) {
    if (ks.alpha(k) >= 2) indices.push_back(k);
  }
  const int l = static_cast<int>(indices.size()) - 1;
  indices.push_back(n + 1);

  // S[m] and C[j] as above (C[0] unused).
  std::vector<Int> s(static_cast<std::size_t>(l) + 1);
  std::vector<Int> c(static_cast<std::size_t>(l) + 2);
  for (int j = 1; j <= l + 1; ++j) {
    const int idx = indices[static_cast<std::size_t>(j)];
    c[static_cast<std::size_t>(j)] =
        ks.omega(idx) - s[static_cast<std::size_t>(j - 1)];
    if (j <= l) {
      s[static_cast<std::size_t>(j)] =
          s[static_cast<std::size_t>(j - 1)] +
          (ks.alpha(idx) - 1) * ks.omega(idx);
    }
  }

  const auto violates_n1d = [&](const Int& t) {
    int k_hat = 0;
    for (int k = 1; k <= l + 1; ++k) {
      if (t < c[static_cast<std::size_t>(k)]) k_hat = k;
    }
    if (k_hat > l) return false;
    const Int omega_hat = t + s[static_cast<std::size_t>(k_hat)];
    const int lo = indices[static_cast<std::size_t>(k_hat)];
    const int hi = indices[static_cast<std::size_t>(k_hat + 1)];
    for (int i = lo + 1; i < hi; ++i) {
      if (ks.omega(i) == omega_hat) return true;
    }
    return false;
  };

  Int k_min, k_max;
  const Int lower_num = c[static_cast<std::size_t>(l + 1)] + w0;
  if (w1 > 0) {
    k_min = (lower_num < 0) ? Int(1) : floor_div(lower_num, w1) + 1;
    k_max = -floor_div(-(w0 + w1), w1) - 1;
    if (violates_n1d(Int(0))) return false;  // the extra beta = 0 candidate
  } else {
    k_min = 1;
    k_max = -floor_div(-lower_num, w1) - 1;
  }
  for (Int k = k_min; k <= k_max; ++k) {
    if (violates_n1d(k * w1 - w0)) return false;
  }
  return true;
}

}  // namespace

bool is_normal_form(const KeySequence& ks) {
  signed char memo = ks.normal_memo_.load(std::memory_order_relaxed);
  if (memo < 0) {
    memo = normal_form_quick(ks) ? 1 : 0;
    ks.normal_memo_.store(memo, std::memory_order_relaxed);
  }
  return memo == 1;
}

}  // namespace primcomp
