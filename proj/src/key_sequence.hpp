#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace primcomp {

// A validated key sequence (omega_0, ..., omega_{n+1}) together with its
// gcd tower e_k = gcd(|omega_0|, ..., |omega_k|) and the ratios
// alpha_k = e_{k-1} / e_k. Construction enforces, in this order:
//   TooShort                   — fewer than two entries,
//   NonPositiveOmega0          — omega_0 < 1,
//   GcdNotOne                  — e_{n+1} != 1,
//   SmallerPropertyViolated(k) — omega_{k+1} >= alpha_k * omega_k for the
//                                smallest k in [1, n].
class KeySequence {
 public:
  static KeySequence validate(std::vector<Int> entries);

  KeySequence(const KeySequence& rhs)
      : entries_(rhs.entries_),
        e_(rhs.e_),
        alpha_(rhs.alpha_),
        primitive_(rhs.primitive_),
        algebraic_memo_(rhs.algebraic_memo_.load(std::memory_order_relaxed)),
        normal_memo_(rhs.normal_memo_.load(std::memory_order_relaxed)) {}
  KeySequence(KeySequence&& rhs) noexcept
      : entries_(std::move(rhs.entries_)),
        e_(std::move(rhs.e_)),
        alpha_(std::move(rhs.alpha_)),
        primitive_(rhs.primitive_),
        algebraic_memo_(rhs.algebraic_memo_.load(std::memory_order_relaxed)),
        normal_memo_(rhs.normal_memo_.load(std::memory_order_relaxed)) {}
  KeySequence& operator=(const KeySequence& rhs) {
    entries_ = rhs.entries_;
    e_ = rhs.e_;
    alpha_ = rhs.alpha_;
    primitive_ = rhs.primitive_;
    copy_memos(rhs);
    return *this;
  }
  KeySequence& operator=(KeySequence&& rhs) noexcept {
    entries_ = std::move(rhs.entries_);
    e_ = std::move(rhs.e_);
    alpha_ = std::move(rhs.alpha_);
    primitive_ = rhs.primitive_;
    copy_memos(rhs);
    return *this;
  }

  const std::vector<Int>& entries() const { return entries_; }
  // Number of interior entries; the sequence has n + 2 entries in total.
  int n() const { return static_cast<int>(entries_.size()) - 2; }
  const Int& omega(int k) const { return entries_.at(k); }
  // e_k for 0 <= k <= n + 1.
  const Int& e(int k) const { return e_.at(k); }
  // alpha_k for 1 <= k <= n + 1 (alpha_{n+1} = e_n because e_{n+1} = 1).
  const Int& alpha(int k) const { return alpha_.at(k - 1); }

  // Equivalent to omega_{n+1} > 0, and (for valid sequences) to every entry
  // being positive.
  bool is_primitive() const { return primitive_; }

  bool operator==(const KeySequence& rhs) const {
    return entries_ == rhs.entries_;
  }

  // "(3,2,5)"
  std::string to_string() const;

 private:
  KeySequence() = default;

  void copy_memos(const KeySequence& rhs) {
    algebraic_memo_.store(rhs.algebraic_memo_.load(std::memory_order_relaxed),
                          std::memory_order_relaxed);
    normal_memo_.store(rhs.normal_memo_.load(std::memory_order_relaxed),
                       std::memory_order_relaxed);
  }

  friend bool is_algebraic(const KeySequence& ks);
  friend bool is_normal_form(const KeySequence& ks);

  std::vector<Int> entries_;
  std::vector<Int> e_;
  std::vector<Int> alpha_;
  bool primitive_ = false;
  // Verdicts of the two expensive predicates, filled on first query
  // (-1 = not yet computed). Both are deterministic functions of the
  // entries, so a concurrent duplicate computation stores the same value.
  mutable std::atomic<signed char> algebraic_memo_{-1};
  mutable std::atomic<signed char> normal_memo_{-1};
};

// Accepts "3,2,5", "(3,2,5)", or whitespace-separated entries.
KeySequence parse_key_sequence(const std::string& text);

// Row k of the expansion alpha_k * omega_k = sum_j digits[j] * omega_j with
// digits[j] in [0, alpha_j) for 1 <= j <= k - 1 and digits[0] an arbitrary
// integer. The digits are uniquely determined by those constraints.
struct BetaRow {
  int k = 0;
  Int target;                // alpha_k * omega_k
  std::vector<Int> digits;   // size k: digits[0] = beta_{k,0}, ...
};

struct BetaExpansion {
  std::vector<BetaRow> rows;  // rows[k-1] describes row k, for k = 1..n
};

BetaExpansion beta_expansion(const KeySequence& ks);

// True when every beta_{k,0} is non-negative.
bool is_algebraic(const KeySequence& ks);
// Smallest k whose row has digits[0] < 0, when any.
std::optional<int> first_nonalgebraic_row(const KeySequence& ks);

// Membership of `target` in the numerical semigroup generated by `gens`
// (all generators must be >= 1; coefficients range over the non-negative
// integers). Exhaustive search with memoization.
bool semigroup_member(const Int& target, const std::vector<Int>& gens);

// Essential index data: interior indices k in [1, n] with alpha_k >= 2,
// bracketed by i_0 = 0 and i_{l+1} = n + 1, together with the rational
// thresholds chi_1 > ... > chi_{l+1} (strictly decreasing for primitive
// sequences).
struct EssentialData {
  std::vector<int> indices;  // i_0, i_1, ..., i_{l+1}
  int l = 0;
  std::vector<Rat> chi;      // chi[j-1] = chi_j for j = 1..l+1
};

EssentialData essential_data(const KeySequence& ks);

// The subsequence (omega_{i_0}, omega_{i_1}, ..., omega_{i_{l+1}}); always a
// valid key sequence when the input is valid.
KeySequence essential_subsequence(const KeySequence& ks);

// Per-candidate data for the final normal-form condition: for an exponent
// candidate beta, k_hat is 0 when beta >= chi_1 and otherwise the largest
// k in [1, l+1] with beta < chi_k; omega_hat = omega_0 * beta +
// sum_{j<=k_hat} (alpha_{i_j} - 1) * omega_{i_j}; candidate_indices lists the
// non-essential interior indices strictly between i_{k_hat} and i_{k_hat+1}
// (empty when k_hat = l + 1).
struct HatEntry {
  Rat beta;
  int k_hat = 0;
  Rat omega_hat;
  std::vector<int> candidate_indices;
};

struct NormalFormFailure {
  std::string condition;          // "N0", "N1b", "N1c", "N1d"
  std::optional<Rat> beta;        // N1d witness
  std::optional<int> index;       // N1d witness
};

struct NormalFormReport {
  bool is_normal = false;
  std::string satisfied_case;     // "N0" or "N1" when is_normal
  std::vector<NormalFormFailure> failures;
  bool exponent_set_defined = false;  // false iff n >= 1 and omega_1 == 0
  std::vector<Rat> exponent_candidates;  // sorted descending
  std::vector<HatEntry> hat_entries;     // aligned with exponent_candidates
};

// Normal form: either n = 0 and omega_0 >= omega_1 (case "N0"), or n >= 1 and
//   N1b: omega_0 > omega_1,
//   N1c: omega_1 / omega_0 is neither 0 nor 1/k for a positive integer k,
//   N1d: no exponent candidate beta admits an index i in candidate_indices
//        with omega_i = omega_hat(beta).
// All failed conditions are reported, each N1d failure with its witness.
NormalFormReport normal_form_report(const KeySequence& ks);

bool is_normal_form(const KeySequence& ks);

}  // namespace primcomp
