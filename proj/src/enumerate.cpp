#include "enumerate.hpp"

#include <cstdint>
#include <numeric>

#include "errors.hpp"

namespace primcomp {

namespace {

// Every generated entry is positive and capped by max_entry, so when the cap
// fits comfortably into a machine word the pruning arithmetic can avoid
// big-integer traffic entirely (same bound analysis as the expansion fast
// path: remainders stay below 2^45 for caps up to 2^20).
constexpr long kFastEntryBound = 1L << 20;

// Leading expansion coefficient of row k, scaled by the first entry: the row
// is admissible iff this remainder is non-negative. Depends only on the
// prefix entries[0..k] and their gcd tower, so it prunes during generation.
Int row_leading_remainder(const std::vector<Int>& entries,
                          const std::vector<Int>& gcds, int k) {
  const Int alpha_k = gcds[static_cast<std::size_t>(k - 1)] /
                      gcds[static_cast<std::size_t>(k)];
  Int r = alpha_k * entries[static_cast<std::size_t>(k)];
  for (int j = k - 1; j >= 1; --j) {
    const Int& ej = gcds[static_cast<std::size_t>(j)];
    const Int alpha_j = gcds[static_cast<std::size_t>(j - 1)] / ej;
    if (alpha_j == 1) continue;
    Int rq = r / ej;
    Int wq = entries[static_cast<std::size_t>(j)] / ej;
    Int digit =
        mod_floor(rq * mod_inverse(mod_floor(wq, alpha_j), alpha_j), alpha_j);
    r -= digit * entries[static_cast<std::size_t>(j)];
  }
  return r;
}

std::int64_t row_leading_remainder64(const std::vector<std::int64_t>& entries,
                                     const std::vector<std::int64_t>& gcds,
                                     int k) {
  const std::size_t uk = static_cast<std::size_t>(k);
  const std::int64_t alpha_k = gcds[uk - 1] / gcds[uk];
  std::int64_t r = alpha_k * entries[uk];
  for (int j = k - 1; j >= 1; --j) {
    const std::size_t uj = static_cast<std::size_t>(j);
    const std::int64_t ej = gcds[uj];
    const std::int64_t alpha_j = gcds[uj - 1] / ej;
    if (alpha_j == 1) continue;
    const std::int64_t rq = mod_floor64(r / ej, alpha_j);
    const std::int64_t wq = entries[uj] / ej;
    const std::int64_t digit =
        mod_floor64(rq * mod_inverse64(wq, alpha_j), alpha_j);
    r -= digit * entries[uj];
  }
  return r;
}

struct Generator {
  const EnumerationOptions& options;
  const std::function<bool(const KeySequence&)>& visit;
  Int entry_cap;
  Int omega0_cap;
  Int omega0_low;
  bool fast = false;
  int target_len = 0;
  std::vector<Int> entries;
  std::vector<Int> gcds;
  std::vector<std::int64_t> entries64;
  std::vector<std::int64_t> gcds64;
  EnumerationSummary summary;

  bool emit_if_accepted() {
    KeySequence ks = KeySequence::validate(entries);
    if (options.require_algebraic && !is_algebraic(ks)) return true;
    if (options.require_normal_form && !is_normal_form(ks)) return true;
    ++summary.emitted;
    if (!visit(ks)) {
      summary.stopped_early = true;
      return false;
    }
    return true;
  }

  // Extends the current prefix by one entry; returns false to abort the
  // whole enumeration (early stop requested by the callback).
  bool extend() {
    const int depth = static_cast<int>(entries.size());
    if (depth == target_len) return emit_if_accepted();

    Int low = (depth == 0) ? omega0_low : Int(1);
    Int high = (depth == 0) ? omega0_cap : entry_cap;
    if (depth >= 2) {
      // Growth condition: the next entry must stay below alpha * previous.
      const Int alpha = gcds[static_cast<std::size_t>(depth - 2)] /
                        gcds[static_cast<std::size_t>(depth - 1)];
      Int bound = alpha * entries[static_cast<std::size_t>(depth - 1)] - 1;
      if (bound < high) high = bound;
    }
    if (depth == 1 && options.require_normal_form) {
      // Normal two-entry sequences are non-increasing; longer normal
      // sequences strictly decrease at the first step.
      Int bound = (target_len == 2) ? entries[0] : entries[0] - 1;
      if (bound < high) high = bound;
    }

    for (Int v = low; v <= high; ++v) {
      if (depth == 1 && target_len >= 3 && options.require_normal_form &&
          entries[0] % v == 0) {
        continue;  // a first step dividing the leading entry is never normal
      }
      const std::int64_t v64 = fast ? v.convert_to<std::int64_t>() : 0;
      Int g;
      if (depth == 0) {
        g = v;
      } else if (fast) {
        g = std::gcd(gcds64.back(), v64);
      } else {
        g = gcd_int(gcds.back(), v);
      }
      if (depth == target_len - 1 && g != 1) continue;
      entries.push_back(v);
      gcds.push_back(g);
      if (fast) {
        entries64.push_back(v64);
        gcds64.push_back(g.convert_to<std::int64_t>());
      }
      bool keep_going = true;
      bool pruned = false;
      if (options.require_algebraic && depth >= 1 && depth <= target_len - 2) {
        // Prefix prune: a negative leading digit cannot recover later.
        pruned = fast ? row_leading_remainder64(entries64, gcds64, depth) < 0
                      : row_leading_remainder(entries, gcds, depth) < 0;
      }
      if (!pruned) keep_going = extend();
      entries.pop_back();
      gcds.pop_back();
      if (fast) {
        entries64.pop_back();
        gcds64.pop_back();
      }
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

EnumerationSummary enumerate_sequences(
    const EnumerationOptions& options,
    const std::function<bool(const KeySequence&)>& visit) {
  if (options.max_entry < 1) {
    throw Error(ErrorCode::BadArgument, "BadBound",
                "max_entry must be at least 1");
  }
  if (options.max_len < 2) {
    throw Error(ErrorCode::BadArgument, "BadBound",
                "max_len must be at least 2");
  }
  Generator gen{options,
                visit,
                Int(options.max_entry),
                Int(options.max_omega0 > 0 ? options.max_omega0
                                           : options.max_entry),
                Int(options.min_omega0 > 1 ? options.min_omega0 : 1),
                false,
                0,
                {},
                {},
                {},
                {},
                {}};
  if (gen.omega0_cap > gen.entry_cap) gen.omega0_cap = gen.entry_cap;
  gen.fast = options.max_entry <= kFastEntryBound;
  for (int len = 2; len <= options.max_len; ++len) {
    gen.target_len = len;
    if (!gen.extend()) break;
  }
  return gen.summary;
}

std::vector<KeySequence> collect_sequences(const EnumerationOptions& options) {
  std::vector<KeySequence> out;
  enumerate_sequences(options, [&](const KeySequence& ks) {
    out.push_back(ks);
    return true;
  });
  return out;
}

unsigned recommended_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace primcomp
