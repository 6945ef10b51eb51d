#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "key_sequence.hpp"

namespace primcomp {

/// Bounds and filters for exhaustive generation of valid sequences with
/// positive entries (positive entries make every generated sequence
/// primitive).
struct EnumerationOptions {
  /// Inclusive cap applied to every entry; must be >= 1.
  long max_entry = 0;
  /// Inclusive cap on the first entry; <= 0 means "use max_entry".
  long max_omega0 = 0;
  /// Inclusive lower bound on the first entry; <= 1 means "start at 1".
  /// Splitting a run into disjoint first-entry bands lets callers shard an
  /// enumeration across workers.
  long min_omega0 = 0;
  /// Maximum number of entries; must be >= 2.
  int max_len = 2;
  /// Keep only sequences whose expansions have non-negative leading terms.
  bool require_algebraic = false;
  /// Keep only normal-form sequences.
  bool require_normal_form = false;
};

struct EnumerationSummary {
  std::uint64_t emitted = 0;
  bool stopped_early = false;
};

/// Visits every sequence allowed by `options` in lexicographic order on
/// (length, entries...). The callback returns false to stop early.
EnumerationSummary enumerate_sequences(
    const EnumerationOptions& options,
    const std::function<bool(const KeySequence&)>& visit);

/// Collects the full enumeration into a vector.
std::vector<KeySequence> collect_sequences(const EnumerationOptions& options);

unsigned recommended_thread_count();

/// Applies `fn` to every input on a small thread pool, preserving input
/// order in the result. Exceptions thrown by `fn` are rethrown on the
/// caller's thread (first one wins).
template <typename Out, typename In, typename Fn>
std::vector<Out> parallel_map(const std::vector<In>& inputs, Fn&& fn,
                              unsigned thread_count = 0) {
  std::vector<Out> results(inputs.size());
  if (inputs.empty()) return results;
  unsigned threads = thread_count ? thread_count : recommended_thread_count();
  if (threads > inputs.size()) {
    threads = static_cast<unsigned>(inputs.size());
  }
  if (threads <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = fn(inputs[i]);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      try {
        results[i] = fn(inputs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(inputs.size());
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace primcomp
