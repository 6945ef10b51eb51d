#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace primcomp {

// Coarse error families; these map one-to-one onto the C API status codes.
enum class ErrorCode {
  Parse,            // malformed textual input
  InvalidSequence,  // input fails key-sequence validation
  Precondition,     // a documented precondition of the requested operation fails
  BadArgument,      // argument outside the documented domain (e.g. bad locator)
  Limit,            // configurable resource bound exceeded
  Internal,         // invariant the library itself guarantees was violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string kind, std::string message,
        std::optional<long> index = std::nullopt)
      : std::runtime_error(std::move(message)),
        code_(code),
        kind_(std::move(kind)),
        index_(index) {}

  ErrorCode code() const { return code_; }
  // Machine-readable discriminator, e.g. "GcdNotOne", "SmallerPropertyViolated".
  const std::string& kind() const { return kind_; }
  // For indexed failures: the 0-based position the failure is attached to.
  std::optional<long> index() const { return index_; }

 private:
  ErrorCode code_;
  std::string kind_;
  std::optional<long> index_;
};

[[noreturn]] inline void throw_internal(const std::string& message) {
  throw Error(ErrorCode::Internal, "InternalInvariant", message);
}

// Used for checks that, if they fire, mean the library (not the caller) is wrong.
inline void internal_check(bool ok, const std::string& message) {
  if (!ok) throw_internal(message);
}

}  // namespace primcomp
