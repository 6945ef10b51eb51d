#include "primcomp/primcomp.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "actions.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "key_sequence.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "surface.hpp"

struct primcomp_sequence {
  primcomp::KeySequence ks;
};

namespace {

using namespace primcomp;

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

primcomp_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return PRIMCOMP_ERR_PARSE;
    case ErrorCode::InvalidSequence:
      return PRIMCOMP_ERR_INVALID_SEQUENCE;
    case ErrorCode::Precondition:
      return PRIMCOMP_ERR_PRECONDITION;
    case ErrorCode::BadArgument:
      return PRIMCOMP_ERR_BAD_ARGUMENT;
    case ErrorCode::Limit:
      return PRIMCOMP_ERR_LIMIT;
    case ErrorCode::Internal:
      return PRIMCOMP_ERR_INTERNAL;
  }
  return PRIMCOMP_ERR_INTERNAL;
}

template <typename Fn>
primcomp_status guarded(char** err, Fn&& fn) {
  if (err != nullptr) *err = nullptr;
  try {
    return fn();
  } catch (const Error& e) {
    if (err != nullptr) *err = dup_string(e.kind() + ": " + e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    if (err != nullptr) *err = dup_string(e.what());
    return PRIMCOMP_ERR_INTERNAL;
  } catch (...) {
    if (err != nullptr) *err = dup_string("unknown failure");
    return PRIMCOMP_ERR_INTERNAL;
  }
}

primcomp_status require(bool ok, const char* what, char** err) {
  if (ok) return PRIMCOMP_OK;
  if (err != nullptr) {
    *err = dup_string(std::string("NullArgument: ") + what +
                      " must not be NULL");
  }
  return PRIMCOMP_ERR_BAD_ARGUMENT;
}

primcomp_status emit(const std::string& text, char** out, char** err) {
  char* copy = dup_string(text);
  if (copy == nullptr) {
    if (err != nullptr) *err = nullptr;
    return PRIMCOMP_ERR_INTERNAL;
  }
  *out = copy;
  return PRIMCOMP_OK;
}

std::string dump(const Json& value) { return value.dump(2); }

std::optional<Rat> parse_lambda(const char* lambda) {
  if (lambda == nullptr) return std::nullopt;
  return parse_rat(lambda);
}

std::vector<Rat> parse_rat_csv(const char* text) {
  std::vector<Rat> out;
  std::string buffer(text);
  std::size_t start = 0;
  if (buffer.empty()) return out;
  while (true) {
    std::size_t comma = buffer.find(',', start);
    std::string piece = buffer.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_rat(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* primcomp_version(void) { return "1.0.0"; }

void primcomp_string_free(char* text) { std::free(text); }

primcomp_status primcomp_sequence_parse(const char* text,
                                        primcomp_sequence** out, char** err) {
  if (primcomp_status s = require(text != nullptr, "text", err); s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(out != nullptr, "out", err); s != PRIMCOMP_OK)
    return s;
  *out = nullptr;
  return guarded(err, [&]() {
    *out = new primcomp_sequence{parse_key_sequence(text)};
    return PRIMCOMP_OK;
  });
}

void primcomp_sequence_free(primcomp_sequence* seq) { delete seq; }

primcomp_status primcomp_sequence_format(const primcomp_sequence* seq,
                                         char** out, char** err) {
  if (primcomp_status s = require(seq != nullptr, "seq", err); s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(out != nullptr, "out", err); s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() { return emit(seq->ks.to_string(), out, err); });
}

primcomp_status primcomp_validate_report(const char* text, char** json_out,
                                         char** err) {
  if (primcomp_status s = require(text != nullptr, "text", err);
      s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(json_out != nullptr, "json_out", err);
      s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    // Tokenize only; validation outcomes are part of the report.
    std::vector<Int> entries;
    {
      std::string buffer(text);
      for (char& c : buffer) {
        if (c == '(' || c == ')' || c == ',') c = ' ';
      }
      std::size_t pos = 0;
      while (pos < buffer.size()) {
        while (pos < buffer.size() && std::isspace(static_cast<unsigned char>(
                                          buffer[pos]))) {
          ++pos;
        }
        if (pos >= buffer.size()) break;
        std::size_t end = pos;
        while (end < buffer.size() && !std::isspace(static_cast<unsigned char>(
                                          buffer[end]))) {
          ++end;
        }
        entries.push_back(parse_int(buffer.substr(pos, end - pos)));
        pos = end;
      }
    }
    return emit(dump(validate_report(entries)), json_out, err);
  });
}

primcomp_status primcomp_analyze(const primcomp_sequence* seq, char** json_out,
                                 char** err) {
  if (primcomp_status s = require(seq != nullptr, "seq", err); s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(json_out != nullptr, "json_out", err);
      s != PRIMCOMP_OK)
    return s;
  return guarded(
      err, [&]() { return emit(dump(analyze_report(seq->ks)), json_out, err); });
}

primcomp_status primcomp_classification(const primcomp_sequence* seq,
                                        char** json_out, char** err) {
  if (primcomp_status s = require(seq != nullptr, "seq", err); s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(json_out != nullptr, "json_out", err);
      s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    return emit(dump(classify_report(seq->ks)), json_out, err);
  });
}

primcomp_status primcomp_action_render(const primcomp_sequence* seq,
                                       const char* lambda, char** text_out,
                                       char** err) {
  if (primcomp_status s = require(seq != nullptr, "seq", err); s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(text_out != nullptr, "text_out", err);
      s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    ActionFamily family = tau_action(seq->ks, parse_lambda(lambda));
    return emit(render_action(family), text_out, err);
  });
}

primcomp_status primcomp_action_json(const primcomp_sequence* seq,
                                     const char* lambda, char** json_out,
                                     char** err) {
  if (primcomp_status s = require(seq != nullptr, "seq", err); s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(json_out != nullptr, "json_out", err);
      s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    return emit(dump(action_report(seq->ks, parse_lambda(lambda))), json_out,
                err);
  });
}

primcomp_status primcomp_action_verify(const primcomp_sequence* seq,
                                       int inject_fault, char** json_out,
                                       char** err) {
  if (primcomp_status s = require(seq != nullptr, "seq", err); s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(json_out != nullptr, "json_out", err);
      s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    return emit(dump(action_verify_report(seq->ks, inject_fault != 0)),
                json_out, err);
  });
}

primcomp_status primcomp_action_verify_generic(int m, int inject_fault,
                                               char** json_out, char** err) {
  if (primcomp_status s = require(json_out != nullptr, "json_out", err);
      s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    return emit(dump(generic_verify_report(m, inject_fault != 0)), json_out,
                err);
  });
}

primcomp_status primcomp_resolve_schematic(const primcomp_sequence* seq,
                                           int as_dot, char** out,
                                           char** err) {
  if (primcomp_status s = require(seq != nullptr, "seq", err); s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(out != nullptr, "out", err); s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    if (as_dot != 0) {
      return emit(schematic_dot(dual_graph_schematic(seq->ks)), out, err);
    }
    return emit(dump(resolve_report(seq->ks)), out, err);
  });
}

primcomp_status primcomp_monomial_resolution(const char* fraction, int as_dot,
                                             char** out, char** err) {
  if (primcomp_status s = require(fraction != nullptr, "fraction", err);
      s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(out != nullptr, "out", err); s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    Rat value = parse_rat(fraction);
    Int p = num(value);
    Int q = den(value);
    if (as_dot != 0) {
      return emit(graph_dot(monomial_resolution_graph(p, q)), out, err);
    }
    return emit(dump(monomial_report(p, q)), out, err);
  });
}

primcomp_status primcomp_theta_equivalent(const primcomp_sequence* seq,
                                          const char* thetas1,
                                          const char* thetas2, int* verdict,
                                          char** err) {
  if (primcomp_status s = require(seq != nullptr, "seq", err); s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(thetas1 != nullptr, "thetas1", err);
      s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(thetas2 != nullptr, "thetas2", err);
      s != PRIMCOMP_OK)
    return s;
  if (primcomp_status s = require(verdict != nullptr, "verdict", err);
      s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    bool equal = theta_equivalent(seq->ks, parse_rat_csv(thetas1),
                                  parse_rat_csv(thetas2));
    *verdict = equal ? 1 : 0;
    return PRIMCOMP_OK;
  });
}

primcomp_status primcomp_enumerate(const char* options_json,
                                   primcomp_enumerate_callback callback,
                                   void* user_data, char** summary_json_out,
                                   char** err) {
  if (primcomp_status s = require(options_json != nullptr, "options_json", err);
      s != PRIMCOMP_OK)
    return s;
  return guarded(err, [&]() {
    Json parsed;
    try {
      parsed = Json::parse(options_json);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::Parse, "BadOptionsJson", e.what());
    }
    if (!parsed.is_object()) {
      throw Error(ErrorCode::Parse, "BadOptionsJson",
                  "enumeration options must be a JSON object");
    }
    EnumerationOptions options;
    options.max_entry = parsed.value("max_entry", 0L);
    options.max_omega0 = parsed.value("max_omega0", 0L);
    options.min_omega0 = parsed.value("min_omega0", 0L);
    options.max_len = parsed.value("max_len", 2);
    options.require_algebraic = parsed.value("require_algebraic", false);
    options.require_normal_form = parsed.value("require_normal_form", false);

    EnumerationSummary summary =
        enumerate_sequences(options, [&](const KeySequence& ks) {
          if (callback == nullptr) return true;
          std::string record = dump(enumerate_record(ks));
          return callback(record.c_str(), user_data) == 0;
        });
    if (summary_json_out != nullptr) {
      Json out;
      out["count"] = summary.emitted;
      out["stopped_early"] = summary.stopped_early;
      return emit(dump(out), summary_json_out, err);
    }
    return PRIMCOMP_OK;
  });
}

}  // extern "C"
