// Command-line front end. Talks to the shared library exclusively through
// the public C interface; the vendored headers are used only for argument
// parsing and JSON formatting on this side of the boundary.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "primcomp/primcomp.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxPrintedRecords = 200;

struct OwnedString {
  char* ptr = nullptr;
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { primcomp_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedSequence {
  primcomp_sequence* ptr = nullptr;
  OwnedSequence() = default;
  OwnedSequence(const OwnedSequence&) = delete;
  OwnedSequence& operator=(const OwnedSequence&) = delete;
  ~OwnedSequence() { primcomp_sequence_free(ptr); }
};

int exit_code(primcomp_status status) {
  if (status == PRIMCOMP_OK) return 0;
  if (status == PRIMCOMP_ERR_INTERNAL) return 2;
  return 1;
}

int fail(primcomp_status status, const OwnedString& err) {
  std::cerr << "error: " << (err.ptr != nullptr ? err.ptr : "unspecified")
            << "\n";
  return exit_code(status);
}

bool open_sequence(const std::string& text, OwnedSequence& seq, int& rc) {
  OwnedString err;
  primcomp_status status =
      primcomp_sequence_parse(text.c_str(), &seq.ptr, &err.ptr);
  if (status != PRIMCOMP_OK) {
    rc = fail(status, err);
    return false;
  }
  return true;
}

int run_validate(const std::string& text, bool as_json) {
  OwnedString json, err;
  primcomp_status status =
      primcomp_validate_report(text.c_str(), &json.ptr, &err.ptr);
  if (status != PRIMCOMP_OK) return fail(status, err);
  Json report = Json::parse(json.str());
  if (as_json) {
    std::cout << json.str() << "\n";
  } else if (report["valid"].get<bool>()) {
    std::cout << "valid"
              << (report["primitive"].get<bool>() ? ", primitive"
                                                  : ", not primitive")
              << (report["algebraic"].get<bool>() ? ", algebraic"
                                                  : ", not algebraic")
              << (report["normal_form"]["is_normal"].get<bool>()
                      ? ", normal form"
                      : ", not normal form")
              << "\n";
  } else {
    std::cout << "invalid: " << report["error"]["kind"].get<std::string>()
              << " (" << report["error"]["message"].get<std::string>() << ")\n";
  }
  return report["valid"].get<bool>() ? 0 : 1;
}

int run_json_command(const std::string& text,
                     primcomp_status (*fn)(const primcomp_sequence*, char**,
                                           char**)) {
  int rc = 0;
  OwnedSequence seq;
  if (!open_sequence(text, seq, rc)) return rc;
  OwnedString json, err;
  primcomp_status status = fn(seq.ptr, &json.ptr, &err.ptr);
  if (status != PRIMCOMP_OK) return fail(status, err);
  std::cout << json.str() << "\n";
  return 0;
}

int run_action(const std::string& text, const std::string& lambda,
               bool as_json) {
  int rc = 0;
  OwnedSequence seq;
  if (!open_sequence(text, seq, rc)) return rc;
  const char* lambda_arg =
      (lambda.empty() || lambda == "symbolic") ? nullptr : lambda.c_str();
  OwnedString out, err;
  primcomp_status status =
      as_json ? primcomp_action_json(seq.ptr, lambda_arg, &out.ptr, &err.ptr)
              : primcomp_action_render(seq.ptr, lambda_arg, &out.ptr,
                                       &err.ptr);
  if (status != PRIMCOMP_OK) return fail(status, err);
  std::cout << out.str() << "\n";
  return 0;
}

int run_verify_sequence(const std::string& text, bool inject, bool as_json) {
  int rc = 0;
  OwnedSequence seq;
  if (!open_sequence(text, seq, rc)) return rc;
  OwnedString json, err;
  primcomp_status status =
      primcomp_action_verify(seq.ptr, inject ? 1 : 0, &json.ptr, &err.ptr);
  if (status != PRIMCOMP_OK) return fail(status, err);
  Json report = Json::parse(json.str());
  if (as_json) {
    std::cout << json.str() << "\n";
  } else {
    std::cout << "identity: " << (report["identity_ok"].get<bool>() ? "ok" : "FAILED")
              << ", composition: "
              << (report["composition_ok"].get<bool>() ? "ok" : "FAILED")
              << "\n";
  }
  return report["ok"].get<bool>() ? 0 : 1;
}

int run_verify_generic(int max_m, bool inject, bool as_json) {
  Json all = Json::array();
  bool every_ok = true;
  for (int m = 0; m <= max_m; ++m) {
    OwnedString json, err;
    primcomp_status status =
        primcomp_action_verify_generic(m, inject ? 1 : 0, &json.ptr, &err.ptr);
    if (status != PRIMCOMP_OK) return fail(status, err);
    Json report = Json::parse(json.str());
    every_ok = every_ok && report["ok"].get<bool>();
    if (as_json) {
      all.push_back(report);
    } else {
      std::cout << "m=" << m << ": "
                << (report["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    }
  }
  if (as_json) std::cout << all.dump(2) << "\n";
  return every_ok ? 0 : 1;
}

int run_resolve(const std::string& text, bool as_dot) {
  int rc = 0;
  OwnedSequence seq;
  if (!open_sequence(text, seq, rc)) return rc;
  OwnedString out, err;
  primcomp_status status =
      primcomp_resolve_schematic(seq.ptr, as_dot ? 1 : 0, &out.ptr, &err.ptr);
  if (status != PRIMCOMP_OK) return fail(status, err);
  std::cout << out.str() << "\n";
  return 0;
}

int run_monomial(const std::string& fraction, bool as_dot) {
  OwnedString out, err;
  primcomp_status status = primcomp_monomial_resolution(
      fraction.c_str(), as_dot ? 1 : 0, &out.ptr, &err.ptr);
  if (status != PRIMCOMP_OK) return fail(status, err);
  std::cout << out.str() << "\n";
  return 0;
}

int run_theta(const std::string& text, const std::string& t1,
              const std::string& t2, bool as_json) {
  int rc = 0;
  OwnedSequence seq;
  if (!open_sequence(text, seq, rc)) return rc;
  int verdict = 0;
  OwnedString err;
  primcomp_status status = primcomp_theta_equivalent(
      seq.ptr, t1.c_str(), t2.c_str(), &verdict, &err.ptr);
  if (status != PRIMCOMP_OK) return fail(status, err);
  if (as_json) {
    Json out;
    out["equivalent"] = (verdict != 0);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (verdict != 0 ? "equivalent" : "not equivalent") << "\n";
  }
  return 0;
}

struct EnumerateState {
  std::string filter;
  std::vector<Json> records;
  bool overflow = false;
};

bool record_matches(const Json& record, const std::string& filter) {
  if (filter.empty()) return true;
  if (filter == "g2a") {
    return record["g2a"].is_boolean() && record["g2a"].get<bool>();
  }
  if (filter == "del-pezzo") {
    return record["del_pezzo"].is_boolean() && record["del_pezzo"].get<bool>();
  }
  if (filter == "lt") return record["kawamata"] == "log_terminal";
  if (filter == "lc") {
    return record["kawamata"] == "log_canonical_not_log_terminal";
  }
  return false;
}

extern "C" int enumerate_callback(const char* record_json, void* user_data) {
  auto* state = static_cast<EnumerateState*>(user_data);
  Json record = Json::parse(record_json);
  if (!record_matches(record, state->filter)) return 0;
  if (state->records.size() >= kMaxPrintedRecords) {
    state->overflow = true;
    return 1;  // stop the enumeration
  }
  state->records.push_back(std::move(record));
  return 0;
}

int run_enumerate(long max_entry, long max_omega0, long min_omega0,
                  int max_len, const std::string& filter) {
  Json options;
  options["max_entry"] = max_entry;
  options["max_omega0"] = max_omega0;
  options["min_omega0"] = min_omega0;
  options["max_len"] = max_len;
  options["require_algebraic"] = (filter == "g2a" || filter == "del-pezzo");
  options["require_normal_form"] = !filter.empty();

  EnumerateState state;
  state.filter = filter;
  OwnedString summary, err;
  primcomp_status status =
      primcomp_enumerate(options.dump().c_str(), enumerate_callback, &state,
                         &summary.ptr, &err.ptr);
  if (status != PRIMCOMP_OK) return fail(status, err);
  if (state.overflow) {
    std::cerr << "error: more than " << kMaxPrintedRecords
              << " matching records; tighten the bounds or the filter\n";
    return 1;
  }
  Json out;
  out["records"] = Json(state.records);
  out["summary"] = Json::parse(summary.str());
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of primitive compactifications of the plane"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(primcomp_version()));

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of plain text");

  std::string seq_text, lambda, monomial, theta1, theta2, filter;
  bool inject = false, as_dot = false;
  int max_m = -1, max_len = 2;
  long max_entry = 0, max_omega0 = 0, min_omega0 = 0;
  int rc = 0;

  CLI::App* validate = app.add_subcommand("validate", "validate a sequence");
  validate->add_option("sequence", seq_text, "sequence, e.g. \"3,2,5\"")
      ->required();
  validate->callback([&]() { rc = run_validate(seq_text, as_json); });

  CLI::App* analyze =
      app.add_subcommand("analyze", "invariants of a valid sequence (JSON)");
  analyze->add_option("sequence", seq_text)->required();
  analyze->callback(
      [&]() { rc = run_json_command(seq_text, primcomp_analyze); });

  CLI::App* classify = app.add_subcommand(
      "classify", "singularity classification and family table (JSON)");
  classify->add_option("sequence", seq_text)->required();
  classify->callback(
      [&]() { rc = run_json_command(seq_text, primcomp_classification); });

  CLI::App* action =
      app.add_subcommand("action", "the canonical one-parameter action");
  action->add_option("sequence", seq_text)->required();
  action->add_option("--lambda", lambda,
                     "rational value, or \"symbolic\" (default)");
  action->callback([&]() { rc = run_action(seq_text, lambda, as_json); });

  CLI::App* verify = app.add_subcommand(
      "verify-action", "check the identity and composition axioms exactly");
  verify->add_option("sequence", seq_text, "verify the sequence's action");
  verify->add_option("--max-m", max_m,
                     "verify the symbolic families for m = 0..max-m instead")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--inject-fault", inject,
                   "perturb the family first (the check must then fail)");
  verify->callback([&]() {
    if (seq_text.empty() && max_m < 0) {
      std::cerr << "error: need a sequence or --max-m\n";
      rc = 1;
    } else if (!seq_text.empty() && max_m >= 0) {
      std::cerr << "error: give either a sequence or --max-m, not both\n";
      rc = 1;
    } else if (!seq_text.empty()) {
      rc = run_verify_sequence(seq_text, inject, as_json);
    } else {
      rc = run_verify_generic(max_m, inject, as_json);
    }
  });

  CLI::App* resolve = app.add_subcommand(
      "resolve", "boundary resolution data (JSON, or DOT with --dot)");
  resolve->add_option("sequence", seq_text, "schematic of a sequence");
  resolve->add_option("--monomial", monomial,
                      "blow-up graph of a single pair \"p/q\" instead");
  resolve->add_flag("--dot", as_dot, "emit Graphviz DOT");
  resolve->callback([&]() {
    if (seq_text.empty() == monomial.empty()) {
      std::cerr << "error: give either a sequence or --monomial\n";
      rc = 1;
    } else if (!seq_text.empty()) {
      rc = run_resolve(seq_text, as_dot);
    } else {
      rc = run_monomial(monomial, as_dot);
    }
  });

  CLI::App* theta = app.add_subcommand(
      "theta-equiv", "whether two theta tuples give isomorphic models");
  theta->add_option("sequence", seq_text)->required();
  theta->add_option("thetas1", theta1, "comma-separated rationals")
      ->required();
  theta->add_option("thetas2", theta2, "comma-separated rationals")
      ->required();
  theta->callback(
      [&]() { rc = run_theta(seq_text, theta1, theta2, as_json); });

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list sequences within bounds (JSON)");
  enumerate->add_option("--max-entry", max_entry, "cap on every entry")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--max-omega0", max_omega0,
                        "cap on the first entry (default: --max-entry)");
  enumerate->add_option("--min-omega0", min_omega0,
                        "lower bound on the first entry (default: 1)");
  enumerate->add_option("--max-len", max_len, "maximum number of entries")
      ->check(CLI::Range(2, 16));
  enumerate
      ->add_option("--filter", filter,
                   "keep only: g2a, del-pezzo, lt, lc")
      ->check(CLI::IsMember({"g2a", "del-pezzo", "lt", "lc"}));
  enumerate->callback([&]() {
    rc = run_enumerate(max_entry, max_omega0, min_omega0, max_len, filter);
  });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
