// Command-line front end. Talks to the library exclusively through the C
// API in ybcalc.h; CLI11 handles argument parsing and nlohmann/json is used
// only to assemble option/error objects (plumbing, not mathematics).
//
// Exit codes: 0 = computation completed (mathematical outcomes live in the
// report body); 1 = a predicate subcommand answered "no" (invalid input
// object, witness rejected); 2 = the request itself failed (unreadable file,
// malformed JSON, schema violation, bad usage). All output goes to standard
// output; on exit 2 the output is a machine-readable error object.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ybcalc.h"

using nlohmann::json;

namespace {

struct CtxDeleter {
  void operator()(ybc_ctx* c) const { ybc_ctx_free(c); }
};
struct ObjDeleter {
  void operator()(ybc_object* o) const { ybc_object_free(o); }
};
using CtxPtr = std::unique_ptr<ybc_ctx, CtxDeleter>;
using ObjPtr = std::unique_ptr<ybc_object, ObjDeleter>;

// Prints a heap report string and releases it.
void print_report(char* report) {
  if (!report) return;
  std::fputs(report, stdout);
  ybc_string_free(report);
}

// Emits the machine-readable error object for a failed call and returns 2.
int emit_error(const ybc_ctx* ctx, ybc_status status) {
  json err;
  err["error"]["status"] = static_cast<int>(status);
  err["error"]["code"] = ybc_last_error_code(ctx);
  err["error"]["message"] = ybc_last_error(ctx);
  std::fputs((err.dump(2) + "\n").c_str(), stdout);
  return 2;
}

int emit_usage_error(const std::string& message) {
  json err;
  err["error"]["status"] = static_cast<int>(YBC_ERR_ARGUMENT);
  err["error"]["code"] = "usage";
  err["error"]["message"] = message;
  std::fputs((err.dump(2) + "\n").c_str(), stdout);
  return 2;
}

// Option values shared by the analysis-flavored subcommands. Only flags the
// user actually passed are forwarded, so library defaults stay in one place.
struct CapFlags {
  CLI::Option* class_cap = nullptr;
  CLI::Option* closure_cap = nullptr;
  CLI::Option* malcev_class = nullptr;
  CLI::Option* malcev_len = nullptr;
  CLI::Option* d_retries = nullptr;
  CLI::Option* reach_cap = nullptr;
  CLI::Option* max_subsets = nullptr;
  CLI::Option* sim_word_budget = nullptr;
  CLI::Option* falsifier_budget = nullptr;
  CLI::Option* no_falsifier = nullptr;
  CLI::Option* no_components = nullptr;
  CLI::Option* no_timing = nullptr;
  CLI::Option* sizes = nullptr;

  uint64_t class_cap_v = 0, closure_cap_v = 0, reach_cap_v = 0, max_subsets_v = 0;
  uint64_t sim_word_budget_v = 0, falsifier_budget_v = 0;
  int malcev_class_v = 0, d_retries_v = 0;
  uint32_t malcev_len_v = 0;
  std::vector<int> sizes_v;

  // which: bitmask of what this subcommand understands.
  enum { kCaps = 1, kAnalysis = 2, kSizes = 4 };

  void attach(CLI::App* cmd, int which) {
    if (which & kCaps) {
      class_cap = cmd->add_option("--class-cap", class_cap_v,
                                  "Node cap for word-class closures");
      closure_cap = cmd->add_option("--closure-cap", closure_cap_v,
                                    "Element cap for permutation-group closures");
    }
    if (which & kAnalysis) {
      malcev_class = cmd->add_option("--malcev-class", malcev_class_v,
                                     "Nilpotency class bound for the identity falsifier");
      malcev_len = cmd->add_option("--malcev-len", malcev_len_v,
                                   "Variable word length bound for the identity falsifier");
      d_retries = cmd->add_option("--d-retries", d_retries_v,
                                  "Doublings tried when searching the constant d");
      sim_word_budget = cmd->add_option("--sim-word-budget", sim_word_budget_v,
                                        "Word budget per level for component edges");
      falsifier_budget = cmd->add_option("--falsifier-overflow-budget", falsifier_budget_v,
                                         "Overflowed comparisons tolerated by the falsifier");
      no_falsifier = cmd->add_flag("--no-falsifier", "Skip the identity falsifier");
      no_components = cmd->add_flag("--no-components", "Skip the uniform-component layers");
      no_timing = cmd->add_flag("--no-timing", "Omit timing from the report");
    }
    if (which & (kAnalysis | kSizes)) {
      reach_cap = cmd->add_option("--reach-cap", reach_cap_v,
                                  "Cap for the reachable-permutation search");
      max_subsets = cmd->add_option("--max-subsets", max_subsets_v,
                                    "Subsets examined per size in the pair search");
    }
    if (which & kSizes) {
      sizes = cmd->add_option("--sizes", sizes_v, "Subset sizes to search (default: all)")
                  ->delimiter(',');
    }
  }

  std::string to_json() const {
    json j = json::object();
    auto put = [&](CLI::Option* opt, const char* key, auto value) {
      if (opt && opt->count() > 0) j[key] = value;
    };
    put(class_cap, "class_cap", class_cap_v);
    put(closure_cap, "closure_cap", closure_cap_v);
    put(malcev_class, "malcev_class", malcev_class_v);
    put(malcev_len, "malcev_len", malcev_len_v);
    put(d_retries, "d_retries", d_retries_v);
    put(reach_cap, "reach_cap", reach_cap_v);
    put(max_subsets, "max_subsets_per_size", max_subsets_v);
    put(sim_word_budget, "sim_word_budget", sim_word_budget_v);
    put(falsifier_budget, "falsifier_overflow_budget", falsifier_budget_v);
    if (no_falsifier && no_falsifier->count() > 0) j["run_falsifier"] = false;
    if (no_components && no_components->count() > 0) j["run_components"] = false;
    if (no_timing && no_timing->count() > 0) j["timing"] = false;
    if (sizes && sizes->count() > 0) j["sizes"] = sizes_v;
    return j.dump();
  }
};

// Loads a document or reports the failure; on failure *exit_code is set.
ObjPtr load(ybc_ctx* ctx, const std::string& path, int* exit_code) {
  ybc_object* obj = nullptr;
  ybc_status st = ybc_load_file(ctx, path.c_str(), &obj);
  if (st != YBC_OK) {
    *exit_code = emit_error(ctx, st);
    return nullptr;
  }
  return ObjPtr(obj);
}

std::vector<int32_t> to_letters(const std::vector<int>& v) {
  return std::vector<int32_t>(v.begin(), v.end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calculator for finite set-theoretic Yang-Baxter solutions, "
               "racks, and skew braces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(ybc_version()); });

  CtxPtr ctx(ybc_ctx_new());
  if (!ctx) {
    std::fputs("out of memory\n", stdout);
    return 2;
  }
  int exit_code = 0;

  // ---- validate --------------------------------------------------------
  auto* validate = app.add_subcommand(
      "validate", "Check a document's defining axioms; exit 1 when invalid");
  static std::string validate_path;
  validate->add_option("file", validate_path, "Document to validate")->required();
  validate->callback([&] {
    auto obj = load(ctx.get(), validate_path, &exit_code);
    if (!obj) return;
    int valid = 0;
    char* report = nullptr;
    ybc_status st = ybc_validate(ctx.get(), obj.get(), &valid, &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
    exit_code = valid ? 0 : 1;
  });

  // ---- analyze ---------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "Full analysis report for a solution");
  static std::string analyze_path;
  static CapFlags analyze_flags;
  analyze->add_option("file", analyze_path, "Solution document")->required();
  analyze_flags.attach(analyze, CapFlags::kCaps | CapFlags::kAnalysis);
  analyze->callback([&] {
    auto obj = load(ctx.get(), analyze_path, &exit_code);
    if (!obj) return;
    char* report = nullptr;
    ybc_status st = ybc_analyze(ctx.get(), obj.get(), analyze_flags.to_json().c_str(), &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
  });

  // ---- nc-check --------------------------------------------------------
  auto* nc_check = app.add_subcommand(
      "nc-check", "Search for a pair of subsets certifying the nilpotency obstruction");
  static std::string nc_check_path;
  static CapFlags nc_check_flags;
  nc_check->add_option("file", nc_check_path, "Solution document")->required();
  nc_check_flags.attach(nc_check, CapFlags::kCaps | CapFlags::kSizes);
  nc_check->callback([&] {
    auto obj = load(ctx.get(), nc_check_path, &exit_code);
    if (!obj) return;
    char* report = nullptr;
    ybc_status st = ybc_nc_check(ctx.get(), obj.get(), nc_check_flags.to_json().c_str(), &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
  });

  // ---- nc-verify -------------------------------------------------------
  auto* nc_verify = app.add_subcommand(
      "nc-verify", "Replay an explicit witness; exit 1 when it fails to certify");
  static std::string nc_verify_path, witness_text;
  static std::vector<int> wY, wZ, wa, wb;
  nc_verify->add_option("file", nc_verify_path, "Solution document")->required();
  auto* witness_opt = nc_verify->add_option(
      "--witness", witness_text, "Witness as JSON {\"Y\":..,\"Z\":..,\"a\":..,\"b\":..}");
  auto* yopt = nc_verify->add_option("--Y", wY, "Witness subset Y")->delimiter(',');
  auto* zopt = nc_verify->add_option("--Z", wZ, "Witness subset Z")->delimiter(',');
  nc_verify->add_option("--a", wa, "Witness word a (may be omitted for the empty word)")
      ->delimiter(',');
  nc_verify->add_option("--b", wb, "Witness word b (may be omitted for the empty word)")
      ->delimiter(',');
  nc_verify->callback([&] {
    std::string witness;
    if (witness_opt->count() > 0) {
      witness = witness_text;
    } else if (yopt->count() > 0 && zopt->count() > 0) {
      json w;
      w["Y"] = wY;
      w["Z"] = wZ;
      w["a"] = wa;
      w["b"] = wb;
      witness = w.dump();
    } else {
      exit_code = emit_usage_error("nc-verify needs --witness or both --Y and --Z");
      return;
    }
    auto obj = load(ctx.get(), nc_verify_path, &exit_code);
    if (!obj) return;
    int ok = 0;
    char* report = nullptr;
    ybc_status st = ybc_nc_verify(ctx.get(), obj.get(), witness.c_str(), &ok, &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
    exit_code = ok ? 0 : 1;
  });

  // ---- rack ------------------------------------------------------------
  auto* rack = app.add_subcommand("rack", "Rack and quandle operations");
  rack->require_subcommand(1);

  auto* rack_classify = rack->add_subcommand(
      "classify", "Decompose an abelian rack into its block description");
  static std::string rack_classify_path;
  rack_classify->add_option("file", rack_classify_path, "Rack document")->required();
  rack_classify->callback([&] {
    auto obj = load(ctx.get(), rack_classify_path, &exit_code);
    if (!obj) return;
    char* doc = nullptr;
    ybc_status st = ybc_rack_classify(ctx.get(), obj.get(), &doc);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(doc);
  });

  auto* rack_build = rack->add_subcommand(
      "build", "Rebuild the rack table from a block description");
  static std::string rack_build_path;
  rack_build->add_option("file", rack_build_path, "Block-description document")->required();
  rack_build->callback([&] {
    auto obj = load(ctx.get(), rack_build_path, &exit_code);
    if (!obj) return;
    char* doc = nullptr;
    ybc_status st = ybc_rack_build(ctx.get(), obj.get(), &doc);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(doc);
  });

  auto* rack_check = rack->add_subcommand(
      "check", "Check rack axioms (or block-description validity); exit 1 when invalid");
  static std::string rack_check_path;
  rack_check->add_option("file", rack_check_path, "Rack or block-description document")
      ->required();
  rack_check->callback([&] {
    auto obj = load(ctx.get(), rack_check_path, &exit_code);
    if (!obj) return;
    std::string kind = ybc_object_kind(obj.get());
    if (kind != "rack" && kind != "rack_data") {
      exit_code = emit_usage_error("rack check expects a rack or rack_data document, got " + kind);
      return;
    }
    int valid = 0;
    char* report = nullptr;
    ybc_status st = ybc_validate(ctx.get(), obj.get(), &valid, &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
    exit_code = valid ? 0 : 1;
  });

  // ---- brace -----------------------------------------------------------
  auto* brace = app.add_subcommand("brace", "Skew-brace operations");
  brace->require_subcommand(1);

  auto* brace_validate = brace->add_subcommand(
      "validate", "Check the skew-brace axioms; exit 1 when invalid");
  static std::string brace_validate_path;
  brace_validate->add_option("file", brace_validate_path, "Brace document")->required();
  brace_validate->callback([&] {
    auto obj = load(ctx.get(), brace_validate_path, &exit_code);
    if (!obj) return;
    std::string kind = ybc_object_kind(obj.get());
    if (kind != "brace") {
      exit_code = emit_usage_error("brace validate expects a brace document, got " + kind);
      return;
    }
    int valid = 0;
    char* report = nullptr;
    ybc_status st = ybc_validate(ctx.get(), obj.get(), &valid, &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
    exit_code = valid ? 0 : 1;
  });

  auto* brace_socle = brace->add_subcommand(
      "socle", "Socle and socle series of a skew brace");
  static std::string brace_socle_path;
  brace_socle->add_option("file", brace_socle_path, "Brace document")->required();
  brace_socle->callback([&] {
    auto obj = load(ctx.get(), brace_socle_path, &exit_code);
    if (!obj) return;
    char* report = nullptr;
    ybc_status st = ybc_brace_socle(ctx.get(), obj.get(), &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
  });

  auto* brace_commutator = brace->add_subcommand(
      "commutator", "Additive commutator subgroup and its ideal flags");
  static std::string brace_commutator_path;
  brace_commutator->add_option("file", brace_commutator_path, "Brace document")->required();
  brace_commutator->callback([&] {
    auto obj = load(ctx.get(), brace_commutator_path, &exit_code);
    if (!obj) return;
    char* report = nullptr;
    ybc_status st = ybc_brace_commutator(ctx.get(), obj.get(), &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
  });

  auto* brace_solution = brace->add_subcommand(
      "solution", "Associated solution document of a skew brace");
  static std::string brace_solution_path;
  brace_solution->add_option("file", brace_solution_path, "Brace document")->required();
  brace_solution->callback([&] {
    auto obj = load(ctx.get(), brace_solution_path, &exit_code);
    if (!obj) return;
    char* doc = nullptr;
    ybc_status st = ybc_brace_solution(ctx.get(), obj.get(), &doc);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(doc);
  });

  // ---- monoid ----------------------------------------------------------
  auto* monoid = app.add_subcommand("monoid", "Structure-monoid word calculus");
  monoid->require_subcommand(1);

  static std::string monoid_path;
  static std::vector<int> word_main, word_left, word_right;
  static CapFlags monoid_flags;

  auto* normalize = monoid->add_subcommand(
      "normalize", "Canonical form, class size, and divisors of a word");
  normalize->add_option("file", monoid_path, "Solution document")->required();
  normalize->add_option("--word", word_main, "Comma-separated letters")
      ->required()
      ->delimiter(',');
  static bool normalize_in_m = false;
  normalize->add_flag("--in-m", normalize_in_m,
                      "Interpret in the structure monoid (default: additive monoid)");
  monoid_flags.attach(normalize, CapFlags::kCaps);
  normalize->callback([&] {
    auto obj = load(ctx.get(), monoid_path, &exit_code);
    if (!obj) return;
    auto letters = to_letters(word_main);
    char* report = nullptr;
    ybc_status st =
        ybc_word_normalize(ctx.get(), obj.get(), letters.data(), letters.size(),
                           normalize_in_m ? 1 : 0, monoid_flags.to_json().c_str(), &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
  });

  auto* equal = monoid->add_subcommand("equal", "Decide equality of two words");
  static std::string equal_path;
  static CapFlags equal_flags;
  equal->add_option("file", equal_path, "Solution document")->required();
  equal->add_option("--left", word_left, "Left word, comma-separated letters")
      ->required()
      ->delimiter(',');
  equal->add_option("--right", word_right, "Right word, comma-separated letters")
      ->required()
      ->delimiter(',');
  static bool equal_in_m = false;
  equal->add_flag("--in-m", equal_in_m,
                  "Interpret in the structure monoid (default: additive monoid)");
  equal_flags.attach(equal, CapFlags::kCaps);
  equal->callback([&] {
    auto obj = load(ctx.get(), equal_path, &exit_code);
    if (!obj) return;
    auto left = to_letters(word_left);
    auto right = to_letters(word_right);
    char* report = nullptr;
    ybc_status st =
        ybc_word_equal(ctx.get(), obj.get(), left.data(), left.size(), right.data(),
                       right.size(), equal_in_m ? 1 : 0, equal_flags.to_json().c_str(), &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
  });

  auto* divisors = monoid->add_subcommand(
      "divisors", "Letters dividing a word (its level in the ideal chain)");
  static std::string divisors_path;
  static std::vector<int> divisors_word;
  static CapFlags divisors_flags;
  divisors->add_option("file", divisors_path, "Solution document")->required();
  divisors->add_option("--word", divisors_word, "Comma-separated letters")
      ->required()
      ->delimiter(',');
  static bool divisors_in_m = false;
  divisors->add_flag("--in-m", divisors_in_m,
                     "Interpret in the structure monoid (default: additive monoid)");
  divisors_flags.attach(divisors, CapFlags::kCaps);
  divisors->callback([&] {
    auto obj = load(ctx.get(), divisors_path, &exit_code);
    if (!obj) return;
    auto letters = to_letters(divisors_word);
    char* report = nullptr;
    ybc_status st =
        ybc_word_divisors(ctx.get(), obj.get(), letters.data(), letters.size(),
                          divisors_in_m ? 1 : 0, divisors_flags.to_json().c_str(), &report);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    print_report(report);
  });

  // ---- enumerate ---------------------------------------------------------
  auto* enumerate = app.add_subcommand(
      "enumerate", "Stream every structure of a kind at a given order");
  static std::string enum_kind;
  static int enum_n = 0;
  static bool count_only = false;
  enumerate->add_option("--kind", enum_kind, "solutions | racks | rack_data")->required();
  enumerate->add_option("--n", enum_n, "Number of points")->required();
  enumerate->add_flag("--count-only", count_only, "Suppress the stream, print only the count");
  enumerate->callback([&] {
    uint64_t count = 0;
    auto emit_doc = [](const char* doc_json, void*) {
      // One compact document per line keeps the stream greppable.
      json j = json::parse(doc_json);
      std::fputs((j.dump() + "\n").c_str(), stdout);
    };
    ybc_status st = ybc_enumerate(ctx.get(), enum_kind.c_str(), enum_n,
                                  count_only ? nullptr : +emit_doc, nullptr, &count);
    if (st != YBC_OK) {
      exit_code = emit_error(ctx.get(), st);
      return;
    }
    json summary;
    summary["kind"] = enum_kind;
    summary["n"] = enum_n;
    summary["count"] = count;
    std::fputs((summary.dump() + "\n").c_str(), stdout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help text, exits 0
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_usage_error(e.what());
  }
  return exit_code;
}
