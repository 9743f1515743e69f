// C surface. Every entry point follows the same shape: validate arguments,
// run the C++ core inside a try block, map exceptions to status codes, and
// hand results back as heap JSON strings the caller frees.

#include "ybcalc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "ybcalc/analyze.hpp"
#include "ybcalc/enumerate.hpp"
#include "ybcalc/io.hpp"

using nlohmann::json;

struct ybc_ctx {
  std::string message;
  std::string code;
};

struct ybc_object {
  ybcalc::Document doc;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(ybc_ctx* ctx, const char* code, const std::string& message) {
  if (!ctx) return;
  ctx->code = code;
  ctx->message = message;
}

void clear_error(ybc_ctx* ctx) {
  if (!ctx) return;
  ctx->code.clear();
  ctx->message.clear();
}

// Runs the body, translating the library's exception taxonomy.
template <typename F>
ybc_status guarded(ybc_ctx* ctx, F&& body) {
  clear_error(ctx);
  try {
    return body();
  } catch (const ybcalc::ParseError& e) {
    set_error(ctx, e.code().c_str(), e.what());
    return YBC_ERR_PARSE;
  } catch (const ybcalc::SchemaError& e) {
    set_error(ctx, e.code().c_str(), e.what());
    return YBC_ERR_SCHEMA;
  } catch (const ybcalc::KindUnknownError& e) {
    set_error(ctx, e.code().c_str(), e.what());
    return YBC_ERR_KIND;
  } catch (const ybcalc::FileError& e) {
    set_error(ctx, e.code().c_str(), e.what());
    return YBC_ERR_FILE;
  } catch (const ybcalc::InternalError& e) {
    set_error(ctx, e.code().c_str(), e.what());
    return YBC_ERR_INTERNAL;
  } catch (const ybcalc::DomainError& e) {
    set_error(ctx, e.code().c_str(), e.what());
    return YBC_ERR_DOMAIN;
  } catch (const std::exception& e) {
    set_error(ctx, "unexpected_exception", e.what());
    return YBC_ERR_INTERNAL;
  }
}

ybc_status arg_error(ybc_ctx* ctx, const std::string& message) {
  clear_error(ctx);
  set_error(ctx, "bad_argument", message);
  return YBC_ERR_ARGUMENT;
}

struct Options {
  ybcalc::AnalysisOptions analysis;
  bool timing = true;
  std::vector<int> sizes;  // nc-check subset sizes; empty = all
};

// options_json may be NULL/empty; unknown keys are rejected so typos fail
// loudly instead of silently running with defaults.
Options parse_options(const char* options_json) {
  Options opts;
  if (!options_json || !*options_json) return opts;
  json j;
  try {
    j = json::parse(options_json);
  } catch (const json::parse_error& e) {
    throw ybcalc::DomainError("bad_options", std::string("options are not JSON: ") + e.what());
  }
  if (!j.is_object()) throw ybcalc::DomainError("bad_options", "options must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    auto want_uint = [&](const char* name) -> uint64_t {
      if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<int64_t>() >= 0))
        throw ybcalc::DomainError("bad_options", std::string(name) + " must be a non-negative integer");
      return value.get<uint64_t>();
    };
    if (key == "class_cap") opts.analysis.class_cap = want_uint("class_cap");
    else if (key == "closure_cap") opts.analysis.closure_cap = want_uint("closure_cap");
    else if (key == "malcev_class") opts.analysis.malcev_class = static_cast<int>(want_uint("malcev_class"));
    else if (key == "malcev_len") opts.analysis.malcev_len = static_cast<uint32_t>(want_uint("malcev_len"));
    else if (key == "d_retries") opts.analysis.d_retries = static_cast<int>(want_uint("d_retries"));
    else if (key == "reach_cap") opts.analysis.reach_cap = want_uint("reach_cap");
    else if (key == "max_subsets_per_size") opts.analysis.max_subsets_per_size = want_uint("max_subsets_per_size");
    else if (key == "sim_word_budget") opts.analysis.sim_word_budget = want_uint("sim_word_budget");
    else if (key == "falsifier_overflow_budget") opts.analysis.falsifier_overflow_budget = want_uint("falsifier_overflow_budget");
    else if (key == "run_falsifier") {
      if (!value.is_boolean()) throw ybcalc::DomainError("bad_options", "run_falsifier must be a boolean");
      opts.analysis.run_falsifier = value.get<bool>();
    } else if (key == "run_components") {
      if (!value.is_boolean()) throw ybcalc::DomainError("bad_options", "run_components must be a boolean");
      opts.analysis.run_components = value.get<bool>();
    } else if (key == "timing") {
      if (!value.is_boolean()) throw ybcalc::DomainError("bad_options", "timing must be a boolean");
      opts.timing = value.get<bool>();
    } else if (key == "sizes") {
      if (!value.is_array()) throw ybcalc::DomainError("bad_options", "sizes must be an array");
      for (const auto& s : value) {
        if (!s.is_number_integer() || s.get<int64_t>() < 1)
          throw ybcalc::DomainError("bad_options", "sizes entries must be positive integers");
        opts.sizes.push_back(s.get<int>());
      }
    } else {
      throw ybcalc::DomainError("bad_options", "unknown option '" + key + "'");
    }
  }
  return opts;
}

const ybcalc::Solution& require_solution(const ybc_object* obj) {
  if (obj->doc.kind != ybcalc::DocKind::Solution)
    throw ybcalc::KindUnknownError(std::string("expected a solution document, got ") +
                                   ybcalc::doc_kind_name(obj->doc.kind));
  return *obj->doc.solution;
}

ybcalc::Word read_word(const ybcalc::Solution& s, const int32_t* word, size_t len) {
  ybcalc::Word w;
  w.reserve(len);
  for (size_t i = 0; i < len; ++i) {
    if (word[i] < 0 || word[i] >= s.n)
      throw ybcalc::DomainError("letter_out_of_range",
                                "letter " + std::to_string(word[i]) + " outside [0, " +
                                    std::to_string(s.n) + ")");
    w.push_back(static_cast<ybcalc::Pt>(word[i]));
  }
  return w;
}

ybc_status emit(char** out, const ybcalc::Json& j) {
  *out = dup_string(j.dump(2) + "\n");
  return *out ? YBC_OK : YBC_ERR_INTERNAL;
}

}  // namespace

extern "C" {

ybc_ctx* ybc_ctx_new(void) { return new (std::nothrow) ybc_ctx(); }

void ybc_ctx_free(ybc_ctx* ctx) { delete ctx; }

const char* ybc_last_error(const ybc_ctx* ctx) { return ctx ? ctx->message.c_str() : ""; }

const char* ybc_last_error_code(const ybc_ctx* ctx) { return ctx ? ctx->code.c_str() : ""; }

void ybc_string_free(char* s) { std::free(s); }

void ybc_object_free(ybc_object* obj) { delete obj; }

ybc_status ybc_parse(ybc_ctx* ctx, const char* json_text, ybc_object** out) {
  if (!json_text || !out) return arg_error(ctx, "json_text and out must be non-null");
  return guarded(ctx, [&] {
    auto obj = std::make_unique<ybc_object>();
    obj->doc = ybcalc::parse_document(json_text);
    *out = obj.release();
    return YBC_OK;
  });
}

ybc_status ybc_load_file(ybc_ctx* ctx, const char* path, ybc_object** out) {
  if (!path || !out) return arg_error(ctx, "path and out must be non-null");
  return guarded(ctx, [&] {
    auto obj = std::make_unique<ybc_object>();
    obj->doc = ybcalc::load_document(path);
    *out = obj.release();
    return YBC_OK;
  });
}

const char* ybc_object_kind(const ybc_object* obj) {
  return obj ? ybcalc::doc_kind_name(obj->doc.kind) : "";
}

ybc_status ybc_serialize(ybc_ctx* ctx, const ybc_object* obj, char** out_json) {
  if (!obj || !out_json) return arg_error(ctx, "obj and out_json must be non-null");
  return guarded(ctx, [&] {
    *out_json = dup_string(ybcalc::serialize_document(obj->doc));
    return *out_json ? YBC_OK : YBC_ERR_INTERNAL;
  });
}

ybc_status ybc_validate(ybc_ctx* ctx, const ybc_object* obj, int* out_valid, char** out_report) {
  if (!obj || !out_valid) return arg_error(ctx, "obj and out_valid must be non-null");
  return guarded(ctx, [&] {
    ybcalc::ValidationResult v;
    switch (obj->doc.kind) {
      case ybcalc::DocKind::Solution: v = ybcalc::validate_solution(*obj->doc.solution); break;
      case ybcalc::DocKind::Rack: v = ybcalc::validate_rack(*obj->doc.rack); break;
      case ybcalc::DocKind::Brace: v = ybcalc::validate_brace(*obj->doc.brace); break;
      case ybcalc::DocKind::RackData: v = ybcalc::validate_rack_data(*obj->doc.rack_data); break;
    }
    *out_valid = v.valid ? 1 : 0;
    if (out_report)
      return emit(out_report,
                  ybcalc::validation_report(ybcalc::doc_kind_name(obj->doc.kind), v));
    return YBC_OK;
  });
}

ybc_status ybc_analyze(ybc_ctx* ctx, const ybc_object* obj, const char* options_json,
                       char** out_report) {
  if (!obj || !out_report) return arg_error(ctx, "obj and out_report must be non-null");
  return guarded(ctx, [&] {
    const auto& s = require_solution(obj);
    Options opts = parse_options(options_json);
    return emit(out_report, ybcalc::analysis_report(s, opts.analysis, opts.timing));
  });
}

ybc_status ybc_nc_check(ybc_ctx* ctx, const ybc_object* obj, const char* options_json,
                        char** out_report) {
  if (!obj || !out_report) return arg_error(ctx, "obj and out_report must be non-null");
  return guarded(ctx, [&] {
    const auto& s = require_solution(obj);
    auto v = ybcalc::validate_solution(s);
    if (!v.valid)
      throw ybcalc::DomainError("invalid_solution",
                                "solution fails validation: " + v.issues[0].code);
    Options opts = parse_options(options_json);
    ybcalc::MonoidCalc calc(s, opts.analysis.class_cap);
    auto verdict = ybcalc::nc_search(calc, opts.sizes, opts.analysis.reach_cap,
                                     opts.analysis.max_subsets_per_size);
    ybcalc::Json rep;
    if (!s.name.empty()) rep["name"] = s.name;
    rep["nc"] = ybcalc::json_nc(verdict);
    return emit(out_report, rep);
  });
}

ybc_status ybc_nc_verify(ybc_ctx* ctx, const ybc_object* obj, const char* witness_json,
                         int* out_ok, char** out_report) {
  if (!obj || !witness_json || !out_ok)
    return arg_error(ctx, "obj, witness_json and out_ok must be non-null");
  return guarded(ctx, [&] {
    const auto& s = require_solution(obj);
    auto v = ybcalc::validate_solution(s);
    if (!v.valid)
      throw ybcalc::DomainError("invalid_solution",
                                "solution fails validation: " + v.issues[0].code);
    json w;
    try {
      w = json::parse(witness_json);
    } catch (const json::parse_error& e) {
      throw ybcalc::DomainError("bad_witness", std::string("witness is not JSON: ") + e.what());
    }
    auto read_set = [&](const char* name) {
      if (!w.is_object() || !w.contains(name) || !w.at(name).is_array())
        throw ybcalc::DomainError("bad_witness", std::string("witness needs array field ") + name);
      std::vector<int32_t> raw;
      for (const auto& e : w.at(name)) {
        if (!e.is_number_integer())
          throw ybcalc::DomainError("bad_witness", std::string(name) + " entries must be integers");
        raw.push_back(e.get<int32_t>());
      }
      return read_word(s, raw.data(), raw.size());
    };
    auto Y = read_set("Y");
    auto Z = read_set("Z");
    auto a = read_set("a");
    auto b = read_set("b");
    ybcalc::MonoidCalc calc(s);
    bool ok = ybcalc::nc_verify_witness(calc, Y, Z, a, b);
    *out_ok = ok ? 1 : 0;
    if (out_report) {
      ybcalc::Json rep;
      rep["ok"] = ok;
      rep["Y"] = ybcalc::json_subset(Y);
      rep["Z"] = ybcalc::json_subset(Z);
      rep["a"] = ybcalc::json_word(a);
      rep["b"] = ybcalc::json_word(b);
      return emit(out_report, rep);
    }
    return YBC_OK;
  });
}

ybc_status ybc_word_normalize(ybc_ctx* ctx, const ybc_object* obj, const int32_t* word,
                              size_t len, int in_m, const char* options_json,
                              char** out_report) {
  if (!obj || (!word && len) || !out_report)
    return arg_error(ctx, "obj, word and out_report must be non-null");
  return guarded(ctx, [&] {
    const auto& s = require_solution(obj);
    Options opts = parse_options(options_json);
    ybcalc::MonoidCalc calc(s, opts.analysis.class_cap);
    ybcalc::Word w = read_word(s, word, len);
    ybcalc::Word a = in_m ? calc.pi_forward(w) : w;
    auto cls = calc.a_class(a);
    ybcalc::Json rep;
    rep["input"] = ybcalc::json_word(w);
    rep["monoid"] = in_m ? "m" : "a";
    if (cls) {
      rep["canonical"] = ybcalc::json_word(in_m ? calc.pi_inverse(cls->canon) : cls->canon);
      rep["class_size"] = cls->size;
      rep["divisors"] = ybcalc::json_subset(cls->divisors);
      rep["overflow"] = false;
    } else {
      rep["canonical"] = nullptr;
      rep["overflow"] = true;
    }
    return emit(out_report, rep);
  });
}

ybc_status ybc_word_equal(ybc_ctx* ctx, const ybc_object* obj, const int32_t* w1, size_t len1,
                          const int32_t* w2, size_t len2, int in_m, const char* options_json,
                          char** out_report) {
  if (!obj || (!w1 && len1) || (!w2 && len2) || !out_report)
    return arg_error(ctx, "obj, words and out_report must be non-null");
  return guarded(ctx, [&] {
    const auto& s = require_solution(obj);
    Options opts = parse_options(options_json);
    ybcalc::MonoidCalc calc(s, opts.analysis.class_cap);
    ybcalc::Word a = read_word(s, w1, len1);
    ybcalc::Word b = read_word(s, w2, len2);
    ybcalc::Tri t = in_m ? calc.m_equal(a, b) : calc.a_equal(a, b);
    ybcalc::Json rep;
    rep["left"] = ybcalc::json_word(a);
    rep["right"] = ybcalc::json_word(b);
    rep["monoid"] = in_m ? "m" : "a";
    rep["equal"] = ybcalc::tri_name(t);
    return emit(out_report, rep);
  });
}

ybc_status ybc_word_divisors(ybc_ctx* ctx, const ybc_object* obj, const int32_t* word,
                             size_t len, int in_m, const char* options_json,
                             char** out_report) {
  if (!obj || (!word && len) || !out_report)
    return arg_error(ctx, "obj, word and out_report must be non-null");
  return guarded(ctx, [&] {
    const auto& s = require_solution(obj);
    Options opts = parse_options(options_json);
    ybcalc::MonoidCalc calc(s, opts.analysis.class_cap);
    ybcalc::Word w = read_word(s, word, len);
    ybcalc::Word a = in_m ? calc.pi_forward(w) : w;
    auto cls = calc.a_class(a);
    ybcalc::Json rep;
    rep["input"] = ybcalc::json_word(w);
    rep["monoid"] = in_m ? "m" : "a";
    if (cls) {
      rep["divisors"] = ybcalc::json_subset(cls->divisors);
      rep["level"] = cls->divisors.size();
      rep["overflow"] = false;
    } else {
      rep["divisors"] = nullptr;
      rep["overflow"] = true;
    }
    return emit(out_report, rep);
  });
}

ybc_status ybc_rack_classify(ybc_ctx* ctx, const ybc_object* obj, char** out_doc) {
  if (!obj || !out_doc) return arg_error(ctx, "obj and out_doc must be non-null");
  return guarded(ctx, [&] {
    if (obj->doc.kind != ybcalc::DocKind::Rack)
      throw ybcalc::KindUnknownError(std::string("expected a rack document, got ") +
                                     ybcalc::doc_kind_name(obj->doc.kind));
    auto data = ybcalc::rack_classify(*obj->doc.rack);
    *out_doc = dup_string(ybcalc::serialize_rack_data(data));
    return *out_doc ? YBC_OK : YBC_ERR_INTERNAL;
  });
}

ybc_status ybc_rack_build(ybc_ctx* ctx, const ybc_object* obj, char** out_doc) {
  if (!obj || !out_doc) return arg_error(ctx, "obj and out_doc must be non-null");
  return guarded(ctx, [&] {
    if (obj->doc.kind != ybcalc::DocKind::RackData)
      throw ybcalc::KindUnknownError(std::string("expected a rack_data document, got ") +
                                     ybcalc::doc_kind_name(obj->doc.kind));
    auto rack = ybcalc::rack_build(*obj->doc.rack_data);
    *out_doc = dup_string(ybcalc::serialize_rack(rack));
    return *out_doc ? YBC_OK : YBC_ERR_INTERNAL;
  });
}

ybc_status ybc_brace_socle(ybc_ctx* ctx, const ybc_object* obj, char** out_report) {
  if (!obj || !out_report) return arg_error(ctx, "obj and out_report must be non-null");
  return guarded(ctx, [&] {
    if (obj->doc.kind != ybcalc::DocKind::Brace)
      throw ybcalc::KindUnknownError(std::string("expected a brace document, got ") +
                                     ybcalc::doc_kind_name(obj->doc.kind));
    return emit(out_report, ybcalc::brace_socle_report(*obj->doc.brace));
  });
}

ybc_status ybc_brace_commutator(ybc_ctx* ctx, const ybc_object* obj, char** out_report) {
  if (!obj || !out_report) return arg_error(ctx, "obj and out_report must be non-null");
  return guarded(ctx, [&] {
    if (obj->doc.kind != ybcalc::DocKind::Brace)
      throw ybcalc::KindUnknownError(std::string("expected a brace document, got ") +
                                     ybcalc::doc_kind_name(obj->doc.kind));
    return emit(out_report, ybcalc::brace_commutator_report(*obj->doc.brace));
  });
}

ybc_status ybc_brace_solution(ybc_ctx* ctx, const ybc_object* obj, char** out_doc) {
  if (!obj || !out_doc) return arg_error(ctx, "obj and out_doc must be non-null");
  return guarded(ctx, [&] {
    if (obj->doc.kind != ybcalc::DocKind::Brace)
      throw ybcalc::KindUnknownError(std::string("expected a brace document, got ") +
                                     ybcalc::doc_kind_name(obj->doc.kind));
    auto s = ybcalc::brace_solution(*obj->doc.brace);
    *out_doc = dup_string(ybcalc::serialize_solution(s));
    return *out_doc ? YBC_OK : YBC_ERR_INTERNAL;
  });
}

ybc_status ybc_enumerate(ybc_ctx* ctx, const char* kind, int n,
                         void (*callback)(const char* doc_json, void* user), void* user,
                         uint64_t* out_count) {
  if (!kind || !out_count) return arg_error(ctx, "kind and out_count must be non-null");
  return guarded(ctx, [&] {
    const std::string what = kind;
    uint64_t count = 0;
    if (what == "solutions") {
      std::function<bool(const ybcalc::Solution&)> cb;
      if (callback)
        cb = [&](const ybcalc::Solution& s) {
          callback(ybcalc::serialize_solution(s).c_str(), user);
          return true;
        };
      count = ybcalc::enumerate_solutions(n, cb);
    } else if (what == "racks") {
      std::function<bool(const ybcalc::Rack&)> cb;
      if (callback)
        cb = [&](const ybcalc::Rack& r) {
          std::string note = std::string("quandle=") +
                             (ybcalc::rack_is_quandle(r) ? "true" : "false") + " abelian=" +
                             (ybcalc::rack_is_abelian(r) ? "true" : "false");
          callback(ybcalc::serialize_rack(r, note).c_str(), user);
          return true;
        };
      count = ybcalc::enumerate_racks(n, cb);
    } else if (what == "rack_data") {
      std::function<bool(const ybcalc::RackData&)> cb;
      if (callback)
        cb = [&](const ybcalc::RackData& d) {
          callback(ybcalc::serialize_rack_data(d).c_str(), user);
          return true;
        };
      count = ybcalc::enumerate_abelian_rack_data(n, cb);
    } else {
      throw ybcalc::DomainError("bad_enumeration_kind",
                                "kind must be solutions, racks, or rack_data");
    }
    *out_count = count;
    return YBC_OK;
  });
}

const char* ybc_version(void) { return "1.0.0"; }

}  // extern "C"
