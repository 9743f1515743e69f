// Exercises the shared-library C surface end to end: object lifecycle,
// status-code taxonomy, report shapes, golden bytes, and enumeration.
// This binary deliberately consumes ONLY the public C header plus a JSON
// parser for inspecting report text.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybcalc.h"

using nlohmann::json;

namespace {

std::string source_dir() { return YBCALC_SOURCE_DIR; }
std::string fixture(const std::string& name) { return source_dir() + "/fixtures/" + name; }
std::string golden(const std::string& name) { return source_dir() + "/tests/golden/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Ctx {
  ybc_ctx* p;
  Ctx() : p(ybc_ctx_new()) { REQUIRE(p != nullptr); }
  ~Ctx() { ybc_ctx_free(p); }
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;
  operator ybc_ctx*() { return p; }
};

struct Obj {
  ybc_object* p = nullptr;
  ~Obj() { ybc_object_free(p); }
  Obj() = default;
  Obj(const Obj&) = delete;
  Obj& operator=(const Obj&) = delete;
  ybc_object** out() { return &p; }
  operator ybc_object*() const { return p; }
};

struct Str {
  char* p = nullptr;
  ~Str() { ybc_string_free(p); }
  Str() = default;
  Str(const Str&) = delete;
  Str& operator=(const Str&) = delete;
  char** out() { return &p; }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

void load(Ctx& ctx, const std::string& file, Obj& obj) {
  REQUIRE(ybc_load_file(ctx, fixture(file).c_str(), obj.out()) == YBC_OK);
  REQUIRE(obj.p != nullptr);
}

std::string last_code(Ctx& ctx) { return ybc_last_error_code(ctx.p); }

// C enumeration callback: collects the serialized documents.
void collect_cb(const char* doc_json, void* user) {
  static_cast<std::vector<std::string>*>(user)->push_back(doc_json);
}

}  // namespace

TEST_CASE("version and null-safety of the handle functions") {
  CHECK(std::string(ybc_version()) == "1.0.0");
  CHECK(std::string(ybc_last_error(nullptr)).empty());
  CHECK(std::string(ybc_last_error_code(nullptr)).empty());
  CHECK(std::string(ybc_object_kind(nullptr)).empty());
  ybc_string_free(nullptr);  // must be no-ops
  ybc_object_free(nullptr);
  Ctx ctx;
  CHECK(std::string(ybc_last_error(ctx)).empty());
  CHECK(last_code(ctx).empty());
}

TEST_CASE("the whole corpus loads, reports its kind, and validates") {
  struct Row {
    const char* file;
    const char* kind;
  };
  const std::vector<Row> rows = {
      {"conj_inv_s3.json", "solution"},      {"constant_rack_2.json", "rack"},
      {"cyclic_neg_z3.json", "solution"},    {"cyclic_neg_z4.json", "solution"},
      {"dihedral_rack_3.json", "rack"},      {"holomorph_brace_24.json", "brace"},
      {"lyubashenko_4.json", "solution"},    {"mpl2_4.json", "solution"},
      {"nc_example.json", "solution"},       {"nc_variant_4.json", "solution"},
      {"semidirect_brace_64.json", "brace"}, {"shift_z3.json", "solution"},
      {"shift_z4.json", "solution"},         {"two_block_data_4.json", "rack_data"},
  };
  Ctx ctx;
  for (const Row& row : rows) {
    CAPTURE(row.file);
    Obj obj;
    load(ctx, row.file, obj);
    CHECK(std::string(ybc_object_kind(obj)) == row.kind);

    int valid = -1;
    Str report;
    REQUIRE(ybc_validate(ctx, obj, &valid, report.out()) == YBC_OK);
    CHECK(valid == 1);
    json rep = json::parse(report.str());
    CHECK(rep.at("kind") == row.kind);
    CHECK(rep.at("validation").at("valid") == true);
    CHECK(rep.at("validation").at("issues").empty());

    // the report argument is optional
    int valid2 = -1;
    REQUIRE(ybc_validate(ctx, obj, &valid2, nullptr) == YBC_OK);
    CHECK(valid2 == 1);

    // canonical serialization reproduces the file bytes and round-trips
    Str text;
    REQUIRE(ybc_serialize(ctx, obj, text.out()) == YBC_OK);
    CHECK(text.str() == read_file(fixture(row.file)));
    Obj again;
    REQUIRE(ybc_parse(ctx, text.p, again.out()) == YBC_OK);
    Str text2;
    REQUIRE(ybc_serialize(ctx, again, text2.out()) == YBC_OK);
    CHECK(text2.str() == text.str());
  }
}

TEST_CASE("status codes and stable error codes cover the failure taxonomy") {
  Ctx ctx;
  Obj sink;

  SUBCASE("parse, schema, kind, file") {
    CHECK(ybc_parse(ctx, "{ not json", sink.out()) == YBC_ERR_PARSE);
    CHECK(last_code(ctx) == "parse_error");
    CHECK(std::string(ybc_last_error(ctx)).find("line") != std::string::npos);

    CHECK(ybc_parse(ctx, "{\"kind\": \"solution\", \"n\": 2}", sink.out()) == YBC_ERR_SCHEMA);
    CHECK(last_code(ctx) == "schema_error");

    CHECK(ybc_parse(ctx, "{\"kind\": \"widget\", \"n\": 1}", sink.out()) == YBC_ERR_KIND);
    CHECK(last_code(ctx) == "kind_unknown");

    CHECK(ybc_load_file(ctx, "/nonexistent/missing.json", sink.out()) == YBC_ERR_FILE);
    CHECK(last_code(ctx) == "file_error");
  }

  SUBCASE("null arguments") {
    CHECK(ybc_parse(ctx, nullptr, sink.out()) == YBC_ERR_ARGUMENT);
    CHECK(last_code(ctx) == "bad_argument");
    CHECK(ybc_serialize(ctx, nullptr, nullptr) == YBC_ERR_ARGUMENT);
    Obj obj;
    load(ctx, "lyubashenko_4.json", obj);
    CHECK(ybc_validate(ctx, obj, nullptr, nullptr) == YBC_ERR_ARGUMENT);
    uint64_t n = 0;
    CHECK(ybc_enumerate(ctx, nullptr, 2, nullptr, nullptr, &n) == YBC_ERR_ARGUMENT);
  }

  SUBCASE("kind unfit for the call") {
    Obj rack;
    load(ctx, "dihedral_rack_3.json", rack);
    Str rep;
    CHECK(ybc_analyze(ctx, rack, nullptr, rep.out()) == YBC_ERR_KIND);
    CHECK(last_code(ctx) == "kind_unknown");
    CHECK(ybc_brace_socle(ctx, rack, rep.out()) == YBC_ERR_KIND);
    Obj sol;
    load(ctx, "lyubashenko_4.json", sol);
    CHECK(ybc_rack_classify(ctx, sol, rep.out()) == YBC_ERR_KIND);
    CHECK(ybc_rack_build(ctx, sol, rep.out()) == YBC_ERR_KIND);
    CHECK(ybc_brace_commutator(ctx, sol, rep.out()) == YBC_ERR_KIND);
    CHECK(ybc_brace_solution(ctx, rack, rep.out()) == YBC_ERR_KIND);
  }

  SUBCASE("domain preconditions") {
    Obj dihedral;
    load(ctx, "dihedral_rack_3.json", dihedral);
    Str rep;
    // a non-abelian rack cannot be block-classified
    CHECK(ybc_rack_classify(ctx, dihedral, rep.out()) == YBC_ERR_DOMAIN);

    Obj sol;
    load(ctx, "lyubashenko_4.json", sol);
    CHECK(ybc_analyze(ctx, sol, "{\"no_such_option\": 1}", rep.out()) == YBC_ERR_DOMAIN);
    CHECK(last_code(ctx) == "bad_options");
    CHECK(ybc_analyze(ctx, sol, "{broken", rep.out()) == YBC_ERR_DOMAIN);
    CHECK(last_code(ctx) == "bad_options");
    CHECK(ybc_analyze(ctx, sol, "{\"timing\": 3}", rep.out()) == YBC_ERR_DOMAIN);

    const int32_t bad[] = {9};
    CHECK(ybc_word_normalize(ctx, sol, bad, 1, 0, nullptr, rep.out()) == YBC_ERR_DOMAIN);
    CHECK(last_code(ctx) == "letter_out_of_range");

    // schema-valid but mathematically invalid solution is rejected by nc ops
    Obj broken;
    REQUIRE(ybc_parse(ctx,
                      "{\"kind\": \"solution\", \"n\": 2, \"lambda\": [[0,1],[1,0]], "
                      "\"rho\": [[0,1],[0,1]]}",
                      broken.out()) == YBC_OK);
    int valid = -1;
    REQUIRE(ybc_validate(ctx, broken, &valid, nullptr) == YBC_OK);
    REQUIRE(valid == 0);
    CHECK(ybc_nc_check(ctx, broken, nullptr, rep.out()) == YBC_ERR_DOMAIN);
    CHECK(last_code(ctx) == "invalid_solution");
  }

  SUBCASE("a successful call clears the error state") {
    CHECK(ybc_parse(ctx, "{ not json", sink.out()) == YBC_ERR_PARSE);
    CHECK(!last_code(ctx).empty());
    Obj obj;
    load(ctx, "lyubashenko_4.json", obj);
    CHECK(last_code(ctx).empty());
    CHECK(std::string(ybc_last_error(ctx)).empty());
  }
}

TEST_CASE("analysis through the C surface reproduces the golden bytes") {
  Ctx ctx;
  for (const char* name : {"lyubashenko_4", "nc_example", "shift_z4"}) {
    CAPTURE(name);
    Obj obj;
    load(ctx, std::string(name) + ".json", obj);
    Str rep;
    REQUIRE(ybc_analyze(ctx, obj, "{\"timing\": false}", rep.out()) == YBC_OK);
    CHECK(rep.str() == read_file(golden(std::string(name) + ".analysis.json")));
  }
  // default options include wall-clock timing
  Obj obj;
  load(ctx, "lyubashenko_4.json", obj);
  Str timed;
  REQUIRE(ybc_analyze(ctx, obj, nullptr, timed.out()) == YBC_OK);
  json t = json::parse(timed.str());
  CHECK(t.contains("timing_ms"));
  CHECK(t.at("timing_ms").is_number());
}

TEST_CASE("pair-condition search and witness replay through the C surface") {
  Ctx ctx;

  Obj sat;
  load(ctx, "nc_example.json", sat);
  Str rep;
  REQUIRE(ybc_nc_check(ctx, sat, nullptr, rep.out()) == YBC_OK);
  json j = json::parse(rep.str());
  CHECK(j.at("nc").at("outcome") == "Satisfied");
  REQUIRE(j.at("nc").contains("witness"));;
  const json& w = j["nc"]["witness"];
  for (const char* key : {"Y", "Z", "a", "b"}) CHECK(w.at(key).is_array());

  // replay the found witness verbatim
  Str witness_rep;
  int ok = 0;
  std::string witness = json{{"Y", w["Y"]}, {"Z", w["Z"]}, {"a", w["a"]}, {"b", w["b"]}}.dump();
  REQUIRE(ybc_nc_verify(ctx, sat, witness.c_str(), &ok, witness_rep.out()) == YBC_OK);
  CHECK(ok == 1);
  CHECK(json::parse(witness_rep.str()).at("ok") == true);

  // the published witness pair
  Str rep2;
  ok = 0;
  REQUIRE(ybc_nc_verify(ctx, sat, "{\"Y\": [0,2], \"Z\": [0,3], \"a\": [0], \"b\": [0,0]}", &ok,
                        rep2.out()) == YBC_OK);
  CHECK(ok == 1);

  // identity words do not certify anything (success, but ok = 0)
  ok = 1;
  REQUIRE(ybc_nc_verify(ctx, sat, "{\"Y\": [0,2], \"Z\": [0,3], \"a\": [], \"b\": []}", &ok,
                        nullptr) == YBC_OK);
  CHECK(ok == 0);

  // malformed witnesses are domain errors
  Str sink;
  CHECK(ybc_nc_verify(ctx, sat, "{\"Y\": [0,2]}", &ok, sink.out()) == YBC_ERR_DOMAIN);
  CHECK(std::string(ybc_last_error_code(ctx.p)) == "bad_witness");
  CHECK(ybc_nc_verify(ctx, sat, "nope", &ok, sink.out()) == YBC_ERR_DOMAIN);
  CHECK(ybc_nc_verify(ctx, sat, "{\"Y\": [9], \"Z\": [0], \"a\": [], \"b\": [0]}", &ok,
                      sink.out()) == YBC_ERR_DOMAIN);
  CHECK(std::string(ybc_last_error_code(ctx.p)) == "letter_out_of_range");

  // a solution without the condition
  Obj unsat;
  load(ctx, "cyclic_neg_z3.json", unsat);
  Str rep3;
  REQUIRE(ybc_nc_check(ctx, unsat, nullptr, rep3.out()) == YBC_OK);
  CHECK(json::parse(rep3.str()).at("nc").at("outcome") == "NotSatisfied");

  // restricting the searched subset sizes still finds the size-2 witness
  Str rep4;
  REQUIRE(ybc_nc_check(ctx, sat, "{\"sizes\": [2]}", rep4.out()) == YBC_OK);
  CHECK(json::parse(rep4.str()).at("nc").at("outcome") == "Satisfied");
}

TEST_CASE("word calculus through the C surface") {
  Ctx ctx;
  Obj obj;
  load(ctx, "nc_example.json", obj);

  SUBCASE("normalization in the additive monoid") {
    const int32_t w[] = {2, 0};
    Str rep;
    REQUIRE(ybc_word_normalize(ctx, obj, w, 2, 0, nullptr, rep.out()) == YBC_OK);
    json j = json::parse(rep.str());
    CHECK(j.at("input") == json::array({2, 0}));
    CHECK(j.at("monoid") == "a");
    CHECK(j.at("overflow") == false);
    CHECK(j.at("class_size").get<uint64_t>() >= 1);
    // the canonical form is in the same class, so equality must say "true"
    std::vector<int32_t> canon;
    for (const auto& x : j.at("canonical")) canon.push_back(x.get<int32_t>());
    Str eq;
    REQUIRE(ybc_word_equal(ctx, obj, w, 2, canon.data(), canon.size(), 0, nullptr, eq.out()) ==
            YBC_OK);
    CHECK(json::parse(eq.str()).at("equal") == "true");
    // normalizing the canonical form is a fixed point
    Str rep2;
    REQUIRE(ybc_word_normalize(ctx, obj, canon.data(), canon.size(), 0, nullptr, rep2.out()) ==
            YBC_OK);
    CHECK(json::parse(rep2.str()).at("canonical") == j.at("canonical"));
  }

  SUBCASE("equality in both monoids") {
    Obj lyu;
    load(ctx, "lyubashenko_4.json", lyu);
    const int32_t l[] = {0, 1};
    const int32_t r[] = {0, 0};
    Str rep;
    REQUIRE(ybc_word_equal(ctx, lyu, l, 2, r, 2, 1, nullptr, rep.out()) == YBC_OK);
    json j = json::parse(rep.str());
    CHECK(j.at("monoid") == "m");
    CHECK(j.at("equal") == "true");

    // same letters, additive monoid: still a decision, either value is legal
    Str rep2;
    REQUIRE(ybc_word_equal(ctx, lyu, l, 2, r, 2, 0, nullptr, rep2.out()) == YBC_OK);
    std::string verdict = json::parse(rep2.str()).at("equal");
    CHECK((verdict == "true" || verdict == "false"));

    // words of different lengths are never equal
    const int32_t shorter[] = {0};
    Str rep3;
    REQUIRE(ybc_word_equal(ctx, lyu, l, 2, shorter, 1, 0, nullptr, rep3.out()) == YBC_OK);
    CHECK(json::parse(rep3.str()).at("equal") == "false");
  }

  SUBCASE("divisor sets agree between the divisors and normalize calls") {
    const int32_t w[] = {0, 1, 2};
    Str d, n;
    REQUIRE(ybc_word_divisors(ctx, obj, w, 3, 0, nullptr, d.out()) == YBC_OK);
    REQUIRE(ybc_word_normalize(ctx, obj, w, 3, 0, nullptr, n.out()) == YBC_OK);
    json jd = json::parse(d.str());
    json jn = json::parse(n.str());
    CHECK(jd.at("overflow") == false);
    CHECK(jd.at("divisors") == jn.at("divisors"));
    CHECK(jd.at("level").get<size_t>() == jd.at("divisors").size());
    for (const auto& x : jd.at("divisors")) {
      CHECK(x.get<int>() >= 0);
      CHECK(x.get<int>() < 4);
    }
  }

  SUBCASE("the empty word is its own class") {
    Str rep;
    REQUIRE(ybc_word_normalize(ctx, obj, nullptr, 0, 1, nullptr, rep.out()) == YBC_OK);
    json j = json::parse(rep.str());
    CHECK(j.at("input") == json::array());
    CHECK(j.at("canonical") == json::array());
    CHECK(j.at("class_size") == 1);
    CHECK(j.at("divisors") == json::array());
  }

  SUBCASE("a tiny class cap reports overflow rather than guessing") {
    Obj big;
    load(ctx, "conj_inv_s3.json", big);
    const int32_t w[] = {0, 1, 2, 3, 4, 5};
    Str rep;
    REQUIRE(ybc_word_normalize(ctx, big, w, 6, 0, "{\"class_cap\": 2}", rep.out()) == YBC_OK);
    json j = json::parse(rep.str());
    if (j.at("overflow") == true) {
      CHECK(j.at("canonical").is_null());
    } else {
      CHECK(j.at("class_size").get<uint64_t>() <= 2);
    }
  }
}

TEST_CASE("rack and brace conversions reproduce the golden bytes") {
  Ctx ctx;

  Obj constant2;
  load(ctx, "constant_rack_2.json", constant2);
  Str classify;
  REQUIRE(ybc_rack_classify(ctx, constant2, classify.out()) == YBC_OK);
  CHECK(classify.str() == read_file(golden("constant_rack_2.classify.json")));

  Obj two_block;
  load(ctx, "two_block_data_4.json", two_block);
  Str build;
  REQUIRE(ybc_rack_build(ctx, two_block, build.out()) == YBC_OK);
  CHECK(build.str() == read_file(golden("two_block_data_4.build.json")));

  // both outputs are themselves loadable documents of the right kind
  Obj built;
  REQUIRE(ybc_parse(ctx, build.p, built.out()) == YBC_OK);
  CHECK(std::string(ybc_object_kind(built)) == "rack");
  int valid = 0;
  REQUIRE(ybc_validate(ctx, built, &valid, nullptr) == YBC_OK);
  CHECK(valid == 1);
  Obj classified;
  REQUIRE(ybc_parse(ctx, classify.p, classified.out()) == YBC_OK);
  CHECK(std::string(ybc_object_kind(classified)) == "rack_data");

  for (const char* name : {"holomorph_brace_24", "semidirect_brace_64"}) {
    CAPTURE(name);
    Obj brace;
    load(ctx, std::string(name) + ".json", brace);
    Str socle, comm, sol;
    REQUIRE(ybc_brace_socle(ctx, brace, socle.out()) == YBC_OK);
    CHECK(socle.str() == read_file(golden(std::string(name) + ".socle.json")));
    REQUIRE(ybc_brace_commutator(ctx, brace, comm.out()) == YBC_OK);
    CHECK(comm.str() == read_file(golden(std::string(name) + ".commutator.json")));
    REQUIRE(ybc_brace_solution(ctx, brace, sol.out()) == YBC_OK);
    CHECK(sol.str() == read_file(golden(std::string(name) + ".solution.json")));
    // the produced solution parses and validates
    Obj s;
    REQUIRE(ybc_parse(ctx, sol.p, s.out()) == YBC_OK);
    CHECK(std::string(ybc_object_kind(s)) == "solution");
    int ok = 0;
    REQUIRE(ybc_validate(ctx, s, &ok, nullptr) == YBC_OK);
    CHECK(ok == 1);
  }
}

TEST_CASE("enumeration through the C surface") {
  Ctx ctx;

  uint64_t plain = 0;
  REQUIRE(ybc_enumerate(ctx, "solutions", 2, nullptr, nullptr, &plain) == YBC_OK);
  CHECK(plain > 0);

  std::vector<std::string> docs;
  uint64_t counted = 0;
  REQUIRE(ybc_enumerate(ctx, "solutions", 2, collect_cb, &docs, &counted) == YBC_OK);
  CHECK(counted == plain);
  CHECK(docs.size() == plain);
  for (const std::string& text : docs) {
    Obj obj;
    REQUIRE(ybc_parse(ctx, text.c_str(), obj.out()) == YBC_OK);
    CHECK(std::string(ybc_object_kind(obj)) == "solution");
    int valid = 0;
    REQUIRE(ybc_validate(ctx, obj, &valid, nullptr) == YBC_OK);
    CHECK(valid == 1);
  }

  // racks annotate each document with quandle/abelian flags in the note
  docs.clear();
  uint64_t racks = 0;
  REQUIRE(ybc_enumerate(ctx, "racks", 2, collect_cb, &docs, &racks) == YBC_OK);
  CHECK(docs.size() == racks);
  for (const std::string& text : docs) {
    json j = json::parse(text);
    CHECK(j.at("kind") == "rack");
    std::string note = j.at("note");
    CHECK(note.find("quandle=") != std::string::npos);
    CHECK(note.find("abelian=") != std::string::npos);
  }

  docs.clear();
  uint64_t data = 0;
  REQUIRE(ybc_enumerate(ctx, "rack_data", 3, collect_cb, &docs, &data) == YBC_OK);
  CHECK(docs.size() == data);
  for (const std::string& text : docs) CHECK(json::parse(text).at("kind") == "rack_data");

  uint64_t sink = 0;
  CHECK(ybc_enumerate(ctx, "widgets", 2, nullptr, nullptr, &sink) == YBC_ERR_DOMAIN);
  CHECK(std::string(ybc_last_error_code(ctx.p)) == "bad_enumeration_kind");
  CHECK(ybc_enumerate(ctx, "solutions", 9, nullptr, nullptr, &sink) == YBC_ERR_DOMAIN);
  CHECK(std::string(ybc_last_error_code(ctx.p)) == "enumeration_cap");
}
