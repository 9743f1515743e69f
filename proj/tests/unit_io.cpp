// Document layer: byte-exact round trips over the whole corpus, golden
// report bytes, and the parse/schema/kind/file error taxonomy.
#include "doctest.h"

#include <string>
#include <vector>

#include "helpers.hpp"
#include "json.hpp"
#include "ybcalc/analyze.hpp"
#include "ybcalc/brace.hpp"
#include "ybcalc/errors.hpp"
#include "ybcalc/io.hpp"
#include "ybcalc/rack.hpp"

using namespace ybcalc;

namespace {

struct CorpusEntry {
  const char* file;
  DocKind kind;
};

const std::vector<CorpusEntry> kCorpus = {
    {"conj_inv_s3.json", DocKind::Solution},
    {"constant_rack_2.json", DocKind::Rack},
    {"cyclic_neg_z3.json", DocKind::Solution},
    {"cyclic_neg_z4.json", DocKind::Solution},
    {"dihedral_rack_3.json", DocKind::Rack},
    {"holomorph_brace_24.json", DocKind::Brace},
    {"lyubashenko_4.json", DocKind::Solution},
    {"mpl2_4.json", DocKind::Solution},
    {"nc_example.json", DocKind::Solution},
    {"nc_variant_4.json", DocKind::Solution},
    {"semidirect_brace_64.json", DocKind::Brace},
    {"shift_z3.json", DocKind::Solution},
    {"shift_z4.json", DocKind::Solution},
    {"two_block_data_4.json", DocKind::RackData},
};

const std::vector<std::string> kSolutionNames = {
    "conj_inv_s3", "cyclic_neg_z3", "cyclic_neg_z4", "lyubashenko_4", "mpl2_4",
    "nc_example",  "nc_variant_4",  "shift_z3",      "shift_z4"};

std::string code_of(const Error& e) { return e.code(); }

}  // namespace

TEST_CASE("every corpus document serializes back to its exact bytes") {
  for (const CorpusEntry& entry : kCorpus) {
    CAPTURE(entry.file);
    std::string bytes = ybtest::read_file(ybtest::fixture_path(entry.file));
    Document doc = parse_document(bytes);
    CHECK(doc.kind == entry.kind);
    CHECK(serialize_document(doc) == bytes);
    // loading from disk goes through the same parser
    Document loaded = load_document(ybtest::fixture_path(entry.file));
    CHECK(serialize_document(loaded) == bytes);
    // a second trip is a fixed point
    CHECK(serialize_document(parse_document(serialize_document(doc))) == bytes);
  }
}

TEST_CASE("documents carry exactly the payload their kind names") {
  for (const CorpusEntry& entry : kCorpus) {
    CAPTURE(entry.file);
    Document doc = load_document(ybtest::fixture_path(entry.file));
    CHECK(doc.solution.has_value() == (entry.kind == DocKind::Solution));
    CHECK(doc.rack.has_value() == (entry.kind == DocKind::Rack));
    CHECK(doc.brace.has_value() == (entry.kind == DocKind::Brace));
    CHECK(doc.rack_data.has_value() == (entry.kind == DocKind::RackData));
  }
  CHECK(std::string(doc_kind_name(DocKind::Solution)) == "solution");
  CHECK(std::string(doc_kind_name(DocKind::Rack)) == "rack");
  CHECK(std::string(doc_kind_name(DocKind::Brace)) == "brace");
  CHECK(std::string(doc_kind_name(DocKind::RackData)) == "rack_data");
}

TEST_CASE("note annotations survive round trips and are omitted when empty") {
  Solution s = ybtest::load_solution("lyubashenko_4.json");
  std::string with_note = serialize_solution(s, "checked by hand");
  Document doc = parse_document(with_note);
  CHECK(doc.note == "checked by hand");
  CHECK(serialize_document(doc) == with_note);

  std::string without_note = serialize_solution(s);
  CHECK(without_note.find("note") == std::string::npos);
  CHECK(parse_document(without_note).note.empty());
}

TEST_CASE("malformed JSON raises a parse error with a position") {
  for (const char* bad : {"{ not json", "", "[1,2", "{\"kind\": }"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_document(bad), ParseError);
  }
  try {
    parse_document("{ not json");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(code_of(e) == "parse_error");
    CHECK(std::string(e.what()).find("line ") != std::string::npos);
  }
}

TEST_CASE("schema violations name the offending field") {
  // well-formed JSON, wrong shapes
  auto expect_schema = [](const std::string& text, const std::string& fragment) {
    CAPTURE(text);
    try {
      parse_document(text);
      FAIL_CHECK("expected SchemaError for " << text);
    } catch (const SchemaError& e) {
      CHECK(code_of(e) == "schema_error");
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_schema("[]", "/");
  expect_schema("{}", "kind");
  expect_schema("{\"kind\": \"solution\"}", "/n");
  expect_schema("{\"kind\": \"solution\", \"n\": 300}", "/n");
  expect_schema("{\"kind\": \"solution\", \"n\": 2}", "/lambda");
  expect_schema(
      "{\"kind\": \"solution\", \"n\": 2, \"lambda\": [[0,1],[0,1]], \"rho\": [[0,1],[0,9]]}",
      "/rho/1/1");
  expect_schema(
      "{\"kind\": \"solution\", \"n\": 2, \"lambda\": [[0,1],[0,1]], \"rho\": [[0,1]]}",
      "/rho");
  expect_schema("{\"kind\": \"rack\", \"n\": 1, \"op\": [[\"x\"]]}", "/op/0/0");
  expect_schema("{\"kind\": \"solution\", \"n\": 2, \"name\": 7}", "/name");
  expect_schema(
      "{\"kind\": \"solution\", \"index_base\": 1, \"n\": 1, \"lambda\": [[0]], \"rho\": [[0]]}",
      "/index_base");
}

TEST_CASE("an unsupported kind is its own error") {
  try {
    parse_document("{\"kind\": \"frobulator\", \"n\": 1}");
    FAIL("expected KindUnknownError");
  } catch (const KindUnknownError& e) {
    CHECK(code_of(e) == "kind_unknown");
    CHECK(std::string(e.what()).find("frobulator") != std::string::npos);
  }
  // structural validity is still checked first: a kind of the wrong type is a
  // schema problem, not an unknown kind
  CHECK_THROWS_AS(parse_document("{\"kind\": 3}"), SchemaError);
}

TEST_CASE("unreadable files raise a file error") {
  try {
    load_document("/nonexistent/definitely_missing.json");
    FAIL("expected FileError");
  } catch (const FileError& e) {
    CHECK(code_of(e) == "file_error");
    CHECK(std::string(e.what()).find("definitely_missing") != std::string::npos);
  }
}

TEST_CASE("analysis reports reproduce the golden bytes for every solution") {
  for (const std::string& name : kSolutionNames) {
    CAPTURE(name);
    Solution s = ybtest::load_solution(name + ".json");
    std::string report = analysis_report(s, AnalysisOptions{}, false).dump(2) + "\n";
    CHECK(report == ybtest::read_file(ybtest::golden_path(name + ".analysis.json")));
  }
}

TEST_CASE("timing is the only field that varies between runs") {
  Solution s = ybtest::load_solution("lyubashenko_4.json");
  Json plain = analysis_report(s, AnalysisOptions{}, false);
  CHECK(!plain.contains("timing_ms"));
  Json timed = analysis_report(s, AnalysisOptions{}, true);
  REQUIRE(timed.contains("timing_ms"));
  CHECK(timed["timing_ms"].is_number());
  timed.erase("timing_ms");
  CHECK(timed == plain);
  // determinism across repeated runs
  CHECK(analysis_report(s, AnalysisOptions{}, false) == plain);
}

TEST_CASE("brace reports reproduce the golden bytes") {
  for (const char* name : {"holomorph_brace_24", "semidirect_brace_64"}) {
    CAPTURE(name);
    SkewBrace b = ybtest::load_brace(std::string(name) + ".json");
    CHECK(brace_socle_report(b).dump(2) + "\n" ==
          ybtest::read_file(ybtest::golden_path(std::string(name) + ".socle.json")));
    CHECK(brace_commutator_report(b).dump(2) + "\n" ==
          ybtest::read_file(ybtest::golden_path(std::string(name) + ".commutator.json")));
    CHECK(serialize_solution(brace_solution(b)) ==
          ybtest::read_file(ybtest::golden_path(std::string(name) + ".solution.json")));
  }
}

TEST_CASE("rack reports reproduce the golden bytes") {
  Rack constant2 = ybtest::load_rack("constant_rack_2.json");
  CHECK(serialize_rack_data(rack_classify(constant2)) ==
        ybtest::read_file(ybtest::golden_path("constant_rack_2.classify.json")));

  Rack dihedral3 = ybtest::load_rack("dihedral_rack_3.json");
  CHECK(validation_report("rack", validate_rack(dihedral3)).dump(2) + "\n" ==
        ybtest::read_file(ybtest::golden_path("dihedral_rack_3.validate.json")));

  RackData two_block = ybtest::load_rack_data("two_block_data_4.json");
  CHECK(serialize_rack(rack_build(two_block)) ==
        ybtest::read_file(ybtest::golden_path("two_block_data_4.build.json")));
}
