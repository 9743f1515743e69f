#pragma once
// JSON document layer. Every object the tools exchange is a JSON document
// with a top-level "kind" discriminator: "solution", "rack", "brace", or
// "rack_data". Parsing checks structure only (shapes, ranges, types); the
// mathematical axioms are checked by the owning module's validator.
//
// Serialization is deterministic: fixed key order, two-space indent, one
// trailing newline. parse(serialize(doc)) == doc for every document.

#include <optional>
#include <string>

#include "ybcalc/brace.hpp"
#include "ybcalc/rack.hpp"
#include "ybcalc/solution.hpp"

namespace ybcalc {

// Unreadable file (missing, unreadable, not a regular file).
class FileError : public Error {
 public:
  explicit FileError(const std::string& m) : Error("file_error", m) {}
};

// Well-formed JSON whose "kind" is not one of the supported document kinds.
class KindUnknownError : public Error {
 public:
  explicit KindUnknownError(const std::string& m) : Error("kind_unknown", m) {}
};

enum class DocKind { Solution, Rack, Brace, RackData };

const char* doc_kind_name(DocKind k);

struct Document {
  DocKind kind = DocKind::Solution;
  std::optional<Solution> solution;
  std::optional<Rack> rack;
  std::optional<SkewBrace> brace;
  std::optional<RackData> rack_data;
  std::string note;  // optional free-text annotation carried through round trips
};

// Throws ParseError (with line/column), SchemaError (with a /field/path), or
// KindUnknownError.
Document parse_document(const std::string& text);

// Reads the file and parses it. Throws FileError when unreadable.
Document load_document(const std::string& path);

std::string serialize_document(const Document& doc);

// Conveniences wrapping the payload into a Document first.
std::string serialize_solution(const Solution& s, const std::string& note = "");
std::string serialize_rack(const Rack& r, const std::string& note = "");
std::string serialize_brace(const SkewBrace& b, const std::string& note = "");
std::string serialize_rack_data(const RackData& d, const std::string& note = "");

}  // namespace ybcalc
