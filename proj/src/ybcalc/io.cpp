#include "ybcalc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ybcalc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Line and column of a 1-based byte offset, for parse diagnostics.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

const json& field(const json& j, const std::string& path, const char* name) {
  if (!j.is_object()) schema_fail(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) schema_fail(path + "/" + name, "missing required field");
  return *it;
}

int int_field(const json& j, const std::string& path, const char* name, int lo, int hi) {
  const json& v = field(j, path, name);
  if (!v.is_number_integer())
    schema_fail(path + "/" + name, "expected an integer");
  long long x = v.get<long long>();
  if (x < lo || x > hi)
    schema_fail(path + "/" + name,
                "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  return static_cast<int>(x);
}

std::string optional_string(const json& j, const std::string& path, const char* name) {
  if (!j.is_object() || !j.contains(name)) return "";
  const json& v = j.at(name);
  if (!v.is_string()) schema_fail(path + "/" + name, "expected a string");
  return v.get<std::string>();
}

// Rows x cols matrix of integers in [0, range).
std::vector<std::vector<Pt>> matrix_field(const json& j, const std::string& path,
                                          const char* name, int rows, int cols, int range) {
  const json& m = field(j, path, name);
  std::string mp = path + "/" + name;
  if (!m.is_array() || static_cast<int>(m.size()) != rows)
    schema_fail(mp, "expected an array of " + std::to_string(rows) + " rows");
  std::vector<std::vector<Pt>> out(rows);
  for (int i = 0; i < rows; ++i) {
    const json& row = m[i];
    std::string rp = mp + "/" + std::to_string(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      schema_fail(rp, "expected a row of " + std::to_string(cols) + " entries");
    out[i].resize(cols);
    for (int k = 0; k < cols; ++k) {
      const json& e = row[k];
      if (!e.is_number_integer())
        schema_fail(rp + "/" + std::to_string(k), "expected an integer");
      long long x = e.get<long long>();
      if (x < 0 || x >= range)
        schema_fail(rp + "/" + std::to_string(k),
                    "entry " + std::to_string(x) + " outside [0, " + std::to_string(range) + ")");
      out[i][k] = static_cast<Pt>(x);
    }
  }
  return out;
}

void check_index_base(const json& j) {
  if (!j.contains("index_base")) return;
  const json& v = j.at("index_base");
  if (!v.is_number_integer() || v.get<long long>() != 0)
    schema_fail("/index_base", "only index_base 0 is supported");
}

int size_field(const json& j) {
  // Pt is one byte, so 255 points is the hard ceiling for any document.
  return int_field(j, "", "n", 1, 255);
}

Solution parse_solution(const json& j) {
  Solution s;
  s.n = size_field(j);
  s.name = optional_string(j, "", "name");
  s.lam = matrix_field(j, "", "lambda", s.n, s.n, s.n);
  s.rho = matrix_field(j, "", "rho", s.n, s.n, s.n);
  return s;
}

Rack parse_rack(const json& j) {
  Rack r;
  r.n = size_field(j);
  r.name = optional_string(j, "", "name");
  r.op = matrix_field(j, "", "op", r.n, r.n, r.n);
  return r;
}

SkewBrace parse_brace(const json& j) {
  SkewBrace b;
  b.n = size_field(j);
  b.name = optional_string(j, "", "name");
  b.add = matrix_field(j, "", "add", b.n, b.n, b.n);
  b.mul = matrix_field(j, "", "mul", b.n, b.n, b.n);
  return b;
}

RackData parse_rack_data(const json& j) {
  RackData d;
  d.name = optional_string(j, "", "name");
  const json& blocks = field(j, "", "blocks");
  if (!blocks.is_array() || blocks.empty()) schema_fail("/blocks", "expected a non-empty array");
  int n = 0;
  for (const auto& b : blocks) {
    if (!b.is_array() || b.empty()) schema_fail("/blocks", "each block must be a non-empty array");
    n += static_cast<int>(b.size());
  }
  if (n > 255) schema_fail("/blocks", "total size exceeds supported maximum 255");
  if (j.contains("n") && int_field(j, "", "n", 1, 255) != n)
    schema_fail("/n", "does not match the total block size");
  std::vector<char> seen(n, 0);
  const int k = static_cast<int>(blocks.size());
  d.blocks.resize(k);
  for (int i = 0; i < k; ++i) {
    std::string bp = "/blocks/" + std::to_string(i);
    for (const auto& e : blocks[i]) {
      if (!e.is_number_integer()) schema_fail(bp, "expected integer members");
      long long x = e.get<long long>();
      if (x < 0 || x >= n)
        schema_fail(bp, "member " + std::to_string(x) + " outside [0, " + std::to_string(n) + ")");
      if (seen[x]++) schema_fail(bp, "member " + std::to_string(x) + " repeated");
      d.blocks[i].push_back(static_cast<Pt>(x));
    }
  }
  const json& f = field(j, "", "f");
  if (!f.is_array() || static_cast<int>(f.size()) != k)
    schema_fail("/f", "expected " + std::to_string(k) + " rows");
  d.f.resize(k);
  for (int i = 0; i < k; ++i) {
    const int bs = static_cast<int>(d.blocks[i].size());
    const std::string fp = "/f/" + std::to_string(i);
    if (!f[i].is_array() || static_cast<int>(f[i].size()) != k)
      schema_fail(fp, "expected " + std::to_string(k) + " local maps");
    d.f[i].resize(k);
    for (int jj = 0; jj < k; ++jj) {
      const json& perm = f[i][jj];
      const std::string pp = fp + "/" + std::to_string(jj);
      if (!perm.is_array() || static_cast<int>(perm.size()) != bs)
        schema_fail(pp, "expected a map on " + std::to_string(bs) + " positions");
      d.f[i][jj].resize(bs);
      for (int t = 0; t < bs; ++t) {
        if (!perm[t].is_number_integer())
          schema_fail(pp + "/" + std::to_string(t), "expected an integer");
        long long x = perm[t].get<long long>();
        if (x < 0 || x >= bs)
          schema_fail(pp + "/" + std::to_string(t),
                      "entry " + std::to_string(x) + " outside [0, " + std::to_string(bs) + ")");
        d.f[i][jj][t] = static_cast<Pt>(x);
      }
    }
  }
  return d;
}

ordered_json matrix_json(const std::vector<std::vector<Pt>>& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : m) {
    ordered_json row = ordered_json::array();
    for (Pt x : r) row.push_back(static_cast<int>(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const char* doc_kind_name(DocKind k) {
  switch (k) {
    case DocKind::Solution: return "solution";
    case DocKind::Rack: return "rack";
    case DocKind::Brace: return "brace";
    default: return "rack_data";
  }
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
  if (!j.is_object()) schema_fail("/", "expected a JSON object");
  const json& kind = field(j, "", "kind");
  if (!kind.is_string()) schema_fail("/kind", "expected a string");
  check_index_base(j);

  Document doc;
  doc.note = optional_string(j, "", "note");
  const std::string k = kind.get<std::string>();
  if (k == "solution") {
    doc.kind = DocKind::Solution;
    doc.solution = parse_solution(j);
  } else if (k == "rack") {
    doc.kind = DocKind::Rack;
    doc.rack = parse_rack(j);
  } else if (k == "brace") {
    doc.kind = DocKind::Brace;
    doc.brace = parse_brace(j);
  } else if (k == "rack_data") {
    doc.kind = DocKind::RackData;
    doc.rack_data = parse_rack_data(j);
  } else {
    throw KindUnknownError("unsupported document kind '" + k + "'");
  }
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_document(const Document& doc) {
  ordered_json j;
  j["kind"] = doc_kind_name(doc.kind);
  switch (doc.kind) {
    case DocKind::Solution: {
      const Solution& s = *doc.solution;
      if (!s.name.empty()) j["name"] = s.name;
      j["n"] = s.n;
      j["index_base"] = 0;
      j["lambda"] = matrix_json(s.lam);
      j["rho"] = matrix_json(s.rho);
      break;
    }
    case DocKind::Rack: {
      const Rack& r = *doc.rack;
      if (!r.name.empty()) j["name"] = r.name;
      j["n"] = r.n;
      j["index_base"] = 0;
      j["op"] = matrix_json(r.op);
      break;
    }
    case DocKind::Brace: {
      const SkewBrace& b = *doc.brace;
      if (!b.name.empty()) j["name"] = b.name;
      j["n"] = b.n;
      j["index_base"] = 0;
      j["add"] = matrix_json(b.add);
      j["mul"] = matrix_json(b.mul);
      break;
    }
    case DocKind::RackData: {
      const RackData& d = *doc.rack_data;
      if (!d.name.empty()) j["name"] = d.name;
      int n = 0;
      for (const auto& b : d.blocks) n += static_cast<int>(b.size());
      j["n"] = n;
      j["index_base"] = 0;
      j["blocks"] = matrix_json(d.blocks);
      ordered_json f = ordered_json::array();
      for (const auto& row : d.f) f.push_back(matrix_json(row));
      j["f"] = std::move(f);
      break;
    }
  }
  if (!doc.note.empty()) j["note"] = doc.note;
  return j.dump(2) + "\n";
}

std::string serialize_solution(const Solution& s, const std::string& note) {
  Document d;
  d.kind = DocKind::Solution;
  d.solution = s;
  d.note = note;
  return serialize_document(d);
}

std::string serialize_rack(const Rack& r, const std::string& note) {
  Document d;
  d.kind = DocKind::Rack;
  d.rack = r;
  d.note = note;
  return serialize_document(d);
}

std::string serialize_brace(const SkewBrace& b, const std::string& note) {
  Document d;
  d.kind = DocKind::Brace;
  d.brace = b;
  d.note = note;
  return serialize_document(d);
}

std::string serialize_rack_data(const RackData& rd, const std::string& note) {
  Document d;
  d.kind = DocKind::RackData;
  d.rack_data = rd;
  d.note = note;
  return serialize_document(d);
}

}  // namespace ybcalc
