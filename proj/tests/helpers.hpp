// Shared helpers for the test binaries: locating fixture/golden files and
// loading documents of a known kind.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ybcalc/io.hpp"

namespace ybtest {

inline std::string source_dir() { return YBCALC_SOURCE_DIR; }

inline std::string fixture_path(const std::string& name) {
  return source_dir() + "/fixtures/" + name;
}

inline std::string golden_path(const std::string& name) {
  return source_dir() + "/tests/golden/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline ybcalc::Solution load_solution(const std::string& fixture_name) {
  ybcalc::Document doc = ybcalc::load_document(fixture_path(fixture_name));
  if (doc.kind != ybcalc::DocKind::Solution)
    throw std::runtime_error(fixture_name + " is not a solution document");
  return *doc.solution;
}

inline ybcalc::Rack load_rack(const std::string& fixture_name) {
  ybcalc::Document doc = ybcalc::load_document(fixture_path(fixture_name));
  if (doc.kind != ybcalc::DocKind::Rack)
    throw std::runtime_error(fixture_name + " is not a rack document");
  return *doc.rack;
}

inline ybcalc::SkewBrace load_brace(const std::string& fixture_name) {
  ybcalc::Document doc = ybcalc::load_document(fixture_path(fixture_name));
  if (doc.kind != ybcalc::DocKind::Brace)
    throw std::runtime_error(fixture_name + " is not a brace document");
  return *doc.brace;
}

inline ybcalc::RackData load_rack_data(const std::string& fixture_name) {
  ybcalc::Document doc = ybcalc::load_document(fixture_path(fixture_name));
  if (doc.kind != ybcalc::DocKind::RackData)
    throw std::runtime_error(fixture_name + " is not a rack-data document");
  return *doc.rack_data;
}

}  // namespace ybtest
