#pragma once
// Error taxonomy shared across the library.
//
// Input problems (bad JSON, bad schema, tables that fail the axioms) are
// exceptions carrying a stable machine-readable code. Outcomes of bounded
// searches (node caps, budgets) are ordinary return values, never exceptions:
// an overflow is an answer, not a failure.

#include <stdexcept>
#include <string>

namespace ybcalc {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Unreadable input: not JSON at all.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& m) : Error("parse_error", m) {}
};

// Readable JSON that does not match the expected document layout.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& m) : Error("schema_error", m) {}
};

// Structurally fine input whose content violates a mathematical precondition
// (non-permutation row, axiom failure, mismatched sizes, ...).
class DomainError : public Error {
 public:
  DomainError(std::string code, const std::string& m) : Error(std::move(code), m) {}
};

// A derived object failed revalidation. Always a bug in this library.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& m) : Error("internal_validation_failure", m) {}
};

// Three-valued verdict for bounded equality tests.
enum class Tri { False, True, Overflow };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "overflow";
  }
}

}  // namespace ybcalc
