#pragma once
#include <stdexcept>
#include <string>

namespace nzeta {

enum class ErrorKind {
  Parse,
  Domain,          // bad input for an operation (zero poly, non-convenient, ...)
  Hypothesis,      // a theorem's hypothesis failed; CLI exit 2
  AlgebraicPoint,  // irrational singular point, needs user local data
  Undecided,
  Budget,
  Usage
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::AlgebraicPoint: return "algebraic-point";
    case ErrorKind::Undecided: return "undecided";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nzeta
