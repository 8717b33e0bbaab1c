#pragma once

#include <stdexcept>
#include <string>

namespace coxdom {

// Every condition the library can reject, as a closed enumeration.  The CLI
// maps kinds onto exit codes (input errors vs. caps/inconclusive results),
// and tests assert on kinds rather than message text.
enum class ErrorKind {
  parse_error,
  invalid_bond,
  c1_violation,
  dimension_mismatch,
  index_out_of_range,
  insufficient_depth,
  cap_exceeded,
  unknown_root,
  not_independent,
  certification_failed,
  finite_subsystem,
  not_in_subsystem,
  not_dominant,
  backend_unsupported,
  internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::invalid_bond: return "InvalidBond";
    case ErrorKind::c1_violation: return "C1Violation";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::insufficient_depth: return "InsufficientDepth";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::unknown_root: return "UnknownRoot";
    case ErrorKind::not_independent: return "NotIndependent";
    case ErrorKind::certification_failed: return "CertificationFailed";
    case ErrorKind::finite_subsystem: return "FiniteSubsystem";
    case ErrorKind::not_in_subsystem: return "NotInSubsystem";
    case ErrorKind::not_dominant: return "NotDominant";
    case ErrorKind::backend_unsupported: return "BackendUnsupported";
    case ErrorKind::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace coxdom
