#pragma once

#include <stdexcept>
#include <string>

namespace adeq {

enum class ErrorCode {
  MalformedCode,
  NonPlanar,
  Disconnected,
  DuplicateEdgeLabel,
  IncompleteState,
  MixedTwistState,
  SizeOne,
  ReducibleDiagram,
  BudgetExceeded,
  DisconnectedGraph,
  FloodingContradiction,
  PreconditionMissing,
  NonPrimeRegion,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Internal consistency checks. These guard model invariants (Euler counts,
// involution closure, coverage bookkeeping); a failure means a bug, not bad
// user input.
inline void require_internal(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::Internal, std::string("internal invariant violated: ") + what);
}

}  // namespace adeq
