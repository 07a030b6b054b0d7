// Error categories shared by the library and the CLI exit-code mapping.
#pragma once

#include <stdexcept>
#include <string>

namespace skyrmion {

enum class ErrorCategory {
  InvalidParameter,  // bad physical constant or domain argument
  Validation,        // config value violates a module precondition
  Parse,             // malformed config text or data file
  SolverFailure,     // BVP iteration did not converge
  DegenerateSolve,   // singular Jacobian in the relaxation
  BlowUp,            // non-finite or runaway field during evolution
  Io,                // file could not be read or written
};

inline const char* category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::InvalidParameter: return "invalid-parameter";
    case ErrorCategory::Validation: return "validation";
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::SolverFailure: return "solver-failure";
    case ErrorCategory::DegenerateSolve: return "degenerate-solve";
    case ErrorCategory::BlowUp: return "blow-up";
    case ErrorCategory::Io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

  // Exit code for the CLI; 0 and 1 are reserved for success / generic failure.
  int exit_code() const {
    switch (category_) {
      case ErrorCategory::Parse: return 2;
      case ErrorCategory::Validation: return 3;
      case ErrorCategory::InvalidParameter: return 3;
      case ErrorCategory::SolverFailure: return 4;
      case ErrorCategory::DegenerateSolve: return 4;
      case ErrorCategory::BlowUp: return 5;
      case ErrorCategory::Io: return 6;
    }
    return 1;
  }

 private:
  ErrorCategory category_;
};

}  // namespace skyrmion
