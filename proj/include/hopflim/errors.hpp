#pragma once

#include <stdexcept>
#include <string>

namespace hopflim {

/// Process exit codes used by the command line tool.
enum class ExitCode : int {
  ok = 0,
  axiom_violation = 2,
  precondition = 3,
  internal_consistency = 4,
  parse = 5,
};

/// Base class of every error raised by the library. Each error class maps to
/// one exit code of the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const noexcept = 0;
};

/// A structure failed one of its axioms (coassociativity, counit, ...).
class AxiomError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::axiom_violation; }
};

/// Caller broke a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::precondition; }
};

/// Operands live over different ground fields.
class FieldMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Shapes of matrices or structure constants do not fit together.
class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Input lies outside the computable fragment (e.g. a non-cocommutative
/// factor handed to the tensor-product construction).
class UnsupportedFragment : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Two routes that must agree did not. Always a bug in this library.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::internal_consistency; }
};

/// Malformed document text, bad references, or malformed structure data.
class ParseError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::parse; }
};

/// Structure data with inconsistent shapes (e.g. a delta matrix that is not
/// n^2 x n). Reported like a parse error, never as an axiom failure.
class MalformedInput : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace hopflim
