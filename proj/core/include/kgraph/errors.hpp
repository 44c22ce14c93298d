#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgraph {

enum class ErrorCode {
  InvalidInput,
  UnknownVertex,
  LengthMismatch,
  IterationBoundExceeded,
  BoxTooLarge,
  EmptyDimension,
  StructureContradiction,
  NoEntrance,
  NotAWitness,
  NotCofinal,
  NotATraceOnH,
  WellDefinednessFailure,
  GeneratorMismatch,
  GenerationFailed,
  Parse,
  Io,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors that signal a configured search or iteration limit
/// rather than a property of the input.
constexpr bool is_bound_error(ErrorCode code) noexcept {
  return code == ErrorCode::IterationBoundExceeded || code == ErrorCode::BoxTooLarge;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kgraph
