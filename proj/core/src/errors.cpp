#include "kgraph/errors.hpp"

namespace kgraph {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IterationBoundExceeded: return "IterationBoundExceeded";
    case ErrorCode::BoxTooLarge: return "BoxTooLarge";
    case ErrorCode::EmptyDimension: return "EmptyDimension";
    case ErrorCode::StructureContradiction: return "StructureContradiction";
    case ErrorCode::NoEntrance: return "NoEntrance";
    case ErrorCode::NotAWitness: return "NotAWitness";
    case ErrorCode::NotCofinal: return "NotCofinal";
    case ErrorCode::NotATraceOnH: return "NotATraceOnH";
    case ErrorCode::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorCode::GeneratorMismatch: return "GeneratorMismatch";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace kgraph
