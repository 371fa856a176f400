#include "netdiff/error.hpp"

namespace netdiff {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::InvalidNetwork: return "InvalidNetwork";
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::CannotEmptyNetwork: return "CannotEmptyNetwork";
    case ErrorCode::DegenerateNetwork: return "DegenerateNetwork";
    case ErrorCode::EmptyUnion: return "EmptyUnion";
    case ErrorCode::IncompletePartition: return "IncompletePartition";
    case ErrorCode::EmptyNetwork: return "EmptyNetwork";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::AliasCollision: return "AliasCollision";
    case ErrorCode::MissingProfile: return "MissingProfile";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace netdiff
