#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netdiff {

enum class ErrorCode {
  InvalidLabel,
  InvalidNetwork,
  DuplicatePair,
  SelfLoop,
  NonPositiveWeight,
  UnknownLabel,
  CannotEmptyNetwork,
  DegenerateNetwork,
  EmptyUnion,
  IncompletePartition,
  EmptyNetwork,
  UnknownAttribute,
  AliasCollision,
  MissingProfile,
  EmptyInput,
  ParseError,
  InvalidArgument,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Domain error. `what()` is "<ErrorName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace netdiff
