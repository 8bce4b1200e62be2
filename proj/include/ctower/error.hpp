// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctower {

enum class ErrorCode {
  EmptySpace,
  DuplicateLabel,
  TooManyPoints,
  TooLarge,
  ForeignSubset,
  ForeignPoint,
  LengthMismatch,
  NonFinite,
  Normalization,
  Monotonicity,
  Endpoint,
  NonMonotoneDistortion,
  MapOutOfRange,
  NotComonotonic,
  EmptyCapacityList,
  DuplicateCapacity,
  DuplicateName,
  Overflow,
  InvalidTransform,
  InvalidUtility,
  LevelOutOfRange,
  Linkage,
  QuadratureNonConvergence,
  InvalidParams,
  LayerMismatch,
  BaseMismatch,
  Precondition,
  OffGrid,
  SizeGuard,
  Parse,
  NotFound,
  InvalidArgument,
  NotExact,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ctower
