// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace distsim {

enum class ErrorKind {
  kInvalidParameter,
  kParse,
  kNotFound,
  kUndefinedProbability,
  kNegativeInfinity,
  kUndefinedMeasure,
  kInvalidSpec,
  kZeroDenominator,
  kFormat,
  kInvalidInput,
  kUndefinedCorrelation,
  kEmptyReport,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and machine-checkable;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace distsim
