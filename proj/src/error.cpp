// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/error.hpp"

namespace distsim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kNotFound: return "not-found";
    case ErrorKind::kUndefinedProbability: return "undefined-probability";
    case ErrorKind::kNegativeInfinity: return "negative-infinity";
    case ErrorKind::kUndefinedMeasure: return "undefined-measure";
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kZeroDenominator: return "zero-denominator";
    case ErrorKind::kFormat: return "format-error";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kUndefinedCorrelation: return "undefined-correlation";
    case ErrorKind::kEmptyReport: return "empty-report";
  }
  return "unknown";
}

}  // namespace distsim
