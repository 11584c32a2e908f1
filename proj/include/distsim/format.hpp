// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <string>

namespace distsim {

/// Shortest decimal form that round-trips to the same double; "nan", "inf" and "-inf"
/// for non-finite values.
std::string format_real(double value);

}  // namespace distsim
