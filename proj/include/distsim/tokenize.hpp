// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace distsim {

struct TokenizerConfig {
  bool lowercase = true;
  /// Bytes >= 0x80 (UTF-8 sequences) are kept as word characters.
  bool keep_non_ascii = true;
};

/// Splits on every maximal run of non-alphanumeric characters and drops empty tokens.
std::vector<std::string> tokenize(std::string_view document, const TokenizerConfig& config = {});

}  // namespace distsim
